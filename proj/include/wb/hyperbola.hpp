#pragma once

#include <cstdint>
#include <optional>

#include "wb/arith.hpp"
#include "wb/rational.hpp"

namespace wb {

// Discrete box: x in {x_start, ..., x_start + x_len - 1}, same for y.
struct Box {
    i64 x_start = 0;
    i64 x_len = 0;
    i64 y_start = 0;
    i64 y_len = 0;
};

// Exact #{(x, y) in box : x y = lambda (mod c)}. Per x: g = gcd(x, c)
// (gcd(0, c) = c); if g | lambda, y runs over one residue class mod c/g.
u64 count_points(const Modulus& c, u64 lambda, const Box& box);

struct CgBound {
    double t_term;    // (XY/c) T_{c/X, c/Y}(alpha, beta)
    double gcd_term;  // gcd(lambda, c)
    ApproxResult t;   // the minimizing t behind t_term
};

// Lemma-style bound data: callers compare count_points against
// K (1 + log c)^2 (t_term + gcd_term). alpha, beta default to box
// midpoints over c. Requires 0 < X, Y <= 4c (degenerate empty box allowed).
CgBound cg_bound(const Modulus& c, u64 lambda, const Box& box,
                 std::optional<double> alpha = std::nullopt,
                 std::optional<double> beta = std::nullopt);

}  // namespace wb
