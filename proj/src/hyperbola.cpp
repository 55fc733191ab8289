#include "wb/hyperbola.hpp"

#include <numeric>
#include <stdexcept>

namespace wb {

namespace {

// #{y in [start, start+len) : y = r (mod q)}
u64 count_in_progression(i64 start, i64 len, u64 r, u64 q) {
    if (len <= 0) return 0;
    i64 qi = i64(q);
    i64 off = (i64(r) - start) % qi;
    if (off < 0) off += qi;
    i64 first = start + off;
    i64 last = start + len - 1;
    if (first > last) return 0;
    return u64((last - first) / qi) + 1;
}

}  // namespace

u64 count_points(const Modulus& cm, u64 lambda, const Box& box) {
    const u64 c = cm.value();
    lambda %= c;
    if (box.x_len <= 0 || box.y_len <= 0) return 0;
    u64 total = 0;
    for (i64 x = box.x_start; x < box.x_start + box.x_len; ++x) {
        i64 xm = x % i64(c);
        if (xm < 0) xm += i64(c);
        u64 g = (xm == 0) ? c : std::gcd(u64(xm), c);
        if (lambda % g != 0) continue;
        u64 cg = c / g;
        if (cg == 1) {
            total += u64(box.y_len);
            continue;
        }
        u64 xp = u64(xm) / g;  // coprime to cg since gcd(x, c) = g exactly
        u64 y0 = mulmod(lambda / g % cg, inverse_mod(xp, cg), cg);
        total += count_in_progression(box.y_start, box.y_len, y0, cg);
    }
    return total;
}

CgBound cg_bound(const Modulus& cm, u64 lambda, const Box& box,
                 std::optional<double> alpha, std::optional<double> beta) {
    const u64 c = cm.value();
    lambda %= c;
    const double X = double(box.x_len), Y = double(box.y_len);
    if (X > 4.0 * double(c) || Y > 4.0 * double(c))
        throw std::domain_error("cg_bound: X, Y must be <= 4c");
    const double gcd_term = double(lambda == 0 ? c : std::gcd(lambda, c));
    if (box.x_len <= 0 || box.y_len <= 0) return {0.0, gcd_term, ApproxResult{1, 1, 0, 0}};
    double a = alpha ? *alpha : (double(box.x_start) + (X - 1) / 2) / double(c);
    double b = beta ? *beta : (double(box.y_start) + (Y - 1) / 2) / double(c);
    ApproxTarget tg(double(c) / X, double(c) / Y, a, b);
    ApproxResult t = t_value(tg);
    return {X * Y / double(c) * t.value, gcd_term, t};
}

}  // namespace wb
