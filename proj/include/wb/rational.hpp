#pragma once

#include <cstdint>

namespace wb {

// distance to the nearest integer
double dist_mod1(double x);

struct ApproxTarget {
    double M, N;     // balancing weights, > 0
    double alpha, beta;  // stored in [0, 1)

    ApproxTarget(double M_, double N_, double alpha_, double beta_);
};

struct ApproxResult {
    long long t_star;
    double value;       // t* + M ||alpha t*|| + N ||beta t*||
    double alpha_dist;
    double beta_dist;
};

// Exact global minimizer of t + M||alpha t|| + N||beta t|| over t >= 1.
// Enumeration terminates once t exceeds the current best (objective >= t);
// ties broken toward smaller t.
ApproxResult t_value(const ApproxTarget& target);

struct DirichletWitness {
    long long t;
    double alpha_dist;
    double beta_dist;
};

// Pigeonhole over the (ceil(A) ceil(B) + 2)-point sequence {(t alpha, t beta)}:
// yields t <= 4AB with ||alpha t|| <= 4/A, ||beta t|| <= 4/B (A, B >= 1).
DirichletWitness dirichlet_witness(double alpha, double beta, double A, double B);

}  // namespace wb
