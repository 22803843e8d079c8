#pragma once
#include <cstdint>
#include <string>

#include "halasz/mult_func.hpp"
#include "halasz/spectral.hpp"

namespace halasz {

// D^2(f, n^{it}; x) = sum_{p<=x} (2^kappa - Re(f(p) p^{-it})) / p, together
// with the gap of the L-comparison
//   l_gap = log|L(sigma0+it, f)| - (2^kappa log log x - D^2),
// which the comparison bounds by an absolute O(1) we only record.
struct DistanceReport {
    std::string spec_name;
    uint32_t kappa_eff = 1; // the kappa whose 2^kappa enters the summand
    double t = 0.0;
    uint64_t x = 0;
    double dsq = 0.0;
    uint64_t prime_count = 0;
    double l_gap = 0.0;       // filled by l_distance_gap; NaN otherwise
    bool l_is_zero = false;   // |L| = 0 sentinel; l_gap = -inf

    std::string csv_row() const; // spec,t,x,dsq,l_gap,prime_count
};

// Compensated prime sum, fixed-chunk parallel with a deterministic
// pairwise-tree reduction. Throws numerical_error if a summand is negative
// beyond fp dust (the termwise bound |f(p)| <= 2^kappa must hold).
DistanceReport distance_sq(const MultFuncSpec& spec, double t, uint64_t x);

// distance_sq plus the comparison gap from the Euler truncation at p <= x.
DistanceReport l_distance_gap(const MultFuncSpec& spec, double t, uint64_t x);

// Triangle-type inequality for the distance:
//   D(f1, n^{it1}; x1) + D(f2, n^{it2}; x2)
//     >= 2^{-kappa/2} D(f1 f2, n^{i(t1+t2)}; min(x1, x2)),
// the product distance taken with 2^{2 kappa}. Requires kappa1 == kappa2.
struct TriangleVerdict {
    std::string spec1, spec2;
    uint64_t x1 = 0, x2 = 0;
    double t1 = 0.0, t2 = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false; // lhs >= rhs - 1e-12

    std::string to_json() const;
};

TriangleVerdict triangle_check(const MultFuncSpec& spec1, uint64_t x1, double t1,
                               const MultFuncSpec& spec2, uint64_t x2, double t2);

} // namespace halasz
