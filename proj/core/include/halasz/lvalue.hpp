#pragma once
#include <cstdint>
#include <limits>
#include <string>

#include "halasz/mult_func.hpp"
#include "halasz/sieve_table.hpp"

namespace halasz {

enum class LStrategy { direct, euler };

// One evaluation of the truncated Dirichlet series L(sigma + it, f) near the
// 1-line, with an explicit (heuristic, always reported) tail estimate.
struct LProbe {
    std::string spec_name;
    uint32_t kappa = 1;
    double x = 0.0;       // scale fixing sigma0 = 1 + 1/log x
    double sigma = 0.0;   // actual sigma used (sigma0 unless overridden)
    double t = 0.0;
    LStrategy strategy = LStrategy::euler;
    uint64_t cutoff = 0;
    cplx value{0.0, 0.0};
    double tail_estimate = 0.0;

    double abs_value() const { return std::abs(value); }
};

// Evaluates L(1 + 1/log x + it, f).
//   direct: sum_{n<=cutoff} f(n) n^{-s}; needs `table` covering cutoff
//           (built on the fly when null). Tail from partial summation against
//           sum_{n<=y}|f(n)| <= 2^kappa (2^kappa)! y (log y)^{2^kappa - 1}.
//   euler:  prod_{p<=cutoff} sum_{p^a<=cutoff} f(p^a) p^{-as}; tail integrates
//           2^kappa / p^sigma over p > cutoff (value-scale estimate).
// sigma_override (test hook): when finite, replaces sigma0 entirely.
LProbe l_value(const MultFuncSpec& spec, double x, double t, LStrategy strategy, uint64_t cutoff,
               const SieveTable* table = nullptr,
               double sigma_override = std::numeric_limits<double>::quiet_NaN());

// Euler-strategy evaluation without probe bookkeeping (hot path for scans).
cplx euler_product_value(const MultFuncSpec& spec, double sigma, double t, uint64_t cutoff);

const char* strategy_name(LStrategy s);

} // namespace halasz
