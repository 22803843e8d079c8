#pragma once
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "halasz/mult_func.hpp"

namespace halasz {

// Decay exponents and their maximizers for one (f, x) pair:
//   phi = argmax_{|t|<=T0} |L(sigma0+it, f)|,        e^-N (log x)^{2^kappa} = |L(sigma0+i phi)|
//   psi = argmax_{|t|<=T0} |L(sigma0+it)|/|sigma0+it|, e^-M (log x)^{2^kappa} = that maximum
// Both stored probe values are kept so the defining identities can be checked
// exactly against the report.
struct SpectralReport {
    std::string spec_name;
    uint32_t kappa = 1;
    double x = 0.0;
    double T0 = 0.0;
    double grid_step = 0.0;
    double sigma0 = 0.0;
    uint64_t cutoff = 0;

    double phi = 0.0;
    double N = 0.0;
    double abs_l_at_phi = 0.0;

    double psi = 0.0;
    double M = 0.0;
    double m_ratio_at_psi = 0.0;

    bool refined = false;
    uint64_t grid_points = 0;
    std::vector<std::string> warnings;

    std::string to_json() const; // single JSON object, sorted keys
};

double default_T0(double x, uint32_t kappa);       // (log x)^{2^kappa}
double default_grid_step(double x);                // 1/(8 log x)

// Exhaustive grid scan over [-T0, T0] plus three rounds of 10x local
// refinement (final |dt| <= grid_step/1000 <= 1e-4 for x >= 16). Ties within
// 1e-12 relative of the maximum break to the smallest |t|, then the smaller t.
// Deterministic for any worker count. L is the Euler-product truncation at
// p <= cutoff (default: cutoff = x).
SpectralReport spectral_search(const MultFuncSpec& spec, double x,
                               double T0 = std::numeric_limits<double>::quiet_NaN(),
                               double grid_step = std::numeric_limits<double>::quiet_NaN(),
                               uint64_t cutoff = 0);

// Engine: out[i] = L(sigma + i(t0 + i*h), f) via the truncated Euler product,
// for i in [0, count). Fixed-block parallel, thread-count independent.
void euler_grid_scan(const MultFuncSpec& spec, double sigma, uint64_t cutoff, double t0, double h,
                     std::size_t count, cplx* out);

// Lipschitz/remainder error scale: kappa = 1 branch
// (log x)^{-1+4/pi} (log log x)^{5-8/pi}, else (log x)^{2^kappa-2} (log log x)^3.
double e_kappa(double x, uint32_t kappa);

enum class HalaszVariant { M, N, mvf };

// The bracketed right-hand sides of the mean-value bounds, without the
// absolute implied constant:
//   M:   (M+1)e^-M (log x)^{2^kappa-1} + (log x)^{2^kappa-1}/T0 + (log log x)^{2^kappa}/log x
//   N:   same with N
//   mvf: (log x)^{2^kappa-1} ((N+1)e^-N/(1+|phi|) + E_kappa(x)/(log x)^{2^kappa-1})
double halasz_rhs(const SpectralReport& report, HalaszVariant variant);

const char* halasz_variant_name(HalaszVariant v);

} // namespace halasz
