#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "halasz/distance.hpp"
#include "halasz/sieve_table.hpp"
#include "halasz/spectral.hpp"

namespace halasz {

// Bookkeeping for one run of a theorem-shaped claim. Claims whose hypothesis
// fails on the given inputs are flagged vacuous (never pass) with the failed
// hypothesis named in `reason`. Every verdict carries the full inputs record
// and can be reproduced bit-for-bit through rerun().
struct TheoremVerdict {
    std::string claim_id;
    nlohmann::json inputs;
    double lhs = 0.0;
    double rhs = 0.0;
    double implied_constant = std::numeric_limits<double>::quiet_NaN(); // lhs/rhs when rhs > 0
    bool pass = false;
    bool vacuous = false;
    std::string reason;
    nlohmann::json extras;
    std::vector<std::string> artifacts;

    void finalize(); // fills implied_constant from lhs/rhs
    std::string to_json() const;
};

// Re-executes a claim from its serialized inputs record.
TheoremVerdict rerun(const nlohmann::json& inputs);

// --- Lipschitz scan -------------------------------------------------------

struct LipschitzPoint {
    double w = 0.0;
    double measured = 0.0;
    double bound = 0.0;
    double ratio = 0.0;
};

// measured = |x^-1 sum_{n<=x} f(n) n^{-i phi} - (x/w)^-1 sum_{n<=x/w} f(n) n^{-i phi}|,
// bound = log(log x/log(ew)) ((log w + (log log x)^2)/log x)^{min(2^kappa(1-2/pi),1)}
//         (log x)^{2^kappa-1}.  Requires 1 <= w <= x^{1/3}.
LipschitzPoint lipschitz_delta(const SieveTable& table, uint64_t x, double w, double phi);

// One verdict over a w-sweep; lhs = max measured/bound, pass = all finite.
TheoremVerdict lipschitz_scan(const SieveTable& table, uint64_t x, double phi,
                              const std::vector<double>& ws);

// --- Remainder of the spectral decomposition ------------------------------

// |x^-1 S(x,f) - (x^{i phi}/(1+i phi)) x^-1 sum f(n) n^{-i phi}| / E_kappa(x).
double mangerel_remainder(const SieveTable& table, const SpectralReport& report);
TheoremVerdict mangerel_check(const SieveTable& table, const SpectralReport& report);

// --- Decay-exponent bounds under the largeness hypothesis ------------------

// Hypotheses: eta > (log x)^{-1/100} and eta_largeness(x) >= eta; otherwise
// vacuous. Records |phi|*eta and N - 2 log(1/eta) as the measured constants.
TheoremVerdict lem_m_check(const SieveTable& table, const SpectralReport& report, double eta);

// --- Lower bound on partial sums from a small distance ---------------------

struct LowerBoundSearch {
    std::string spec_name;
    uint64_t x = 0;
    double psi = 0.0;
    double dsq = 0.0;    // D^2(f, n^{i psi}; x)
    double c = 0.0;
    double lambda = 0.0; // dsq + log(1+|psi|) + c
    double gamma = 0.0;  // 1/(lambda e^lambda)
    uint64_t y_lo = 0;   // max(2, x^gamma), clamped
    bool clamped = false;
    double grid_ratio = 1.05;
    uint64_t best_y = 0;
    double best_ratio = 0.0; // max |S(y)| (1+|psi|) / (e^-dsq y (log y)^{2^kappa-1})
    double c_pass = 0.01;
    bool pass = false;
};

LowerBoundSearch lower_bound_search(const SieveTable& table, const SpectralReport& report,
                                    double c, double grid_ratio = 1.05, double c_pass = 0.01);
TheoremVerdict lower_bound_verdict(const LowerBoundSearch& s);

// --- Product-sum pipeline ---------------------------------------------------

// (i) eta = min of the two observed largeness values, vacuous when
//     eta <= max_j (log x_j)^{-1/100};
// (ii) xi = C eta^{1+2^{kappa+3}};
// (iii) product spec with kappa' = 2 kappa;
// (iv) geometric scan of [2, X_max] for |S(x, f1 f2)| >= xi x (log x)^{2^{2kappa}-1}
//      with hits only counted from x >= max(2, min(x1,x2)^{xi^2}).
// Reports the first hit, the best ratio over the admissible range, and the
// largest C for which the run would pass.
TheoremVerdict main_theorem_pipeline(const MultFuncSpec& spec1, uint64_t x1,
                                     const MultFuncSpec& spec2, uint64_t x2, double C,
                                     uint64_t X_max, double grid_ratio = 1.02,
                                     const SieveTable* product_table = nullptr);

// The pipeline instantiated with f1 = f2 = hecke_delta (kappa 1, exponent 17).
TheoremVerdict cuspform_corollary(uint64_t x1, uint64_t x2, uint64_t X_max, double C,
                                  const SieveTable* product_table = nullptr);

// --- Decay of the mean value when |phi| is large ----------------------------

// Vacuous unless |phi| >= (log x)^{2^{kappa-1}}. phi_override (test hook)
// replaces the report's phi; |phi| <= 2 trips the denominator guard.
TheoremVerdict gs_decay_check(const SieveTable& table, const SpectralReport& report,
                              double phi_override = std::numeric_limits<double>::quiet_NaN());

// --- Halasz implied constant for one (f, x) --------------------------------

TheoremVerdict halasz_constant(const SieveTable& table, const SpectralReport& report,
                               HalaszVariant variant);

// --- Randomized triangle-inequality sweep -----------------------------------

// n_tuples seeded draws of equal-kappa catalog pairs, t in [t_lo, t_hi],
// x from xs. lhs = violation count (pass iff 0); extras record the worst margin.
TheoremVerdict triangle_sweep(uint64_t seed, std::size_t n_tuples, const std::vector<uint64_t>& xs,
                              double t_lo, double t_hi);

} // namespace halasz
