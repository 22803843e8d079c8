#include "halasz/lvalue.hpp"

#include <cmath>

#include "halasz/errors.hpp"
#include "halasz/parallel.hpp"

namespace halasz {

namespace {

double factorial(uint32_t n) {
    double f = 1.0;
    for (uint32_t i = 2; i <= n; ++i) f *= double(i);
    return f;
}

// E1(x) for x > 0.
double exp_int_e1(double x) { return -std::expint(-x); }

// sigma * 2^k (2^k)! * Gamma(2^k, delta*log(cutoff)) / delta^{2^k}, the
// partial-summation tail of sum_{n>cutoff} |f(n)| n^{-sigma} under the
// divisor-bound growth of the partial sums.
double direct_tail(uint32_t kappa, double sigma, uint64_t cutoff) {
    double delta = sigma - 1.0;
    if (delta <= 0.0) return std::numeric_limits<double>::infinity();
    uint32_t m = static_cast<uint32_t>(std::pow(2.0, double(kappa))) - 1; // 2^kappa - 1
    double c_kappa = double(m + 1) * factorial(m + 1);                    // 2^kappa (2^kappa)!
    double L = std::log(double(cutoff));
    double z = delta * L;
    // Gamma(m+1, z) = m! e^-z sum_{k<=m} z^k/k!
    double series = 0.0, zk = 1.0, kfact = 1.0;
    for (uint32_t k = 0; k <= m; ++k) {
        if (k > 0) { zk *= z; kfact *= double(k); }
        series += zk / kfact;
    }
    double inc_gamma = factorial(m) * std::exp(-z) * series;
    return sigma * c_kappa * inc_gamma / std::pow(delta, double(m + 1));
}

} // namespace

const char* strategy_name(LStrategy s) { return s == LStrategy::direct ? "direct" : "euler"; }

cplx euler_product_value(const MultFuncSpec& spec, double sigma, double t, uint64_t cutoff) {
    auto pl = prime_list(cutoff);
    const double t_eff = t + spec.twist;
    cplx prod{1.0, 0.0};
    for (uint32_t p : pl->primes) {
        if (p > cutoff) break;
        double lp = std::log(double(p));
        cplx ps = std::pow(double(p), -sigma) * unit_phase(-t_eff * lp); // p^-s
        cplx local{1.0, 0.0};
        cplx pas = ps;
        uint64_t pk = p;
        for (uint32_t a = 1;; ++a) {
            local += spec.rule(p, a) * pas;
            if (pk > cutoff / p) break;
            pk *= p;
            pas *= ps;
        }
        prod *= local;
    }
    return prod;
}

LProbe l_value(const MultFuncSpec& spec, double x, double t, LStrategy strategy, uint64_t cutoff,
               const SieveTable* table, double sigma_override) {
    spec.validate();
    if (!(x >= 16.0)) throw validation_error("l_value needs x >= 16");
    double t_cap = 10.0 * std::pow(std::log(x), std::pow(2.0, double(spec.kappa)));
    if (!(std::abs(t) <= t_cap))
        throw validation_error("l_value |t| exceeds 10 (log x)^{2^kappa} = " + std::to_string(t_cap));
    if (cutoff < 100) throw validation_error("l_value cutoff below 100 is a meaningless truncation");

    LProbe probe;
    probe.spec_name = spec.name;
    probe.kappa = spec.kappa;
    probe.x = x;
    probe.sigma = std::isnan(sigma_override) ? 1.0 + 1.0 / std::log(x) : sigma_override;
    probe.t = t;
    probe.strategy = strategy;
    probe.cutoff = cutoff;

    if (strategy == LStrategy::direct) {
        SieveTable local;
        if (table == nullptr || table->x_max() < cutoff) {
            local = SieveTable::build(spec, cutoff);
            table = &local;
        } else if (table->spec().name != spec.name) {
            throw validation_error("l_value direct: table holds '" + table->spec().name +
                                   "', expected '" + spec.name + "'");
        }
        const double sigma = probe.sigma;
        constexpr uint64_t kChunk = 1 << 16;
        uint64_t n_chunks = (cutoff + kChunk - 1) / kChunk;
        std::vector<cplx> parts(n_chunks, cplx{0.0, 0.0});
        const auto& vals = table->values();
        parallel_chunks(n_chunks, [&](std::size_t c) {
            uint64_t lo = c * kChunk + 1;
            uint64_t hi = std::min<uint64_t>(lo + kChunk - 1, cutoff);
            kahan_acc<cplx> acc;
            for (uint64_t n = lo; n <= hi; ++n) {
                double ln = std::log(double(n));
                acc.add(vals[n] * std::exp(-sigma * ln) * unit_phase(-t * ln));
            }
            parts[c] = acc.value();
        });
        probe.value = pairwise_fold(std::move(parts));
        probe.tail_estimate = direct_tail(spec.kappa, probe.sigma, cutoff);
    } else {
        probe.value = euler_product_value(spec, probe.sigma, t, cutoff);
        double delta = probe.sigma - 1.0;
        double log_tail =
            std::pow(2.0, double(spec.kappa)) * exp_int_e1(delta * std::log(double(cutoff)));
        probe.tail_estimate = std::abs(probe.value) * std::expm1(log_tail);
    }
    return probe;
}

} // namespace halasz
