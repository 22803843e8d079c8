#include "halasz/distance.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "halasz/catalog.hpp"
#include "halasz/errors.hpp"
#include "halasz/lvalue.hpp"
#include "halasz/parallel.hpp"
#include "halasz/primes.hpp"

namespace halasz {

DistanceReport distance_sq(const MultFuncSpec& spec, double t, uint64_t x) {
    spec.validate();
    if (x < 2) throw validation_error("distance needs x >= 2");

    DistanceReport rep;
    rep.spec_name = spec.name;
    rep.kappa_eff = spec.kappa;
    rep.t = t;
    rep.x = x;
    rep.l_gap = std::numeric_limits<double>::quiet_NaN();

    auto pl = prime_list(x);
    std::size_t np = pl->count_below(x);
    rep.prime_count = np;
    const double two_k = std::pow(2.0, double(spec.kappa));
    const double t_eff = t + spec.twist;

    constexpr std::size_t kChunk = 1 << 12;
    std::size_t n_chunks = (np + kChunk - 1) / kChunk;
    std::vector<double> parts(n_chunks, 0.0);
    parallel_chunks(n_chunks, [&](std::size_t c) {
        std::size_t lo = c * kChunk, hi = std::min(lo + kChunk, np);
        kahan_acc<double> acc;
        for (std::size_t i = lo; i < hi; ++i) {
            uint64_t p = pl->primes[i];
            cplx fp = spec.rule(p, 1) * unit_phase(-t_eff * std::log(double(p)));
            double term = (two_k - fp.real()) / double(p);
            if (term < -1e-9)
                throw numerical_error("negative distance summand at p = " + std::to_string(p) +
                                      " for " + spec.name + " (|f(p)| > 2^kappa?)");
            acc.add(term);
        }
        parts[c] = acc.value();
    });
    rep.dsq = pairwise_fold(std::move(parts));
    return rep;
}

DistanceReport l_distance_gap(const MultFuncSpec& spec, double t, uint64_t x) {
    DistanceReport rep = distance_sq(spec, t, x);
    cplx L = euler_product_value(spec, 1.0 + 1.0 / std::log(double(x)), t, x);
    double a = std::abs(L);
    double target = std::pow(2.0, double(spec.kappa)) * std::log(std::log(double(x))) - rep.dsq;
    if (a == 0.0) {
        rep.l_is_zero = true;
        rep.l_gap = -std::numeric_limits<double>::infinity();
    } else {
        rep.l_gap = std::log(a) - target;
    }
    return rep;
}

TriangleVerdict triangle_check(const MultFuncSpec& spec1, uint64_t x1, double t1,
                               const MultFuncSpec& spec2, uint64_t x2, double t2) {
    if (spec1.kappa != spec2.kappa)
        throw validation_error("triangle_check needs equal kappa, got " +
                               std::to_string(spec1.kappa) + " and " + std::to_string(spec2.kappa));

    TriangleVerdict v;
    v.spec1 = spec1.name;
    v.spec2 = spec2.name;
    v.x1 = x1;
    v.x2 = x2;
    v.t1 = t1;
    v.t2 = t2;

    double d1 = std::sqrt(distance_sq(spec1, t1, x1).dsq);
    double d2 = std::sqrt(distance_sq(spec2, t2, x2).dsq);
    v.lhs = d1 + d2;

    MultFuncSpec prod = product_spec(spec1, spec2); // kappa = 2k, so 2^{2k} in the summand
    double dp = std::sqrt(distance_sq(prod, t1 + t2, std::min(x1, x2)).dsq);
    v.rhs = dp / std::pow(2.0, double(spec1.kappa) / 2.0);
    v.pass = v.lhs >= v.rhs - 1e-12;
    return v;
}

std::string DistanceReport::csv_row() const {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%.17g,%llu,%.17g,%.17g,%llu",
                  t, static_cast<unsigned long long>(x), dsq, l_gap,
                  static_cast<unsigned long long>(prime_count));
    std::string name = spec_name;
    bool quote = name.find(',') != std::string::npos;
    return (quote ? "\"" + name + "\"" : name) + "," + buf;
}

std::string TriangleVerdict::to_json() const {
    nlohmann::json j;
    j["spec1"] = spec1;
    j["spec2"] = spec2;
    j["x1"] = x1;
    j["x2"] = x2;
    j["t1"] = t1;
    j["t2"] = t2;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["pass"] = pass;
    return j.dump();
}

} // namespace halasz
