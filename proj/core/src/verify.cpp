#include "halasz/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "halasz/catalog.hpp"
#include "halasz/errors.hpp"
#include "halasz/lvalue.hpp"
#include "halasz/numeric.hpp"

namespace halasz {

namespace {

double u01(std::mt19937_64& rng) {
    // portable uniform in [0,1): top 53 bits, identical across platforms
    return double(rng() >> 11) * 0x1.0p-53;
}

// Geometric integer grid over [lo, hi], deduplicated, endpoints included.
std::vector<uint64_t> geometric_grid(uint64_t lo, uint64_t hi, double ratio) {
    std::vector<uint64_t> g;
    if (lo < 2) lo = 2;
    if (lo > hi) return g;
    double v = double(lo);
    uint64_t prev = 0;
    while (true) {
        uint64_t u = static_cast<uint64_t>(std::floor(v));
        if (u > hi) break;
        if (u >= lo && u != prev) {
            g.push_back(u);
            prev = u;
        }
        v *= ratio;
        if (uint64_t(v) == prev && v < double(hi)) v = double(prev + 1);
    }
    if (g.empty() || g.back() != hi) g.push_back(hi);
    return g;
}

nlohmann::json report_inputs(const SpectralReport& rep, const std::string& func) {
    nlohmann::json j;
    j["func"] = func;
    j["x"] = rep.x;
    j["T0"] = rep.T0;
    j["grid_step"] = rep.grid_step;
    j["cutoff"] = rep.cutoff;
    return j;
}

} // namespace

void TheoremVerdict::finalize() {
    implied_constant =
        rhs > 0.0 ? lhs / rhs : std::numeric_limits<double>::quiet_NaN();
}

std::string TheoremVerdict::to_json() const {
    nlohmann::json j;
    j["claim"] = claim_id;
    j["inputs"] = inputs;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["implied_constant"] = implied_constant;
    j["pass"] = pass;
    j["vacuous"] = vacuous;
    j["reason"] = reason;
    j["extras"] = extras;
    j["artifacts"] = artifacts;
    return j.dump();
}

// --- Lipschitz --------------------------------------------------------------

LipschitzPoint lipschitz_delta(const SieveTable& table, uint64_t x, double w, double phi) {
    if (x < 16 || x > table.x_max())
        throw validation_error("lipschitz needs 16 <= x <= table range");
    double cap = std::cbrt(double(x));
    if (!(w >= 1.0) || w > cap * (1.0 + 1e-12))
        throw validation_error("lipschitz needs 1 <= w <= x^{1/3} = " + std::to_string(cap));

    LipschitzPoint pt;
    pt.w = w;
    cplx t1 = table.twisted_sum(x, phi) / double(x);
    uint64_t y = static_cast<uint64_t>(std::floor(double(x) / w));
    cplx t2 = table.twisted_sum(y, phi) * (w / double(x));
    pt.measured = std::abs(t1 - t2);

    double lx = std::log(double(x)), llx = std::log(lx), lw = std::log(w);
    double pw2k = std::pow(2.0, double(table.spec().kappa));
    double expo = std::min(pw2k * (1.0 - 2.0 / M_PI), 1.0);
    pt.bound = std::log(lx / (1.0 + lw)) * std::pow((lw + llx * llx) / lx, expo) *
               std::pow(lx, pw2k - 1.0);
    pt.ratio = pt.bound > 0.0 ? pt.measured / pt.bound : 0.0;
    return pt;
}

TheoremVerdict lipschitz_scan(const SieveTable& table, uint64_t x, double phi,
                              const std::vector<double>& ws) {
    TheoremVerdict v;
    v.claim_id = "lipschitz";
    v.inputs["claim"] = "lipschitz";
    v.inputs["func"] = table.spec().name;
    v.inputs["x"] = x;
    v.inputs["phi"] = phi;
    v.inputs["ws"] = ws;

    double max_ratio = 0.0;
    bool finite = true;
    nlohmann::json rows = nlohmann::json::array();
    for (double w : ws) {
        LipschitzPoint pt = lipschitz_delta(table, x, w, phi);
        finite = finite && std::isfinite(pt.measured) && std::isfinite(pt.bound);
        max_ratio = std::max(max_ratio, pt.ratio);
        rows.push_back({{"w", pt.w}, {"measured", pt.measured}, {"bound", pt.bound},
                        {"ratio", pt.ratio}});
    }
    v.extras["points"] = rows;
    v.lhs = max_ratio;
    v.rhs = 1.0;
    v.pass = finite;
    v.finalize();
    return v;
}

// --- Spectral remainder ------------------------------------------------------

double mangerel_remainder(const SieveTable& table, const SpectralReport& report) {
    uint64_t x = static_cast<uint64_t>(report.x);
    if (x > table.x_max()) throw validation_error("remainder x beyond table range");
    double phi = report.phi;
    cplx mean = table.partial_sum(x) / double(x);
    cplx twisted = table.twisted_sum(x, phi) / double(x);
    cplx factor = unit_phase(phi * std::log(double(x))) / cplx{1.0, phi};
    return std::abs(mean - factor * twisted) / e_kappa(report.x, report.kappa);
}

TheoremVerdict mangerel_check(const SieveTable& table, const SpectralReport& report) {
    TheoremVerdict v;
    v.claim_id = "mangerel";
    v.inputs = report_inputs(report, table.spec().name);
    v.inputs["claim"] = "mangerel";

    uint64_t x = static_cast<uint64_t>(report.x);
    cplx mean = table.partial_sum(x) / double(x);
    cplx twisted = table.twisted_sum(x, report.phi) / double(x);
    cplx factor = unit_phase(report.phi * std::log(double(x))) / cplx{1.0, report.phi};
    v.lhs = std::abs(mean - factor * twisted);
    v.rhs = e_kappa(report.x, report.kappa);
    v.extras["phi"] = report.phi;
    v.pass = std::isfinite(v.lhs);
    v.finalize();
    return v;
}

// --- lem:M bounds -------------------------------------------------------------

TheoremVerdict lem_m_check(const SieveTable& table, const SpectralReport& report, double eta) {
    TheoremVerdict v;
    v.claim_id = "lem_m";
    v.inputs = report_inputs(report, table.spec().name);
    v.inputs["claim"] = "lem_m";
    v.inputs["eta"] = eta;

    double threshold = std::pow(std::log(report.x), -0.01);
    double eta_obs = eta_largeness(table, report.x);
    v.extras["eta_obs"] = eta_obs;
    v.extras["eta_threshold"] = threshold;

    if (!(eta > threshold)) {
        v.vacuous = true;
        v.reason = "eta <= (log x)^{-1/100}";
        return v;
    }
    if (eta_obs < eta) {
        v.vacuous = true;
        v.reason = "eta-largeness hypothesis fails (|S(x,f)| below eta x (log x)^{2^kappa-1})";
        return v;
    }

    v.lhs = report.N;
    v.rhs = 2.0 * std::log(1.0 / eta);
    v.extras["phi_times_eta"] = std::abs(report.phi) * eta;
    v.extras["n_gap"] = report.N - v.rhs;
    v.pass = std::isfinite(report.N) && std::isfinite(report.phi);
    v.finalize();
    return v;
}

// --- Lower bound from a small distance ----------------------------------------

LowerBoundSearch lower_bound_search(const SieveTable& table, const SpectralReport& report,
                                    double c, double grid_ratio, double c_pass) {
    if (c < 0.0) throw validation_error("lower_bound_search needs c >= 0");
    if (!(grid_ratio > 1.0)) throw validation_error("grid ratio must exceed 1");
    uint64_t x = static_cast<uint64_t>(report.x);
    if (x > table.x_max()) throw validation_error("lower bound x beyond table range");

    LowerBoundSearch s;
    s.spec_name = table.spec().name;
    s.x = x;
    s.psi = report.psi;
    s.c = c;
    s.grid_ratio = grid_ratio;
    s.c_pass = c_pass;
    s.dsq = distance_sq(table.spec(), report.psi, x).dsq;
    s.lambda = s.dsq + std::log1p(std::abs(report.psi)) + c;

    double le = s.lambda * std::exp(s.lambda);
    s.gamma = le > 1.0 ? 1.0 / le : 1.0; // gamma clamped into (0, 1]
    double y_lo_real = std::pow(double(x), s.gamma);
    s.clamped = y_lo_real < 2.0 || le <= 1.0;
    s.y_lo = static_cast<uint64_t>(std::max(2.0, std::ceil(y_lo_real)));
    if (s.y_lo > x) s.y_lo = x;

    const double weight = (1.0 + std::abs(s.psi)) / std::exp(-s.dsq);
    const double pe = std::pow(2.0, double(table.spec().kappa)) - 1.0;
    for (uint64_t y : geometric_grid(s.y_lo, x, grid_ratio)) {
        double ratio = std::abs(table.partial_sum(y)) * weight /
                       (double(y) * std::pow(std::log(double(y)), pe));
        if (ratio > s.best_ratio) {
            s.best_ratio = ratio;
            s.best_y = y;
        }
    }
    s.pass = s.best_ratio >= c_pass;
    return s;
}

TheoremVerdict lower_bound_verdict(const LowerBoundSearch& s) {
    TheoremVerdict v;
    v.claim_id = "lower_bound";
    v.inputs["claim"] = "lower_bound";
    v.inputs["func"] = s.spec_name;
    v.inputs["x"] = s.x;
    v.inputs["c"] = s.c;
    v.inputs["c_pass"] = s.c_pass;
    v.inputs["grid_ratio"] = s.grid_ratio;
    v.inputs["psi"] = s.psi;
    v.lhs = s.best_ratio;
    v.rhs = s.c_pass;
    v.pass = s.pass;
    v.extras["dsq"] = s.dsq;
    v.extras["lambda"] = s.lambda;
    v.extras["gamma"] = s.gamma;
    v.extras["y_lo"] = s.y_lo;
    v.extras["clamped"] = s.clamped;
    v.extras["best_y"] = s.best_y;
    v.finalize();
    return v;
}

// --- Theorem pipeline -----------------------------------------------------------

TheoremVerdict main_theorem_pipeline(const MultFuncSpec& spec1, uint64_t x1,
                                     const MultFuncSpec& spec2, uint64_t x2, double C,
                                     uint64_t X_max, double grid_ratio,
                                     const SieveTable* product_table) {
    if (spec1.kappa != spec2.kappa)
        throw validation_error("pipeline needs equal kappa for both functions");
    if (x1 < 3 || x2 < 3) throw validation_error("pipeline needs x1, x2 >= 3");
    if (X_max < 2) throw validation_error("pipeline needs X_max >= 2");
    if (!(C > 0.0)) throw validation_error("pipeline needs C > 0");

    TheoremVerdict v;
    v.claim_id = "theorem1";
    v.inputs["claim"] = "theorem1";
    v.inputs["f1"] = spec1.name;
    v.inputs["x1"] = x1;
    v.inputs["f2"] = spec2.name;
    v.inputs["x2"] = x2;
    v.inputs["C"] = C;
    v.inputs["X_max"] = X_max;
    v.inputs["grid_ratio"] = grid_ratio;

    SieveTable t1 = SieveTable::build(spec1, x1);
    double eta1 = eta_largeness(t1, double(x1));
    double eta2;
    if (spec2.name == spec1.name && x2 == x1) {
        eta2 = eta1;
    } else {
        SieveTable t2 = SieveTable::build(spec2, x2);
        eta2 = eta_largeness(t2, double(x2));
    }
    double eta = std::min(eta1, eta2);
    double threshold =
        std::max(std::pow(std::log(double(x1)), -0.01), std::pow(std::log(double(x2)), -0.01));
    v.extras["eta"] = eta;
    v.extras["eta1"] = eta1;
    v.extras["eta2"] = eta2;
    v.extras["eta_threshold"] = threshold;

    const double exponent = 1.0 + std::pow(2.0, double(spec1.kappa) + 3.0);
    v.extras["exponent"] = exponent;

    if (eta <= threshold) {
        v.vacuous = true;
        v.reason = "eta-largeness hypothesis fails (eta <= max_j (log x_j)^{-1/100})";
        return v;
    }

    double xi = C * std::pow(eta, exponent);
    v.extras["xi"] = xi;

    MultFuncSpec prod = product_spec(spec1, spec2);
    SieveTable local;
    if (product_table == nullptr || product_table->x_max() < X_max ||
        product_table->spec().name != prod.name) {
        local = SieveTable::build(prod, X_max);
        product_table = &local;
    }

    uint64_t xmin = std::min(x1, x2);
    double x_start_real = std::pow(double(xmin), xi * xi);
    bool clamped = x_start_real < 2.0;
    double x_start = std::max(2.0, x_start_real);
    v.extras["x_start"] = x_start;
    v.extras["x_start_clamped"] = clamped;

    const double pe = std::pow(2.0, 2.0 * double(spec1.kappa)) - 1.0;
    const double log_xmin = std::log(double(xmin));
    uint64_t first_hit = 0;
    double best_ratio = 0.0;
    uint64_t best_x = 0;
    double largest_c = 0.0;
    auto grid = geometric_grid(2, X_max, grid_ratio);
    for (uint64_t u : grid) {
        double lu = std::log(double(u));
        double ratio = std::abs(product_table->partial_sum(u)) / (double(u) * std::pow(lu, pe));
        largest_c = std::max(largest_c,
                             std::min(ratio, std::sqrt(lu / log_xmin)) / std::pow(eta, exponent));
        if (double(u) + 0.5 < x_start) continue; // below the admissible range
        if (ratio > best_ratio) {
            best_ratio = ratio;
            best_x = u;
        }
        if (first_hit == 0 && ratio >= xi) first_hit = u;
    }

    v.lhs = best_ratio;
    v.rhs = xi;
    v.pass = first_hit != 0;
    v.extras["first_hit_x"] = first_hit;
    v.extras["best_ratio_x"] = best_x;
    v.extras["largest_C"] = largest_c;
    v.extras["grid_points"] = grid.size();
    v.finalize();
    return v;
}

TheoremVerdict cuspform_corollary(uint64_t x1, uint64_t x2, uint64_t X_max, double C,
                                  const SieveTable* product_table) {
    MultFuncSpec delta = hecke_delta_spec();
    TheoremVerdict v = main_theorem_pipeline(delta, x1, delta, x2, C, X_max, 1.02, product_table);
    v.claim_id = "corollary12";
    v.inputs["claim"] = "corollary12";
    // kappa = 1: the product-sum exponent 1 + 2^{kappa+3} specializes to 17
    v.extras["exponent_check_17"] = (1 + (1 << (1 + 3))) == 17;
    return v;
}

// --- Mean-value decay for large |phi| ---------------------------------------------

TheoremVerdict gs_decay_check(const SieveTable& table, const SpectralReport& report,
                              double phi_override) {
    TheoremVerdict v;
    v.claim_id = "gs_decay";
    v.inputs = report_inputs(report, table.spec().name);
    v.inputs["claim"] = "gs_decay";

    const bool forced = !std::isnan(phi_override);
    double phi = forced ? phi_override : report.phi;
    if (forced) v.inputs["phi_override"] = phi_override;
    double lx = std::log(report.x), llx = std::log(lx);
    double threshold = std::pow(lx, std::pow(2.0, double(report.kappa) - 1.0));
    v.extras["phi"] = phi;
    v.extras["threshold"] = threshold;

    if (!forced && std::abs(phi) < threshold) {
        v.vacuous = true;
        v.reason = "requires |phi| >= (log x)^{2^{kappa-1}}";
        return v;
    }
    if (std::abs(phi) - 2.0 <= 0.0)
        throw numerical_error("decay bound denominator guard: |phi| - 2 <= 0 at phi = " +
                              std::to_string(phi));

    double pw = std::pow(2.0, double(report.kappa));
    double rhs = std::pow(lx, pw - 1.0) / (std::abs(phi) - 2.0) +
                 std::pow(llx, 2.0 * pw * (1.0 - 2.0 / M_PI) + 1.0) /
                     std::pow(lx, 1.0 - 2.0 * pw / M_PI) +
                 std::pow(llx, pw) / lx;
    uint64_t x = static_cast<uint64_t>(report.x);
    v.lhs = std::abs(table.partial_sum(x)) / double(x);
    v.rhs = rhs;
    v.pass = std::isfinite(v.lhs) && std::isfinite(v.rhs);
    v.finalize();
    return v;
}

// --- Halasz constant ------------------------------------------------------------

TheoremVerdict halasz_constant(const SieveTable& table, const SpectralReport& report,
                               HalaszVariant variant) {
    TheoremVerdict v;
    v.claim_id = "halasz_const";
    v.inputs = report_inputs(report, table.spec().name);
    v.inputs["claim"] = "halasz_const";
    v.inputs["variant"] = halasz_variant_name(variant);

    uint64_t x = static_cast<uint64_t>(report.x);
    v.lhs = std::abs(table.partial_sum(x)) / double(x);
    v.rhs = halasz_rhs(report, variant);
    v.extras["N"] = report.N;
    v.extras["M"] = report.M;
    v.extras["phi"] = report.phi;
    v.extras["psi"] = report.psi;
    v.pass = std::isfinite(v.lhs) && std::isfinite(v.rhs) && v.rhs > 0.0;
    v.finalize();
    return v;
}

// --- Triangle sweep ----------------------------------------------------------------

TheoremVerdict triangle_sweep(uint64_t seed, std::size_t n_tuples, const std::vector<uint64_t>& xs,
                              double t_lo, double t_hi) {
    if (xs.empty()) throw validation_error("triangle sweep needs at least one x");
    auto specs = catalog();

    TheoremVerdict v;
    v.claim_id = "triangle_sweep";
    v.inputs["claim"] = "triangle_sweep";
    v.inputs["seed"] = seed;
    v.inputs["n_tuples"] = n_tuples;
    v.inputs["xs"] = xs;
    v.inputs["t_lo"] = t_lo;
    v.inputs["t_hi"] = t_hi;

    std::mt19937_64 rng(seed);
    std::size_t violations = 0;
    double worst_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n_tuples; ++i) {
        const MultFuncSpec& a = specs[rng() % specs.size()];
        std::vector<std::size_t> same;
        for (std::size_t j = 0; j < specs.size(); ++j)
            if (specs[j].kappa == a.kappa) same.push_back(j);
        const MultFuncSpec& b = specs[same[rng() % same.size()]];
        double t1 = t_lo + (t_hi - t_lo) * u01(rng);
        double t2 = t_lo + (t_hi - t_lo) * u01(rng);
        uint64_t x1 = xs[rng() % xs.size()];
        uint64_t x2 = xs[rng() % xs.size()];
        TriangleVerdict tv = triangle_check(a, x1, t1, b, x2, t2);
        if (!tv.pass) ++violations;
        worst_margin = std::min(worst_margin, tv.lhs - tv.rhs);
    }

    v.lhs = double(violations);
    v.rhs = 0.0;
    v.pass = violations == 0;
    v.extras["worst_margin"] = worst_margin;
    return v;
}

// --- Rerun -----------------------------------------------------------------------

TheoremVerdict rerun(const nlohmann::json& in) {
    const std::string claim = in.at("claim").get<std::string>();

    auto spec_of = [&](const char* key) { return parse_func(in.at(key).get<std::string>()); };
    auto report_of = [&](const MultFuncSpec& spec) {
        return spectral_search(spec, in.at("x").get<double>(), in.at("T0").get<double>(),
                               in.at("grid_step").get<double>(), in.at("cutoff").get<uint64_t>());
    };

    if (claim == "lipschitz") {
        MultFuncSpec spec = spec_of("func");
        uint64_t x = in.at("x").get<uint64_t>();
        SieveTable t = SieveTable::build(spec, x);
        return lipschitz_scan(t, x, in.at("phi").get<double>(),
                              in.at("ws").get<std::vector<double>>());
    }
    if (claim == "mangerel" || claim == "lem_m" || claim == "gs_decay" ||
        claim == "halasz_const" || claim == "lower_bound") {
        MultFuncSpec spec = spec_of("func");
        uint64_t x = static_cast<uint64_t>(in.at("x").get<double>());
        SieveTable t = SieveTable::build(spec, x);
        if (claim == "lower_bound") {
            // reconstruct the search from its recorded psi
            SpectralReport rep;
            rep.spec_name = spec.name;
            rep.kappa = spec.kappa;
            rep.x = double(x);
            rep.psi = in.at("psi").get<double>();
            LowerBoundSearch s =
                lower_bound_search(t, rep, in.at("c").get<double>(),
                                   in.at("grid_ratio").get<double>(), in.at("c_pass").get<double>());
            return lower_bound_verdict(s);
        }
        SpectralReport rep = report_of(spec);
        if (claim == "mangerel") return mangerel_check(t, rep);
        if (claim == "lem_m") return lem_m_check(t, rep, in.at("eta").get<double>());
        if (claim == "gs_decay")
            return gs_decay_check(t, rep,
                                  in.contains("phi_override")
                                      ? in.at("phi_override").get<double>()
                                      : std::numeric_limits<double>::quiet_NaN());
        HalaszVariant var = HalaszVariant::N;
        std::string vs = in.at("variant").get<std::string>();
        if (vs == "M") var = HalaszVariant::M;
        else if (vs == "mvf") var = HalaszVariant::mvf;
        return halasz_constant(t, rep, var);
    }
    if (claim == "theorem1")
        return main_theorem_pipeline(spec_of("f1"), in.at("x1").get<uint64_t>(), spec_of("f2"),
                                     in.at("x2").get<uint64_t>(), in.at("C").get<double>(),
                                     in.at("X_max").get<uint64_t>(),
                                     in.at("grid_ratio").get<double>());
    if (claim == "corollary12")
        return cuspform_corollary(in.at("x1").get<uint64_t>(), in.at("x2").get<uint64_t>(),
                                  in.at("X_max").get<uint64_t>(), in.at("C").get<double>());
    if (claim == "triangle_sweep")
        return triangle_sweep(in.at("seed").get<uint64_t>(), in.at("n_tuples").get<std::size_t>(),
                              in.at("xs").get<std::vector<uint64_t>>(), in.at("t_lo").get<double>(),
                              in.at("t_hi").get<double>());
    throw validation_error("rerun: unknown claim '" + claim + "'");
}

} // namespace halasz
