#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "halasz/catalog.hpp"
#include "halasz/errors.hpp"
#include "halasz/verify.hpp"

using namespace halasz;

namespace {
const SieveTable& tau_table_1e4() {
    static SieveTable t = SieveTable::build(tau_pow_spec(1), 10'000);
    return t;
}

const SpectralReport& tau_report_1e4() {
    static SpectralReport r = spectral_search(tau_pow_spec(1), 10'000.0);
    return r;
}
} // namespace

TEST_CASE("lipschitz delta vanishes exactly at w = 1") {
    SieveTable t = SieveTable::build(one_spec(), 10'000);
    LipschitzPoint p = lipschitz_delta(t, 10'000, 1.0, 0.0);
    CHECK(p.measured == 0.0);
    CHECK(std::isfinite(p.bound));
}

TEST_CASE("lipschitz delta for the constant function at even and uneven w") {
    SieveTable t = SieveTable::build(one_spec(), 10'000);
    // w = 10 divides evenly: both means are exactly 1
    CHECK(lipschitz_delta(t, 10'000, 10.0, 0.0).measured == 0.0);
    // w = 7: the floor costs (1 - 7*1428/10^4) = 4e-4
    LipschitzPoint p = lipschitz_delta(t, 10'000, 7.0, 0.0);
    CHECK(p.measured == doctest::Approx(4e-4).epsilon(1e-10));
    CHECK(p.measured <= 1e-3);
}

TEST_CASE("lipschitz rejects w outside [1, x^(1/3)]") {
    SieveTable t = SieveTable::build(one_spec(), 10'000);
    CHECK_THROWS_AS(lipschitz_delta(t, 10'000, 0.5, 0.0), validation_error);
    CHECK_THROWS_AS(lipschitz_delta(t, 10'000, 22.0, 0.0), validation_error);
    CHECK_NOTHROW(lipschitz_delta(t, 10'000, 21.0, 0.0)); // cbrt(1e4) = 21.54
}

TEST_CASE("lipschitz scan verdict is finite with recorded maximum") {
    SieveTable t = SieveTable::build(moebius_spec(), 10'000);
    TheoremVerdict v = lipschitz_scan(t, 10'000, 0.0, {1, 2, 4, 8, 16});
    CHECK(v.pass);
    CHECK(std::isfinite(v.lhs));
    CHECK(v.extras["points"].size() == 5);
    CHECK(v.extras["points"][0]["measured"].get<double>() == 0.0);
}

TEST_CASE("spectral remainder vanishes when phi is zero") {
    CHECK(mangerel_remainder(tau_table_1e4(), tau_report_1e4()) == 0.0);
}

TEST_CASE("spectral remainder is finite for oscillating functions") {
    SieveTable mu = SieveTable::build(moebius_spec(), 10'000);
    SpectralReport rep = spectral_search(moebius_spec(), 10'000.0);
    double r = mangerel_remainder(mu, rep);
    CHECK(std::isfinite(r));
    CHECK(r >= 0.0);
}

TEST_CASE("lem_m verdict paths") {
    TheoremVerdict v = lem_m_check(tau_table_1e4(), tau_report_1e4(), 1.0);
    CHECK(!v.vacuous);
    CHECK(v.pass);
    CHECK(std::abs(v.extras["n_gap"].get<double>()) <= 5.0); // the O(1) at desk scale
    CHECK(v.extras["phi_times_eta"].get<double>() == 0.0);   // phi = 0 for tau

    SieveTable mu = SieveTable::build(moebius_spec(), 10'000);
    SpectralReport mur = spectral_search(moebius_spec(), 10'000.0);
    TheoremVerdict vac = lem_m_check(mu, mur, 0.5);
    CHECK(vac.vacuous);
    CHECK(!vac.pass);
    CHECK(vac.reason.find("largeness") != std::string::npos);

    TheoremVerdict below = lem_m_check(mu, mur, 1e-6);
    CHECK(below.vacuous);
    CHECK(below.reason.find("1/100") != std::string::npos);
}

TEST_CASE("lower bound search on tau clamps the left endpoint and passes") {
    LowerBoundSearch s = lower_bound_search(tau_table_1e4(), tau_report_1e4(), 2.0);
    CHECK(s.dsq == 0.0);
    CHECK(s.lambda == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(s.clamped); // x^gamma = 1.87 < 2
    CHECK(s.y_lo == 2);
    CHECK(s.best_ratio >= 0.1);
    CHECK(s.pass);

    TheoremVerdict v = lower_bound_verdict(s);
    CHECK(v.pass);
    CHECK(v.extras["clamped"].get<bool>());
}

TEST_CASE("lower bound search stays positive for the constant function") {
    SieveTable one = SieveTable::build(one_spec(), 10'000);
    SpectralReport rep = spectral_search(one_spec(), 10'000.0);
    LowerBoundSearch s = lower_bound_search(one, rep, 2.0);
    CHECK(s.best_ratio > 0.0);
    // degenerate: a huge c forces gamma toward 0; the grid still spans [2, x]
    LowerBoundSearch deg = lower_bound_search(one, rep, 50.0);
    CHECK(deg.clamped);
    CHECK(deg.y_lo == 2);
    CHECK(deg.best_y >= 2);
}

TEST_CASE("pipeline finds the product-sum hit for tau") {
    TheoremVerdict v =
        main_theorem_pipeline(tau_pow_spec(1), 10'000, tau_pow_spec(1), 10'000, 0.05, 100'000);
    CHECK(!v.vacuous);
    CHECK(v.pass);
    CHECK(v.extras["eta"].get<double>() >= 1.0);
    CHECK(v.extras["first_hit_x"].get<uint64_t>() >= 2);
    CHECK(v.extras["exponent"].get<double>() == 17.0);
    CHECK(v.lhs > 0.0);
}

TEST_CASE("pipeline hit set shrinks as C grows") {
    uint64_t prev_hit = 0;
    bool prev_pass = true;
    for (double C : {0.02, 0.05, 0.1, 0.3, 1.0}) {
        TheoremVerdict v =
            main_theorem_pipeline(tau_pow_spec(1), 10'000, tau_pow_spec(1), 10'000, C, 100'000);
        if (!prev_pass) CHECK(!v.pass); // once it fails it stays failed
        if (v.pass) {
            uint64_t hit = v.extras["first_hit_x"].get<uint64_t>();
            CHECK(hit >= prev_hit);
            prev_hit = hit;
        }
        prev_pass = v.pass;
    }
}

TEST_CASE("largest admissible C is tight on the scan grid") {
    TheoremVerdict v =
        main_theorem_pipeline(tau_pow_spec(1), 10'000, tau_pow_spec(1), 10'000, 0.05, 100'000);
    double c_max = v.extras["largest_C"].get<double>();
    CHECK(c_max > 0.05); // the 0.05 run passed
    TheoremVerdict at = main_theorem_pipeline(tau_pow_spec(1), 10'000, tau_pow_spec(1), 10'000,
                                              c_max * 0.999, 100'000);
    CHECK(at.pass);
    TheoremVerdict above = main_theorem_pipeline(tau_pow_spec(1), 10'000, tau_pow_spec(1), 10'000,
                                                 c_max * 1.001, 100'000);
    CHECK(!above.pass);
}

TEST_CASE("pipeline is vacuous for cancelling sums and never passes") {
    TheoremVerdict v =
        main_theorem_pipeline(moebius_spec(), 10'000, moebius_spec(), 10'000, 0.05, 100'000);
    CHECK(v.vacuous);
    CHECK(!v.pass);
    CHECK(v.extras["eta"].get<double>() <= v.extras["eta_threshold"].get<double>());
    CHECK(!v.extras.contains("first_hit_x")); // no search ran
}

TEST_CASE("pipeline validates its preconditions") {
    CHECK_THROWS_AS(
        main_theorem_pipeline(moebius_spec(), 1000, tau_pow_spec(2), 1000, 0.05, 10'000),
        validation_error);
    CHECK_THROWS_AS(
        main_theorem_pipeline(one_spec(), 2, one_spec(), 1000, 0.05, 10'000), validation_error);
}

TEST_CASE("cusp form corollary records the exponent and an honest hypothesis") {
    TheoremVerdict v = cuspform_corollary(10'000, 10'000, 20'000, 0.05);
    CHECK(v.claim_id == "corollary12");
    CHECK(v.extras["exponent"].get<double>() == 17.0);
    CHECK(v.extras["exponent_check_17"].get<bool>());
    bool hyp_fails =
        v.extras["eta"].get<double>() <= v.extras["eta_threshold"].get<double>();
    CHECK(v.vacuous == hyp_fails);
    if (v.vacuous) CHECK(!v.pass);
}

TEST_CASE("decay check is vacuous for small phi and errors at the guard") {
    TheoremVerdict v = gs_decay_check(tau_table_1e4(), tau_report_1e4());
    CHECK(v.vacuous);
    CHECK(!v.pass);

    CHECK_THROWS_AS(gs_decay_check(tau_table_1e4(), tau_report_1e4(), 2.0), numerical_error);
}

TEST_CASE("decay check records a constant for a far-out spectral point") {
    double theta = 1.1 * std::log(1e4);
    MultFuncSpec spun = twist_spec(one_spec(), -theta);
    SieveTable t = SieveTable::build(spun, 10'000);
    SpectralReport rep = spectral_search(spun, 10'000.0);
    CHECK(std::abs(rep.phi - theta) <= 0.05);
    TheoremVerdict v = gs_decay_check(t, rep);
    CHECK(!v.vacuous);
    CHECK(v.pass);
    CHECK(std::isfinite(v.implied_constant));
}

TEST_CASE("verdicts reproduce bit-identically from their inputs record") {
    TheoremVerdict orig = lem_m_check(tau_table_1e4(), tau_report_1e4(), 1.0);
    TheoremVerdict again = rerun(orig.inputs);
    CHECK(orig.lhs == again.lhs);
    CHECK(orig.rhs == again.rhs);
    CHECK(orig.to_json() == again.to_json());

    TheoremVerdict pipe =
        main_theorem_pipeline(tau_pow_spec(1), 10'000, tau_pow_spec(1), 10'000, 0.05, 50'000);
    CHECK(rerun(pipe.inputs).to_json() == pipe.to_json());

    TheoremVerdict sweep = triangle_sweep(99, 25, {1000}, -5.0, 5.0);
    CHECK(rerun(sweep.inputs).to_json() == sweep.to_json());

    CHECK_THROWS_AS(rerun(nlohmann::json{{"claim", "nope"}}), validation_error);
}

TEST_CASE("triangle sweep verdict shape") {
    TheoremVerdict v = triangle_sweep(123, 50, {1000, 10'000}, -10.0, 10.0);
    CHECK(v.pass);
    CHECK(v.lhs == 0.0);
    CHECK(v.extras["worst_margin"].get<double>() >= -1e-12);
}

TEST_CASE("halasz constant verdict is finite and reproducible") {
    TheoremVerdict v = halasz_constant(tau_table_1e4(), tau_report_1e4(), HalaszVariant::N);
    CHECK(v.pass);
    CHECK(std::isfinite(v.implied_constant));
    CHECK(v.implied_constant == doctest::Approx(v.lhs / v.rhs).epsilon(1e-12));
    CHECK(rerun(v.inputs).to_json() == v.to_json());
}
