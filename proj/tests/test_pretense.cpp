#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "halasz/catalog.hpp"
#include "halasz/distance.hpp"
#include "halasz/errors.hpp"
#include "halasz/primes.hpp"
#include "halasz/spectral.hpp"

using namespace halasz;

TEST_CASE("distance vanishes termwise when f(p) saturates the bound") {
    CHECK(distance_sq(tau_pow_spec(1), 0.0, 1000).dsq == 0.0);
    CHECK(distance_sq(tau_pow_spec(2), 0.0, 1000).dsq == 0.0);
}

TEST_CASE("worked prime sums") {
    DistanceReport mu = distance_sq(moebius_spec(), 0.0, 10);
    CHECK(mu.dsq == doctest::Approx(3.0 * 247.0 / 210.0).epsilon(1e-14));
    CHECK(mu.prime_count == 4);

    DistanceReport one = distance_sq(one_spec(), 0.0, 100);
    CHECK(one.dsq == doctest::Approx(prime_recip_sum(100)).epsilon(1e-13));
}

TEST_CASE("distance is nondecreasing in x") {
    double prev = 0.0;
    for (uint64_t x : {10, 100, 1000, 10'000}) {
        double d = distance_sq(moebius_spec(), 0.3, x).dsq;
        CHECK(d >= prev - 1e-15);
        prev = d;
    }
}

TEST_CASE("comparison gap identity against the spectral report") {
    SpectralReport rep = spectral_search(one_spec(), 10'000.0);
    DistanceReport d = l_distance_gap(one_spec(), rep.phi, 10'000);
    CHECK(d.l_gap == doctest::Approx(d.dsq - rep.N).epsilon(1e-10));
}

TEST_CASE("comparison gap stays bounded across scales") {
    for (uint64_t x : {1000, 10'000, 100'000}) {
        DistanceReport d = l_distance_gap(one_spec(), 0.0, x);
        REQUIRE(std::isfinite(d.l_gap));
        CHECK(std::abs(d.l_gap) <= 5.0);
    }
    // saturating spec: dsq = 0, gap = log|L| - 2^kappa log log x
    DistanceReport d = l_distance_gap(tau_pow_spec(2), 0.0, 10'000);
    CHECK(d.dsq == 0.0);
    REQUIRE(std::isfinite(d.l_gap));
}

TEST_CASE("triangle inequality worked case and equality case") {
    TriangleVerdict v = triangle_check(moebius_spec(), 10, 0.0, moebius_spec(), 10, 0.0);
    CHECK(v.pass);
    CHECK(v.lhs == doctest::Approx(2.0 * std::sqrt(741.0 / 210.0)).epsilon(1e-12));
    CHECK(v.rhs == doctest::Approx(std::sqrt(741.0 / 420.0)).epsilon(1e-12));

    TriangleVerdict eq = triangle_check(tau_pow_spec(1), 1000, 0.0, tau_pow_spec(1), 1000, 0.0);
    CHECK(eq.lhs == 0.0);
    CHECK(eq.rhs == 0.0);
    CHECK(eq.pass);
}

TEST_CASE("triangle rejects mismatched kappa") {
    CHECK_THROWS_AS(triangle_check(moebius_spec(), 100, 0.0, tau_pow_spec(2), 100, 0.0),
                    validation_error);
}

TEST_CASE("seeded random tuples never violate the triangle bound") {
    // small in-test sweep; the verification suite runs the full 500
    std::mt19937_64 rng(20260809);
    auto specs = catalog();
    auto u01 = [&] { return double(rng() >> 11) * 0x1.0p-53; };
    for (int i = 0; i < 100; ++i) {
        const MultFuncSpec& a = specs[rng() % specs.size()];
        std::vector<std::size_t> same;
        for (std::size_t j = 0; j < specs.size(); ++j)
            if (specs[j].kappa == a.kappa) same.push_back(j);
        const MultFuncSpec& b = specs[same[rng() % same.size()]];
        uint64_t x1 = (rng() & 1) ? 1000 : 10'000;
        uint64_t x2 = (rng() & 1) ? 1000 : 10'000;
        TriangleVerdict v =
            triangle_check(a, x1, -10.0 + 20.0 * u01(), b, x2, -10.0 + 20.0 * u01());
        REQUIRE(v.lhs >= v.rhs - 1e-12);
    }
}

TEST_CASE("termwise nonnegativity holds for the catalog") {
    for (const auto& spec : catalog())
        for (double t : {-3.0, 0.0, 3.0})
            CHECK_NOTHROW(distance_sq(spec, t, 1000));
}

TEST_CASE("csv row carries the fields in order") {
    DistanceReport d = l_distance_gap(moebius_spec(), 0.5, 1000);
    std::string row = d.csv_row();
    CHECK(row.find("moebius,") == 0);
    CHECK(std::count(row.begin(), row.end(), ',') == 5);
}
