#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "halasz/catalog.hpp"
#include "halasz/dirichlet.hpp"
#include "halasz/errors.hpp"
#include "halasz/oracles.hpp"
#include "halasz/parallel.hpp"
#include "halasz/primes.hpp"
#include "halasz/ramanujan.hpp"
#include "halasz/sieve_table.hpp"

using namespace halasz;

namespace {
double rel_gap(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}
} // namespace

TEST_CASE("constant function sieves to all ones") {
    SieveTable t = SieveTable::build(one_spec(), 10);
    for (uint64_t n = 1; n <= 10; ++n) CHECK(t.value(n) == cplx{1.0, 0.0});
    CHECK(t.partial_sum(10) == cplx{10.0, 0.0});
}

TEST_CASE("moebius and tau spot values") {
    SieveTable mu = SieveTable::build(moebius_spec(), 12);
    CHECK(mu.value(12) == cplx{0.0, 0.0}); // 4 | 12
    CHECK(mu.partial_sum(10).real() == -1.0);

    SieveTable tau = SieveTable::build(tau_pow_spec(1), 12);
    CHECK(tau.value(12).real() == 6.0);
    CHECK(tau.partial_sum(10).real() == 27.0);
}

TEST_CASE("catalog members evaluate as advertised") {
    SieveTable musq = SieveTable::build(parse_func("product(moebius,moebius)"), 20);
    CHECK(musq.value(10).real() == 1.0); // squarefree
    CHECK(musq.value(12).real() == 0.0);
    CHECK(musq.spec().kappa == 2);
    CHECK(musq.spec().is_nonnegative);

    SieveTable tau2 = SieveTable::build(tau_pow_spec(2), 10);
    CHECK(tau2.value(6).real() == 16.0); // tau(6)^2

    SieveTable chi = SieveTable::build(dirichlet_char_spec(4, 1), 10);
    CHECK(chi.value(3).real() == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(chi.value(2) == cplx{0.0, 0.0});
    CHECK(chi.value(5).real() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("sieve values match trial-division evaluation on random n") {
    std::mt19937_64 rng(42);
    for (const auto& spec : catalog()) {
        SieveTable t = SieveTable::build(spec, 10'000);
        for (int i = 0; i < 1000; ++i) {
            uint64_t n = 1 + rng() % 10'000;
            cplx direct = oracle::eval_direct(spec, n);
            CHECK(std::abs(t.value(n) - direct) <=
                  1e-12 * std::max(1.0, std::abs(direct)));
        }
    }
}

TEST_CASE("multiplicativity on random coprime pairs") {
    std::mt19937_64 rng(7);
    for (const auto& spec : catalog()) {
        SieveTable t = SieveTable::build(spec, 10'000);
        int tested = 0;
        while (tested < 1000) {
            uint64_t m = 2 + rng() % 99, n = 2 + rng() % 99;
            if (std::gcd(m, n) != 1 || m * n > 10'000) continue;
            ++tested;
            cplx lhs = t.value(m * n);
            cplx rhs = t.value(m) * t.value(n);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
        }
    }
}

TEST_CASE("divisor bound holds exhaustively at small scale") {
    auto taun = oracle::divisor_count_table(10'000);
    for (const auto& spec : catalog()) {
        SieveTable t = SieveTable::build(spec, 10'000);
        for (uint64_t n = 1; n <= 10'000; ++n) {
            double bound = std::pow(double(taun[n]), double(spec.kappa));
            CHECK(std::abs(t.value(n)) <= bound * (1.0 + 1e-12) + 1e-12);
        }
    }
}

TEST_CASE("twist applied at sieve time matches twisting at summation time") {
    const double t0 = 0.7;
    const uint64_t x = 10'000;
    for (const char* name : {"one", "moebius"}) {
        MultFuncSpec base = parse_func(name);
        SieveTable plain = SieveTable::build(base, x);
        SieveTable twisted = SieveTable::build(twist_spec(base, t0), x);
        cplx by_sieve = twisted.partial_sum(x);
        cplx by_sum = plain.twisted_sum(x, t0);
        CHECK(std::abs(by_sieve - by_sum) <= 1e-10 * std::max(1.0, std::abs(by_sum)));
    }
}

TEST_CASE("eta largeness worked values") {
    SieveTable tau = SieveTable::build(tau_pow_spec(1), 100);
    CHECK(eta_largeness(tau, 100.0) == doctest::Approx(482.0 / (100.0 * std::log(100.0))).epsilon(1e-12));

    SieveTable one = SieveTable::build(one_spec(), 10);
    const double e = std::exp(1.0);
    CHECK(eta_largeness(one, e) == doctest::Approx(2.0 / e).epsilon(1e-12));

    SieveTable mu = SieveTable::build(moebius_spec(), 10);
    CHECK(eta_largeness(mu, 10.0) == doctest::Approx(1.0 / (10.0 * std::log(10.0))).epsilon(1e-12));

    CHECK_THROWS_AS(eta_largeness(one, 2.0), validation_error);
}

TEST_CASE("prime reciprocal sums") {
    CHECK(prime_recip_sum(2) == 0.5);
    CHECK(prime_recip_sum(10) == doctest::Approx(247.0 / 210.0).epsilon(1e-15));

    // independent check: trial-division primality, plain long-double sum
    long double s = 0.0L;
    for (uint64_t n = 2; n <= 100; ++n) {
        bool prime = n >= 2;
        for (uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) { prime = false; break; }
        if (prime) s += 1.0L / n;
    }
    CHECK(rel_gap(prime_recip_sum(100), double(s)) <= 1e-12);
    CHECK(prime_recip_sum(100) == doctest::Approx(1.802817).epsilon(1e-6));
}

TEST_CASE("prime list is strictly increasing and prime") {
    auto pl = prime_list(1000);
    CHECK(pl->count_below(100) == 25);
    for (std::size_t i = 1; i < pl->primes.size(); ++i)
        REQUIRE(pl->primes[i] > pl->primes[i - 1]);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        uint32_t p = pl->primes[rng() % pl->count_below(1000)];
        for (uint32_t d = 2; uint64_t(d) * d <= p; ++d) REQUIRE(p % d != 0);
    }
}

TEST_CASE("ramanujan tau oracle matches the classical expansion") {
    auto tau = ramanujan_tau_oracle(12);
    const long expected[] = {0, 1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920, 534612, -370944};
    for (int n = 1; n <= 12; ++n) CHECK(tau[n] == expected[n]);
}

TEST_CASE("tau satisfies the sigma11 congruence mod 691") {
    auto tau = ramanujan_tau_oracle(2000);
    for (uint64_t n = 1; n <= 2000; ++n) {
        uint64_t lhs = mpz_class(tau[n] % 691 + 691).get_ui() % 691;
        CHECK(lhs == oracle::sigma11_mod_691(n));
    }
}

TEST_CASE("hecke recursion agrees with the normalized oracle") {
    const uint64_t n_max = 2000;
    auto lam = ramanujan_lambda_table(n_max);
    auto pl = prime_list(n_max);
    std::map<uint64_t, double> at_primes;
    for (uint32_t p : pl->primes)
        if (p <= n_max) at_primes[p] = lam[p];
    auto rec = hecke_extend(at_primes, n_max);
    for (uint64_t n = 1; n <= n_max; ++n) CHECK(rel_gap(lam[n], rec[n]) <= 1e-12);

    CHECK(lam[2] == doctest::Approx(-24.0 * std::pow(2.0, -5.5)).epsilon(1e-14));
    CHECK(lam[4] == doctest::Approx(-0.71875).epsilon(1e-14));
    CHECK(rel_gap(rec[6], rec[2] * rec[3]) <= 1e-14);

    std::map<uint64_t, double> missing{{2, lam[2]}};
    CHECK_THROWS_AS(hecke_extend(missing, 10), validation_error);
}

TEST_CASE("deligne bound observed for the normalized eigenvalues") {
    auto lam = ramanujan_lambda_table(10'000);
    for (uint64_t n = 1; n <= 10'000; ++n)
        CHECK(std::abs(lam[n]) <= double(oracle::divisor_count(n)) * (1.0 + 1e-12));
}

TEST_CASE("character group structure") {
    auto g5 = CharacterGroup::for_modulus(5);
    CHECK(g5->num_characters() == 4);
    CHECK(g5->chi(1, 2) == cplx{0.0, 1.0}); // primitive root 2, quartic character
    CHECK(g5->chi(1, 4).real() == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(g5->is_real_character(2));
    CHECK(!g5->is_real_character(1));
    CHECK(g5->chi(0, 3) == cplx{1.0, 0.0});

    auto g8 = CharacterGroup::for_modulus(8);
    CHECK(g8->num_characters() == 4);
    for (uint64_t j = 0; j < 4; ++j) {
        CHECK(g8->is_real_character(j));
        // crude orthogonality: sum over a reduced residue system vanishes
        if (j > 0) {
            cplx s{0, 0};
            for (uint64_t n : {1, 3, 5, 7}) s += g8->chi(j, n);
            CHECK(std::abs(s) <= 1e-14);
        }
    }

    CHECK_THROWS_AS(dirichlet_char_spec(4, 2), validation_error);
    CHECK_THROWS_AS(dirichlet_char_spec(10'001, 0), validation_error);
}

TEST_CASE("character sieve is completely multiplicative") {
    MultFuncSpec chi = dirichlet_char_spec(7, 2);
    SieveTable t = SieveTable::build(chi, 500);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        uint64_t m = 2 + rng() % 20, n = 2 + rng() % 20;
        if (m * n > 500) continue;
        CHECK(std::abs(t.value(m * n) - t.value(m) * t.value(n)) <= 1e-13);
    }
}

TEST_CASE("binary dump round-trips") {
    SieveTable t = SieveTable::build(moebius_spec(), 1000);
    std::ostringstream os(std::ios::binary);
    t.dump(os);
    std::string blob = os.str();

    std::istringstream is(blob, std::ios::binary);
    SieveTable back = SieveTable::load(is, moebius_spec());
    for (uint64_t n = 1; n <= 1000; ++n) REQUIRE(back.value(n) == t.value(n));
    CHECK(back.partial_sum(1000) == t.partial_sum(1000));

    std::ostringstream os2(std::ios::binary);
    back.dump(os2);
    CHECK(os2.str() == blob);

    std::istringstream wrong(blob, std::ios::binary);
    CHECK_THROWS_AS(SieveTable::load(wrong, one_spec()), validation_error);
}

TEST_CASE("construction is identical for any worker count") {
    set_thread_count(1);
    SieveTable a = SieveTable::build(tau_pow_spec(1), 200'000);
    set_thread_count(4);
    SieveTable b = SieveTable::build(tau_pow_spec(1), 200'000);
    set_thread_count(0);
    for (uint64_t n = 1; n <= 200'000; ++n) {
        REQUIRE(a.value(n) == b.value(n));
        REQUIRE(a.partial_sum(n) == b.partial_sum(n));
    }
}

TEST_CASE("budget and validation errors") {
    uint64_t saved = sieve_budget();
    set_sieve_budget(1 << 20);
    CHECK_THROWS_AS(SieveTable::build(one_spec(), 10'000'000), resource_error);
    set_sieve_budget(saved);

    CHECK_THROWS_AS(SieveTable::build(one_spec(), 1), validation_error);
    CHECK_THROWS_AS(parse_func("nosuch"), validation_error);
    CHECK_THROWS_AS(tau_pow_spec(0), validation_error);

    SieveTable t = SieveTable::build(one_spec(), 10);
    CHECK_THROWS_AS(t.partial_sum(11), validation_error);
    CHECK_THROWS_AS(t.partial_sum(0), validation_error);
}

TEST_CASE("catalog manifest lists every entry") {
    std::string m = catalog_manifest();
    for (const auto& spec : catalog()) CHECK(m.find(spec.name) != std::string::npos);
}
