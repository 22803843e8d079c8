#include "halasz/ramanujan.hpp"

#include <cmath>
#include <mutex>

#include "halasz/errors.hpp"
#include "halasz/primes.hpp"

namespace halasz {

namespace {

struct SparseTerm {
    uint64_t offset;
    long coeff;
};

// prod (1 - q^m)^3 = sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2}, Jacobi.
std::vector<SparseTerm> jacobi_cube(uint64_t n_max) {
    std::vector<SparseTerm> terms;
    for (uint64_t k = 0;; ++k) {
        uint64_t off = k * (k + 1) / 2;
        if (off > n_max) break;
        long c = long(2 * k + 1);
        terms.push_back({off, (k & 1) ? -c : c});
    }
    return terms;
}

// out[j + t.offset] += t.coeff * in[j], in place over a fresh buffer.
void sparse_multiply(const std::vector<mpz_class>& in, const std::vector<SparseTerm>& terms,
                     std::vector<mpz_class>& out) {
    const std::size_t n = in.size();
    for (auto& z : out) z = 0;
    for (const auto& t : terms) {
        const unsigned long c = static_cast<unsigned long>(std::labs(t.coeff));
        if (t.coeff > 0) {
            for (std::size_t j = 0; j + t.offset < n; ++j)
                mpz_addmul_ui(out[j + t.offset].get_mpz_t(), in[j].get_mpz_t(), c);
        } else {
            for (std::size_t j = 0; j + t.offset < n; ++j)
                mpz_submul_ui(out[j + t.offset].get_mpz_t(), in[j].get_mpz_t(), c);
        }
    }
}

std::mutex g_mx;
std::shared_ptr<const std::vector<mpz_class>> g_tau; // [n] = tau(n), size n_max+1

} // namespace

std::vector<mpz_class> ramanujan_tau_oracle(uint64_t n_max) {
    if (n_max < 1) throw validation_error("tau oracle needs n_max >= 1");
    if (n_max > kTauOracleCap)
        throw resource_error("tau oracle n_max " + std::to_string(n_max) +
                             " exceeds desk-scale cap " + std::to_string(kTauOracleCap));

    // Work with E = prod (1-q^m)^3 truncated at degree n_max - 1; Delta = q * E^8.
    const uint64_t deg = n_max - 1;
    auto terms = jacobi_cube(deg);

    // E^2 by sparse*sparse.
    std::vector<mpz_class> acc(deg + 1, 0), tmp(deg + 1, 0);
    for (const auto& a : terms)
        for (const auto& b : terms) {
            uint64_t off = a.offset + b.offset;
            if (off > deg) break; // offsets ascend
            long c = a.coeff * b.coeff;
            if (c >= 0)
                mpz_add_ui(acc[off].get_mpz_t(), acc[off].get_mpz_t(), static_cast<unsigned long>(c));
            else
                mpz_sub_ui(acc[off].get_mpz_t(), acc[off].get_mpz_t(), static_cast<unsigned long>(-c));
        }

    // Six more sparse passes: E^2 -> E^8.
    for (int pass = 0; pass < 6; ++pass) {
        sparse_multiply(acc, terms, tmp);
        acc.swap(tmp);
    }

    std::vector<mpz_class> tau(n_max + 1, 0);
    for (uint64_t n = 1; n <= n_max; ++n) tau[n] = acc[n - 1];
    return tau;
}

std::shared_ptr<const std::vector<mpz_class>> ramanujan_tau_table(uint64_t n_max) {
    std::lock_guard<std::mutex> lk(g_mx);
    if (!g_tau || g_tau->size() <= n_max)
        g_tau = std::make_shared<const std::vector<mpz_class>>(ramanujan_tau_oracle(n_max));
    return g_tau;
}

std::vector<double> ramanujan_lambda_table(uint64_t n_max) {
    auto tau = ramanujan_tau_table(n_max);
    std::vector<double> lam(n_max + 1, 0.0);
    lam[0] = 0.0;
    for (uint64_t n = 1; n <= n_max; ++n)
        lam[n] = mpz_get_d((*tau)[n].get_mpz_t()) / std::pow(double(n), 5.5);
    return lam;
}

std::vector<double> hecke_extend(const std::map<uint64_t, double>& lambda_p, uint64_t n_max) {
    auto spf = spf_table(n_max);
    std::vector<double> lam(n_max + 1, 0.0);
    if (n_max >= 1) lam[1] = 1.0;

    // lambda at prime powers first, by the recursion.
    for (uint64_t p = 2; p <= n_max; ++p) {
        if ((*spf)[p] != p) continue;
        auto it = lambda_p.find(p);
        if (it == lambda_p.end())
            throw validation_error("hecke_extend: missing eigenvalue at prime " + std::to_string(p));
        double lp = it->second;
        double prev = 1.0, cur = lp;
        for (uint64_t pk = p; pk <= n_max; ) {
            lam[pk] = cur;
            if (pk > n_max / p) break;
            pk *= p;
            double next = lp * cur - prev;
            prev = cur;
            cur = next;
        }
    }

    // Multiplicative extension via smallest-prime-factor peeling.
    for (uint64_t n = 2; n <= n_max; ++n) {
        uint64_t p = (*spf)[n];
        if (p == n) continue; // prime, already set
        uint64_t pk = p, m = n / p;
        while (m % p == 0) { pk *= p; m /= p; }
        if (m == 1) continue; // pure prime power, already set
        lam[n] = lam[pk] * lam[m];
    }
    return lam;
}

} // namespace halasz
