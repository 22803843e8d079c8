#pragma once
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include <gmpxx.h>

namespace halasz {

// Exact integer coefficients tau(1..n_max) of the weight-12 cusp form Delta,
// from the q-expansion of q * prod_{m>=1} (1 - q^m)^24. The product is built
// as the 8th power of the sparse cube series
//   prod (1 - q^m)^3 = sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2},
// so each pass is a dense*sparse convolution with O(sqrt(n_max)) offsets.
// Exact by construction (big-integer accumulation); n_max capped at 1e5.
std::vector<mpz_class> ramanujan_tau_oracle(uint64_t n_max);

// tau values as a shared table (index n, [0] unused), cached across callers.
std::shared_ptr<const std::vector<mpz_class>> ramanujan_tau_table(uint64_t n_max);

// Normalized eigenvalues lambda_Delta(n) = tau(n) / n^{11/2} for n <= n_max.
std::vector<double> ramanujan_lambda_table(uint64_t n_max);

constexpr uint64_t kTauOracleCap = 100'000;

// Extends eigenvalues given at primes to all n <= n_max by the level-one
// recursion lambda(p^{a+1}) = lambda(p) lambda(p^a) - lambda(p^{a-1}) and
// multiplicativity. Index n, [0] unused, [1] = 1. Throws validation_error if
// a needed prime value is missing.
std::vector<double> hecke_extend(const std::map<uint64_t, double>& lambda_p, uint64_t n_max);

} // namespace halasz
