#pragma once
#include <cstdint>
#include <memory>
#include <vector>

namespace halasz {

// Smallest-prime-factor table for [0, limit]; spf[n] == n iff n is prime
// (n >= 2). One table serves every multiplicative-function evaluation.
using SpfTable = std::vector<uint32_t>;

// Immutable snapshot of the shared SPF table covering at least `limit`.
std::shared_ptr<const SpfTable> spf_table(uint64_t limit);

// Primes up to a limit plus compensated prefix sums of 1/p.
struct PrimeList {
    uint64_t limit = 0;
    std::vector<uint32_t> primes;
    std::vector<double> recip_prefix; // recip_prefix[i] = sum_{j<=i} 1/primes[j]

    // Number of primes <= x.
    std::size_t count_below(uint64_t x) const;
};

std::shared_ptr<const PrimeList> prime_list(uint64_t limit);

// sum_{p<=x} 1/p, compensated; O(log) lookup against the shared prefix table.
double prime_recip_sum(uint64_t x);

} // namespace halasz
