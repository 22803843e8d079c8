#pragma once
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <vector>

#include "halasz/mult_func.hpp"
#include "halasz/primes.hpp"

namespace halasz {

// Immutable table of f(n) for 1 <= n <= x_max with cumulative partial sums
// S(n, f). Construction partitions [1, x_max] into fixed-size segments that
// are evaluated independently (each n factored through the shared smallest-
// prime-factor table); the cumulative pass is a single compensated sweep, so
// contents never depend on the worker count. Reads are lock-free.
class SieveTable {
public:
    static constexpr uint64_t kXMaxCap = 100'000'000;

    SieveTable() = default; // empty; every accessor throws until assigned

    static SieveTable build(const MultFuncSpec& spec, uint64_t x_max);

    const MultFuncSpec& spec() const { return spec_; }
    uint64_t x_max() const { return x_max_; }

    cplx value(uint64_t n) const;             // f(n), 1 <= n <= x_max
    cplx partial_sum(uint64_t x) const;       // S(x, f), O(1)
    const std::vector<cplx>& values() const { return values_; }

    // sum_{n<=x} f(n) n^{-it}, compensated, fixed-chunk parallel.
    cplx twisted_sum(uint64_t x, double t) const;

    // Binary dump: header (magic, version, spec name, kappa, twist, x_max)
    // then f(1..x_max) as little-endian double pairs.
    void dump(std::ostream& os) const;
    // Loads a dump; the rule is taken from `spec`, which must match the header
    // (name, kappa, twist) or a validation_error is thrown.
    static SieveTable load(std::istream& is, const MultFuncSpec& spec);

private:
    MultFuncSpec spec_;
    uint64_t x_max_ = 0;
    std::vector<cplx> values_;  // [0] unused
    std::vector<cplx> cumsum_;  // cumsum_[n] = S(n, f), cumsum_[0] = 0
    std::shared_ptr<const SpfTable> spf_;
};

// Configurable memory budget for table construction (bytes). Default 2 GiB.
void set_sieve_budget(uint64_t bytes);
uint64_t sieve_budget();

// |S(x, f)| / (x (log x)^{2^kappa - 1}); the largeness hypothesis holds at
// level eta iff this is >= eta. Real x >= e; the sum runs over n <= floor(x).
double eta_largeness(const SieveTable& table, double x);

} // namespace halasz
