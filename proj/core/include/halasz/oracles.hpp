#pragma once
#include <cstdint>
#include <utility>
#include <vector>

#include "halasz/mult_func.hpp"

namespace halasz {
// Reference implementations used by the verification suite. Each one avoids
// the code path it cross-checks: factorization is trial division (never the
// spf table), divisor sums come from direct enumeration, and zeta is
// Euler-Maclaurin rather than a truncated product or series.
namespace oracle {

// Riemann zeta via Euler-Maclaurin; valid for Re(s) > 0, s != 1.
cplx zeta_em(cplx s);

// Prime factorization (p, a) pairs by trial division, ascending p.
std::vector<std::pair<uint64_t, uint32_t>> factorize(uint64_t n);

// f(n) evaluated straight from the factorization and the spec's rule/twist.
cplx eval_direct(const MultFuncSpec& spec, uint64_t n);

int moebius(uint64_t n);
uint64_t divisor_count(uint64_t n);

// mu(1..x) by trial division; index n, [0] unused.
std::vector<int8_t> moebius_table(uint64_t x);

// tau(1..x) by the divisor-enumeration sieve cnt[d*m]++ (independent of any
// factorization); index n.
std::vector<uint32_t> divisor_count_table(uint64_t x);

// sum_{n<=x} tau(n) and sum_{n<=x} tau(n)^2 from the enumeration table.
int64_t tau_sum(uint64_t x);
int64_t tau_square_sum(uint64_t x);

// sigma_11(n) mod 691, for the classical Delta congruence check.
uint64_t sigma11_mod_691(uint64_t n);

} // namespace oracle
} // namespace halasz
