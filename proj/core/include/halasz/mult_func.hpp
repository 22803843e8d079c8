#pragma once
#include <cstdint>
#include <functional>
#include <string>

#include "halasz/numeric.hpp"

namespace halasz {

// Declarative description of a multiplicative function f with |f(n)| <= tau(n)^kappa.
// The induced f is determined by the prime-power rule plus the archimedean twist:
//   f(n) = prod_{p^a || n} rule(p, a) * n^{-i*twist},  f(1) = 1.
struct MultFuncSpec {
    std::string name;
    uint32_t kappa = 1;
    // rule(p, a) with p prime, a >= 1; must not depend on the twist.
    std::function<cplx(uint64_t, uint32_t)> rule;
    bool is_real = false;
    bool is_nonnegative = false;
    bool is_completely_multiplicative = false;
    double twist = 0.0;

    // Throws validation_error if the description is malformed.
    void validate() const;

    // Untwisted value at a prime power.
    cplx at_prime_power(uint64_t p, uint32_t a) const { return rule(p, a); }
};

} // namespace halasz
