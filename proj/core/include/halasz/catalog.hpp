#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "halasz/mult_func.hpp"

namespace halasz {

// Named constructors for the stock multiplicative functions.
MultFuncSpec one_spec();                        // f == 1, kappa 1
MultFuncSpec moebius_spec();                    // mu, kappa 1
MultFuncSpec liouville_spec();                  // (-1)^Omega(n), kappa 1
MultFuncSpec tau_pow_spec(uint32_t k);          // tau(n)^k, kappa k
MultFuncSpec dirichlet_char_spec(uint32_t q, uint64_t index); // chi mod q, kappa 1
MultFuncSpec hecke_delta_spec();                // lambda_Delta(n) = tau(n)/n^{11/2}, kappa 1
MultFuncSpec twist_spec(MultFuncSpec base, double t0);        // f(n) n^{-i t0}
// Pointwise product; kappa = kappa1 + kappa2 by convention, twists add.
MultFuncSpec product_spec(const MultFuncSpec& a, const MultFuncSpec& b);

// The stock catalog used by the verification suite and the CLI.
std::vector<MultFuncSpec> catalog();

// Resolves a function name: a catalog entry, or one of the constructed forms
//   tau_pow<K>, chi_<Q>_<J>, twist(<name>,<t0>), product(<name>,<name>).
// Unknown names raise validation_error listing the valid catalog names.
MultFuncSpec parse_func(const std::string& name);

// One line per catalog entry: name, kappa, flags, twist.
std::string catalog_manifest();

} // namespace halasz
