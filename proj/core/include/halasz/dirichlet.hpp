#pragma once
#include <cstdint>
#include <memory>
#include <vector>

#include "halasz/numeric.hpp"

namespace halasz {

// Character group of (Z/q)^* realized through discrete-log tables for each
// prime-power factor of q, glued by CRT. Supports q <= 10^4.
//
// The group decomposes into cyclic components listed in a fixed order:
// prime-power factors by ascending prime; an odd p^a contributes one component
// of order phi(p^a) (discrete log w.r.t. a primitive root); 2^1 contributes
// nothing, 2^2 one component of order 2, and 2^a (a >= 3) two components —
// the sign {+-1} first, then <5> of order 2^{a-2}.
//
// A character index j in [0, phi(q)) unpacks in mixed radix over the component
// orders (first component = least significant digit). Index 0 is principal.
class CharacterGroup {
public:
    static std::shared_ptr<const CharacterGroup> for_modulus(uint32_t q);

    uint32_t modulus() const { return q_; }
    uint64_t num_characters() const { return phi_; }

    // chi_index(n); 0 when gcd(n, q) > 1.
    cplx chi(uint64_t index, uint64_t n) const;

    // True when chi_index takes only real values (order <= 2 in the dual).
    bool is_real_character(uint64_t index) const;

    const std::vector<uint32_t>& component_orders() const { return orders_; }

private:
    struct Component {
        uint32_t pk = 0;               // prime power p^a
        uint32_t order = 0;            // cyclic order
        bool is_sign = false;          // the {+-1} part of (Z/2^a)^*, a >= 3
        std::vector<uint32_t> dlog;    // dlog[r] for r coprime to p, else unused
    };

    explicit CharacterGroup(uint32_t q);

    uint32_t q_ = 1;
    uint64_t phi_ = 1;
    std::vector<Component> comps_;
    std::vector<uint32_t> orders_;
};

} // namespace halasz
