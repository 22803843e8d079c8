#include "halasz/dirichlet.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "halasz/errors.hpp"

namespace halasz {

namespace {

uint64_t powmod(uint64_t b, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = (r * b) % m; // m <= 1e4, no overflow
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

std::vector<uint32_t> prime_factors(uint32_t n) {
    std::vector<uint32_t> fs;
    for (uint32_t p = 2; uint64_t(p) * p <= n; ++p) {
        if (n % p) continue;
        fs.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// Smallest primitive root mod p, lifted so it generates (Z/p^a)^* for all a.
uint32_t primitive_root(uint32_t p) {
    if (p == 2) return 1;
    auto qs = prime_factors(p - 1);
    for (uint32_t g = 2; g < p; ++g) {
        bool ok = true;
        for (uint32_t q : qs)
            if (powmod(g, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw numerical_error("no primitive root found mod " + std::to_string(p));
}

std::mutex g_mx;
std::map<uint32_t, std::shared_ptr<const CharacterGroup>> g_groups;

constexpr uint32_t kModulusCap = 10'000;

} // namespace

CharacterGroup::CharacterGroup(uint32_t q) : q_(q) {
    uint32_t rest = q;
    for (uint32_t p = 2; rest > 1; ++p) {
        if (rest % p) continue;
        uint32_t pk = 1, a = 0;
        while (rest % p == 0) { rest /= p; pk *= p; ++a; }

        if (p == 2) {
            if (a == 1) continue; // (Z/2)^* trivial
            if (a == 2) {
                Component c;
                c.pk = 4;
                c.order = 2;
                c.dlog.assign(4, 0);
                c.dlog[3] = 1;
                comps_.push_back(std::move(c));
                continue;
            }
            // a >= 3: {+-1} x <5>
            Component sign, five;
            sign.pk = five.pk = pk;
            sign.order = 2;
            sign.is_sign = true;
            five.order = pk / 4;
            sign.dlog.assign(pk, 0);
            five.dlog.assign(pk, 0);
            uint64_t r = 1;
            for (uint32_t t = 0; t < five.order; ++t) {
                five.dlog[r] = t;
                sign.dlog[r] = 0;
                uint64_t neg = pk - r;
                five.dlog[neg] = t;
                sign.dlog[neg] = 1;
                r = (r * 5) % pk;
            }
            comps_.push_back(std::move(sign));
            comps_.push_back(std::move(five));
            continue;
        }

        Component c;
        c.pk = pk;
        c.order = pk / p * (p - 1); // phi(p^a)
        uint32_t g = primitive_root(p);
        if (a >= 2 && powmod(g, p - 1, uint64_t(p) * p) == 1) g += p;
        c.dlog.assign(pk, 0);
        uint64_t r = 1;
        for (uint32_t e = 0; e < c.order; ++e) {
            c.dlog[r] = e;
            r = (r * g) % pk;
        }
        comps_.push_back(std::move(c));
    }

    phi_ = 1;
    for (const auto& c : comps_) {
        orders_.push_back(c.order);
        phi_ *= c.order;
    }
}

std::shared_ptr<const CharacterGroup> CharacterGroup::for_modulus(uint32_t q) {
    if (q < 1) throw validation_error("character modulus must be >= 1");
    if (q > kModulusCap)
        throw validation_error("character modulus " + std::to_string(q) + " exceeds cap " +
                               std::to_string(kModulusCap));
    std::lock_guard<std::mutex> lk(g_mx);
    auto it = g_groups.find(q);
    if (it != g_groups.end()) return it->second;
    auto grp = std::shared_ptr<const CharacterGroup>(new CharacterGroup(q));
    g_groups.emplace(q, grp);
    return grp;
}

cplx CharacterGroup::chi(uint64_t index, uint64_t n) const {
    if (index >= phi_)
        throw validation_error("character index " + std::to_string(index) + " out of range [0, " +
                               std::to_string(phi_) + ") for modulus " + std::to_string(q_));
    if (std::gcd(n % q_, uint64_t(q_)) != 1) return {0.0, 0.0};

    // Exact rational phase: sum j_i * e_i / d_i (mod 1).
    int64_t den = 1;
    for (const auto& c : comps_) den = std::lcm<int64_t>(den, c.order);
    int64_t num = 0;
    uint64_t rest = index;
    for (const auto& c : comps_) {
        uint64_t j = rest % c.order;
        rest /= c.order;
        uint64_t e = c.dlog[n % c.pk];
        num = (num + int64_t(j) * int64_t(e) % den * (den / c.order)) % den;
    }
    int64_t g = std::gcd(num, den);
    if (g > 0) { num /= g; den /= g; }
    switch (den) {
        case 1: return {1.0, 0.0};
        case 2: return {-1.0, 0.0};
        case 4: return num == 1 ? cplx{0.0, 1.0} : cplx{0.0, -1.0};
        default: return unit_phase(2.0 * M_PI * double(num) / double(den));
    }
}

bool CharacterGroup::is_real_character(uint64_t index) const {
    if (index >= phi_) throw validation_error("character index out of range");
    uint64_t rest = index;
    for (const auto& c : comps_) {
        uint64_t j = rest % c.order;
        rest /= c.order;
        if ((2 * j) % c.order != 0) return false;
    }
    return true;
}

} // namespace halasz
