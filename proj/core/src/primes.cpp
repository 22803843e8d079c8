#include "halasz/primes.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "halasz/errors.hpp"
#include "halasz/numeric.hpp"

namespace halasz {

namespace {

std::mutex g_mx;
std::shared_ptr<const SpfTable> g_spf;
std::shared_ptr<const PrimeList> g_primes;

constexpr uint64_t kSpfHardCap = 200'000'000; // spf alone is 4 bytes/n

std::shared_ptr<const SpfTable> build_spf(uint64_t limit) {
    auto tab = std::make_shared<SpfTable>(limit + 1, 0);
    auto& spf = *tab;
    for (uint64_t n = 2; n <= limit; ++n) spf[n] = static_cast<uint32_t>(n);
    for (uint64_t p = 2; p * p <= limit; ++p) {
        if (spf[p] != p) continue; // composite
        for (uint64_t m = p * p; m <= limit; m += p)
            if (spf[m] == m) spf[m] = static_cast<uint32_t>(p);
    }
    return tab;
}

} // namespace

std::shared_ptr<const SpfTable> spf_table(uint64_t limit) {
    if (limit > kSpfHardCap)
        throw resource_error("spf table limit " + std::to_string(limit) +
                             " exceeds hard cap " + std::to_string(kSpfHardCap));
    std::lock_guard<std::mutex> lk(g_mx);
    if (!g_spf || g_spf->size() <= limit) g_spf = build_spf(std::max<uint64_t>(limit, 1024));
    return g_spf;
}

std::size_t PrimeList::count_below(uint64_t x) const {
    auto it = std::upper_bound(primes.begin(), primes.end(), x);
    return static_cast<std::size_t>(it - primes.begin());
}

std::shared_ptr<const PrimeList> prime_list(uint64_t limit) {
    std::lock_guard<std::mutex> lk(g_mx);
    if (g_primes && g_primes->limit >= limit) return g_primes;

    uint64_t want = std::max<uint64_t>(limit, 1024);
    if (want > kSpfHardCap) throw resource_error("prime list limit exceeds hard cap");
    if (!g_spf || g_spf->size() <= want) g_spf = build_spf(want);
    const auto& spf = *g_spf;

    auto pl = std::make_shared<PrimeList>();
    pl->limit = want;
    pl->primes.reserve(static_cast<std::size_t>(
        want < 17 ? 8 : 1.2 * double(want) / std::log(double(want))));
    kahan_acc<double> recip;
    for (uint64_t n = 2; n <= want; ++n) {
        if (spf[n] == n) {
            pl->primes.push_back(static_cast<uint32_t>(n));
            recip.add(1.0 / double(n));
            pl->recip_prefix.push_back(recip.value());
        }
    }
    g_primes = pl;
    return g_primes;
}

double prime_recip_sum(uint64_t x) {
    auto pl = prime_list(x);
    std::size_t k = pl->count_below(x);
    return k == 0 ? 0.0 : pl->recip_prefix[k - 1];
}

} // namespace halasz
