#include "halasz/sieve_table.hpp"

#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>

#include "halasz/errors.hpp"
#include "halasz/parallel.hpp"

namespace halasz {

namespace {

constexpr uint64_t kSegment = 1 << 16;
constexpr char kMagic[4] = {'M', 'F', 'S', 'V'};
constexpr uint32_t kFormatVersion = 1;

uint64_t g_budget = uint64_t(2) << 30;

void put_bytes(std::ostream& os, const void* p, std::size_t n) {
    os.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
}

template <typename T>
void put_le(std::ostream& os, T v) {
    unsigned char buf[sizeof(T)];
    std::memcpy(buf, &v, sizeof(T)); // host is little-endian; format pinned LE
    put_bytes(os, buf, sizeof(T));
}

template <typename T>
T get_le(std::istream& is) {
    unsigned char buf[sizeof(T)];
    is.read(reinterpret_cast<char*>(buf), sizeof(T));
    T v;
    std::memcpy(&v, buf, sizeof(T));
    return v;
}

} // namespace

void set_sieve_budget(uint64_t bytes) { g_budget = bytes; }
uint64_t sieve_budget() { return g_budget; }

SieveTable SieveTable::build(const MultFuncSpec& spec, uint64_t x_max) {
    spec.validate();
    if (x_max < 2) throw validation_error("sieve needs x_max >= 2");
    if (x_max > kXMaxCap)
        throw validation_error("x_max " + std::to_string(x_max) + " exceeds cap " +
                               std::to_string(kXMaxCap));
    uint64_t need = (x_max + 1) * (2 * sizeof(cplx)) + (x_max + 1) * sizeof(uint32_t);
    if (need > g_budget)
        throw resource_error("sieve at x_max " + std::to_string(x_max) + " needs " +
                             std::to_string(need) + " bytes, budget " + std::to_string(g_budget));

    SieveTable t;
    t.spec_ = spec;
    t.x_max_ = x_max;
    t.spf_ = spf_table(x_max);
    t.values_.assign(x_max + 1, cplx{0.0, 0.0});
    const auto& spf = *t.spf_;
    const auto& rule = spec.rule;
    const double tw = spec.twist;

    uint64_t n_segs = (x_max + kSegment - 1) / kSegment;
    parallel_chunks(n_segs, [&](std::size_t seg) {
        uint64_t lo = seg * kSegment + 1;
        uint64_t hi = std::min<uint64_t>(lo + kSegment - 1, x_max);
        for (uint64_t n = lo; n <= hi; ++n) {
            if (n == 1) { t.values_[1] = {1.0, 0.0}; continue; }
            cplx v{1.0, 0.0};
            uint64_t m = n;
            while (m > 1) {
                uint64_t p = spf[m];
                uint32_t a = 0;
                uint64_t pk = 1;
                do { m /= p; pk *= p; ++a; } while (m % p == 0);
                cplx w = rule(p, a);
                if (tw != 0.0) w *= power_twist(double(pk), tw);
                v *= w;
            }
            t.values_[n] = v;
        }
    });

    t.cumsum_.assign(x_max + 1, cplx{0.0, 0.0});
    kahan_acc<cplx> acc;
    for (uint64_t n = 1; n <= x_max; ++n) {
        acc.add(t.values_[n]);
        t.cumsum_[n] = acc.value();
    }
    return t;
}

cplx SieveTable::value(uint64_t n) const {
    if (n < 1 || n > x_max_)
        throw validation_error("value index " + std::to_string(n) + " outside [1, " +
                               std::to_string(x_max_) + "]");
    return values_[n];
}

cplx SieveTable::partial_sum(uint64_t x) const {
    if (x < 1 || x > x_max_)
        throw validation_error("partial sum at x = " + std::to_string(x) + " outside [1, " +
                               std::to_string(x_max_) + "]");
    return cumsum_[x];
}

cplx SieveTable::twisted_sum(uint64_t x, double t) const {
    if (x < 1 || x > x_max_) throw validation_error("twisted sum x outside table range");
    if (t == 0.0) return cumsum_[x];

    uint64_t n_chunks = (x + kSegment - 1) / kSegment;
    std::vector<cplx> parts(n_chunks, cplx{0.0, 0.0});
    parallel_chunks(n_chunks, [&](std::size_t c) {
        uint64_t lo = c * kSegment + 1;
        uint64_t hi = std::min<uint64_t>(lo + kSegment - 1, x);
        kahan_acc<cplx> acc;
        for (uint64_t n = lo; n <= hi; ++n) acc.add(values_[n] * power_twist(double(n), t));
        parts[c] = acc.value();
    });
    return pairwise_fold(std::move(parts));
}

void SieveTable::dump(std::ostream& os) const {
    put_bytes(os, kMagic, 4);
    put_le<uint32_t>(os, kFormatVersion);
    put_le<uint32_t>(os, static_cast<uint32_t>(spec_.name.size()));
    put_bytes(os, spec_.name.data(), spec_.name.size());
    put_le<uint32_t>(os, spec_.kappa);
    put_le<double>(os, spec_.twist);
    put_le<uint64_t>(os, x_max_);
    for (uint64_t n = 1; n <= x_max_; ++n) {
        put_le<double>(os, values_[n].real());
        put_le<double>(os, values_[n].imag());
    }
}

SieveTable SieveTable::load(std::istream& is, const MultFuncSpec& spec) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw validation_error("bad table dump: magic mismatch");
    if (get_le<uint32_t>(is) != kFormatVersion)
        throw validation_error("bad table dump: unsupported version");
    uint32_t name_len = get_le<uint32_t>(is);
    std::string name(name_len, '\0');
    is.read(name.data(), name_len);
    uint32_t kappa = get_le<uint32_t>(is);
    double twist = get_le<double>(is);
    uint64_t x_max = get_le<uint64_t>(is);
    if (!is) throw validation_error("bad table dump: truncated header");
    if (name != spec.name || kappa != spec.kappa || twist != spec.twist)
        throw validation_error("table dump header (" + name + ", kappa " + std::to_string(kappa) +
                               ") does not match spec '" + spec.name + "'");

    SieveTable t;
    t.spec_ = spec;
    t.x_max_ = x_max;
    t.values_.assign(x_max + 1, cplx{0.0, 0.0});
    for (uint64_t n = 1; n <= x_max; ++n) {
        double re = get_le<double>(is);
        double im = get_le<double>(is);
        t.values_[n] = {re, im};
    }
    if (!is) throw validation_error("bad table dump: truncated values");

    t.cumsum_.assign(x_max + 1, cplx{0.0, 0.0});
    kahan_acc<cplx> acc;
    for (uint64_t n = 1; n <= x_max; ++n) {
        acc.add(t.values_[n]);
        t.cumsum_[n] = acc.value();
    }
    return t;
}

double eta_largeness(const SieveTable& table, double x) {
    constexpr double e = 2.718281828459045;
    if (!(x >= e)) throw validation_error("eta_largeness needs x >= e");
    uint64_t n = static_cast<uint64_t>(std::floor(x));
    if (n > table.x_max()) throw validation_error("eta_largeness x beyond table range");
    double denom_exp = std::pow(2.0, double(table.spec().kappa)) - 1.0;
    double denom = x * std::pow(std::log(x), denom_exp);
    return std::abs(table.partial_sum(n)) / denom;
}

} // namespace halasz
