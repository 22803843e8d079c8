#include "halasz/oracles.hpp"

#include <cmath>

#include "halasz/errors.hpp"
#include "halasz/numeric.hpp"

namespace halasz {
namespace oracle {

namespace {

// B_2 .. B_24
const double kBernoulli[] = {
    1.0 / 6,         -1.0 / 30,        1.0 / 42,          -1.0 / 30,
    5.0 / 66,        -691.0 / 2730,    7.0 / 6,           -3617.0 / 510,
    43867.0 / 798,   -174611.0 / 330,  854513.0 / 138,    -236364091.0 / 2730,
};

} // namespace

cplx zeta_em(cplx s) {
    if (s == cplx{1.0, 0.0}) throw validation_error("zeta pole at s = 1");
    // zeta(s) = sum_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2
    //           + sum_k B_2k/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    // N grows with |Im s| so the Bernoulli tail stays convergent.
    const int N = std::max(32, int(2.0 * std::abs(s.imag())) + 8);
    cplx sum{0.0, 0.0};
    for (int n = 1; n < N; ++n) sum += std::exp(-s * std::log(double(n)));
    const cplx Ns = std::exp(-s * std::log(double(N))); // N^-s
    sum += double(N) * Ns / (s - 1.0);
    sum += Ns * 0.5;
    cplx rising = s;            // s(s+1)...(s+2k-2)
    double factorial = 2.0;     // (2k)!
    cplx npow = Ns / double(N); // N^{-s-2k+1}
    for (int k = 1; k <= 12; ++k) {
        sum += kBernoulli[k - 1] / factorial * rising * npow;
        if (k == 12) break;
        rising *= (s + double(2 * k - 1)) * (s + double(2 * k));
        factorial *= double(2 * k + 1) * double(2 * k + 2);
        npow /= double(N) * double(N);
    }
    return sum;
}

std::vector<std::pair<uint64_t, uint32_t>> factorize(uint64_t n) {
    std::vector<std::pair<uint64_t, uint32_t>> fs;
    for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        uint32_t a = 0;
        while (n % p == 0) { n /= p; ++a; }
        fs.emplace_back(p, a);
    }
    if (n > 1) fs.emplace_back(n, 1);
    return fs;
}

cplx eval_direct(const MultFuncSpec& spec, uint64_t n) {
    if (n == 0) throw validation_error("f(0) undefined");
    cplx v{1.0, 0.0};
    double logn = 0.0;
    for (auto [p, a] : factorize(n)) {
        v *= spec.rule(p, a);
        logn += double(a) * std::log(double(p));
    }
    if (spec.twist != 0.0) v *= unit_phase(-spec.twist * logn);
    return v;
}

int moebius(uint64_t n) {
    int sign = 1;
    for (auto [p, a] : factorize(n)) {
        if (a >= 2) return 0;
        sign = -sign;
        (void)p;
    }
    return n == 1 ? 1 : sign;
}

uint64_t divisor_count(uint64_t n) {
    uint64_t d = 0;
    for (uint64_t i = 1; i * i <= n; ++i) {
        if (n % i) continue;
        d += (i * i == n) ? 1 : 2;
    }
    return d;
}

std::vector<int8_t> moebius_table(uint64_t x) {
    std::vector<int8_t> mu(x + 1, 0);
    for (uint64_t n = 1; n <= x; ++n) mu[n] = static_cast<int8_t>(moebius(n));
    return mu;
}

std::vector<uint32_t> divisor_count_table(uint64_t x) {
    std::vector<uint32_t> cnt(x + 1, 0);
    for (uint64_t d = 1; d <= x; ++d)
        for (uint64_t m = d; m <= x; m += d) ++cnt[m];
    return cnt;
}

int64_t tau_sum(uint64_t x) {
    // sum_{n<=x} tau(n) = sum_{d<=x} floor(x/d), no table needed
    int64_t s = 0;
    for (uint64_t d = 1; d <= x; ++d) s += int64_t(x / d);
    return s;
}

int64_t tau_square_sum(uint64_t x) {
    auto cnt = divisor_count_table(x);
    int64_t s = 0;
    for (uint64_t n = 1; n <= x; ++n) s += int64_t(cnt[n]) * int64_t(cnt[n]);
    return s;
}

uint64_t sigma11_mod_691(uint64_t n) {
    uint64_t s = 0;
    for (uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        uint64_t pair[2] = {d, n / d};
        int reps = (pair[0] == pair[1]) ? 1 : 2;
        for (int i = 0; i < reps; ++i) {
            uint64_t b = pair[i] % 691, pw = 1;
            for (int k = 0; k < 11; ++k) pw = (pw * b) % 691;
            s = (s + pw) % 691;
        }
    }
    return s;
}

} // namespace oracle
} // namespace halasz
