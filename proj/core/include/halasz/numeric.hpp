#pragma once
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace halasz {

using cplx = std::complex<double>;

// Compensated (Kahan) accumulator. Works for double and std::complex<double>,
// since the correction term only needs componentwise +/-.
template <typename T>
struct kahan_acc {
    T sum{};
    T comp{};

    void add(const T& v) {
        T y = v - comp;
        T t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    T value() const { return sum; }
};

// Deterministic pairwise-tree fold of per-chunk partial sums. The fold order
// depends only on the chunk layout, never on thread scheduling.
template <typename T>
T pairwise_fold(std::vector<T> parts) {
    if (parts.empty()) return T{};
    while (parts.size() > 1) {
        std::size_t half = (parts.size() + 1) / 2;
        for (std::size_t i = 0; i + half < parts.size(); ++i)
            parts[i] = parts[i] + parts[i + half];
        parts.resize(half);
    }
    return parts[0];
}

inline cplx unit_phase(double theta) { return {std::cos(theta), std::sin(theta)}; }

// n^{-it} for positive n.
inline cplx power_twist(double n, double t) { return unit_phase(-t * std::log(n)); }

inline bool nearly_equal_rel(double a, double b, double rel) {
    double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) <= rel * scale;
}

} // namespace halasz
