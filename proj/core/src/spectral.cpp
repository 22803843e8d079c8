#include "halasz/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <json.hpp>

#include "halasz/errors.hpp"
#include "halasz/lvalue.hpp"
#include "halasz/parallel.hpp"
#include "halasz/primes.hpp"

namespace halasz {

namespace {

constexpr std::size_t kBlock = 4096;
constexpr double kTieRel = 1e-12;

// Coefficient data for the truncated Euler product at fixed sigma.
struct PrimeData {
    // primes whose only admissible power is p itself: local = 1 + c * p^{-it}
    std::vector<double> lp, c_re, c_im;
    // small primes with p^2 <= cutoff: local = 1 + sum_a c_a p^{-iat}
    struct Small {
        double lp;
        std::vector<cplx> coeffs; // coeffs[a-1] = f(p^a) p^{-a sigma}
    };
    std::vector<Small> small;
};

PrimeData prepare_primes(const MultFuncSpec& spec, double sigma, uint64_t cutoff) {
    PrimeData d;
    auto pl = prime_list(cutoff);
    for (uint32_t p : pl->primes) {
        if (p > cutoff) break;
        double lp = std::log(double(p));
        double pw = std::exp(-sigma * lp); // p^-sigma, real
        if (uint64_t(p) > cutoff / p) {
            cplx c = spec.rule(p, 1) * pw;
            d.lp.push_back(lp);
            d.c_re.push_back(c.real());
            d.c_im.push_back(c.imag());
        } else {
            PrimeData::Small s;
            s.lp = lp;
            double paw = pw;
            uint64_t pk = p;
            for (uint32_t a = 1;; ++a) {
                s.coeffs.push_back(spec.rule(p, a) * paw);
                if (pk > cutoff / p) break;
                pk *= p;
                paw *= pw;
            }
            d.small.push_back(std::move(s));
        }
    }
    return d;
}

} // namespace

void euler_grid_scan(const MultFuncSpec& spec, double sigma, uint64_t cutoff, double t0, double h,
                     std::size_t count, cplx* out) {
    if (count == 0) return;
    PrimeData pd = prepare_primes(spec, sigma, cutoff);
    const double tw = spec.twist;

    std::size_t n_blocks = (count + kBlock - 1) / kBlock;
    parallel_chunks(n_blocks, [&](std::size_t blk) {
        std::size_t i0 = blk * kBlock;
        std::size_t len = std::min(kBlock, count - i0);
        std::vector<double> are(len, 1.0), aim(len, 0.0);

        // small primes, full local factor per point
        for (const auto& s : pd.small) {
            double base = -(t0 + tw) * s.lp;
            double step = -h * s.lp;
            for (std::size_t i = 0; i < len; ++i) {
                double th = base + step * double(i0 + i);
                double wr = std::cos(th), wi = std::sin(th);
                // Horner over coeffs: local = 1 + w*(c1 + w*(c2 + ...))
                double hr = 0.0, hi = 0.0;
                for (std::size_t a = s.coeffs.size(); a-- > 0;) {
                    double cr = s.coeffs[a].real() + hr * wr - hi * wi;
                    double ci = s.coeffs[a].imag() + hr * wi + hi * wr;
                    hr = cr;
                    hi = ci;
                }
                double lr = 1.0 + hr * wr - hi * wi;
                double li = hr * wi + hi * wr;
                double nr = are[i] * lr - aim[i] * li;
                double ni = are[i] * li + aim[i] * lr;
                are[i] = nr;
                aim[i] = ni;
            }
        }

        // Large primes: local = 1 + c * w with w = e^{-i t lp}. Per prime the
        // phases are filled by an 8-lane rotation recurrence, then the
        // accumulator update is a dependency-free sweep the compiler can
        // vectorize. Lane layout is fixed, so results are identical for any
        // worker count.
        std::vector<double> wre(len), wim(len);
        const std::size_t np = pd.lp.size();
        for (std::size_t pi = 0; pi < np; ++pi) {
            const double lp = pd.lp[pi];
            const double base = -(t0 + tw) * lp;
            const double step = -h * lp;

            double lre[8], lim[8];
            for (int j = 0; j < 8; ++j) {
                double th = base + step * double(i0 + std::size_t(j));
                lre[j] = std::cos(th);
                lim[j] = std::sin(th);
            }
            const double r8 = std::cos(8.0 * step), s8 = std::sin(8.0 * step);
            std::size_t i = 0;
            for (; i + 8 <= len; i += 8) {
                for (int j = 0; j < 8; ++j) {
                    wre[i + j] = lre[j];
                    wim[i + j] = lim[j];
                    const double nr = lre[j] * r8 - lim[j] * s8;
                    const double ni = lre[j] * s8 + lim[j] * r8;
                    lre[j] = nr;
                    lim[j] = ni;
                }
            }
            for (; i < len; ++i) {
                double th = base + step * double(i0 + i);
                wre[i] = std::cos(th);
                wim[i] = std::sin(th);
            }

            const double cr = pd.c_re[pi], ci = pd.c_im[pi];
            double* __restrict__ ar = are.data();
            double* __restrict__ ai = aim.data();
            const double* __restrict__ wr = wre.data();
            const double* __restrict__ wi = wim.data();
            if (ci == 0.0) {
                for (std::size_t k = 0; k < len; ++k) {
                    const double lr = 1.0 + cr * wr[k];
                    const double li = cr * wi[k];
                    const double nr = ar[k] * lr - ai[k] * li;
                    const double ni = ar[k] * li + ai[k] * lr;
                    ar[k] = nr;
                    ai[k] = ni;
                }
            } else {
                for (std::size_t k = 0; k < len; ++k) {
                    const double lr = 1.0 + cr * wr[k] - ci * wi[k];
                    const double li = cr * wi[k] + ci * wr[k];
                    const double nr = ar[k] * lr - ai[k] * li;
                    const double ni = ar[k] * li + ai[k] * lr;
                    ar[k] = nr;
                    ai[k] = ni;
                }
            }
        }

        for (std::size_t i = 0; i < len; ++i) out[i0 + i] = {are[i], aim[i]};
    });
}

double default_T0(double x, uint32_t kappa) {
    return std::pow(std::log(x), std::pow(2.0, double(kappa)));
}

double default_grid_step(double x) { return 1.0 / (8.0 * std::log(x)); }

namespace {

struct Probe {
    double t;
    double abs_l;
};

// Smallest |t| wins among values within kTieRel of the best, then smaller t.
template <typename Value>
const Probe* pick_argmax(const std::vector<Probe>& pool, Value value) {
    double best = -1.0;
    for (const auto& p : pool) best = std::max(best, value(p));
    const Probe* chosen = nullptr;
    for (const auto& p : pool) {
        if (value(p) < best * (1.0 - kTieRel)) continue;
        if (!chosen || std::abs(p.t) < std::abs(chosen->t) ||
            (std::abs(p.t) == std::abs(chosen->t) && p.t < chosen->t))
            chosen = &p;
    }
    return chosen;
}

} // namespace

namespace {

// True when every Euler coefficient is exactly real, so the grid values are
// bitwise symmetric under t -> -t and the scan can cover [0, T0] only.
bool coeffs_exactly_real(const MultFuncSpec& spec, uint64_t cutoff) {
    if (!spec.is_real || spec.twist != 0.0) return false;
    auto pl = prime_list(cutoff);
    for (uint32_t p : pl->primes) {
        if (p > cutoff) break;
        uint64_t pk = p;
        for (uint32_t a = 1;; ++a) {
            if (spec.rule(p, a).imag() != 0.0) return false;
            if (pk > cutoff / p) break;
            pk *= p;
        }
    }
    return true;
}

} // namespace

SpectralReport spectral_search(const MultFuncSpec& spec, double x, double T0, double grid_step,
                               uint64_t cutoff) {
    spec.validate();
    if (!(x >= 16.0)) throw validation_error("spectral_search needs x >= 16");
    if (cutoff == 0) cutoff = static_cast<uint64_t>(x);
    if (cutoff < 100) throw validation_error("spectral_search cutoff below 100");

    SpectralReport rep;
    rep.spec_name = spec.name;
    rep.kappa = spec.kappa;
    rep.x = x;
    rep.sigma0 = 1.0 + 1.0 / std::log(x);
    rep.cutoff = cutoff;
    rep.T0 = std::isnan(T0) ? default_T0(x, spec.kappa) : T0;
    rep.grid_step = std::isnan(grid_step) ? default_grid_step(x) : grid_step;
    if (!(rep.T0 > 0.0) || !(rep.grid_step > 0.0))
        throw validation_error("spectral_search needs positive T0 and grid_step");

    double lo = std::pow(std::log(x), std::pow(2.0, double(spec.kappa) - 1.0));
    double hi = default_T0(x, spec.kappa);
    if (rep.T0 < lo * (1.0 - 1e-12) || rep.T0 > hi * (1.0 + 1e-12))
        rep.warnings.push_back("T0 outside default range [(log x)^{2^{kappa-1}}, (log x)^{2^kappa}]");

    const double h = rep.grid_step;
    const int64_t K = static_cast<int64_t>(std::floor(rep.T0 / h));
    const std::size_t count = static_cast<std::size_t>(2 * K + 1);

    std::vector<Probe> pool;
    pool.reserve(count + 256);
    if (coeffs_exactly_real(spec, cutoff)) {
        std::vector<cplx> grid(std::size_t(K) + 1);
        euler_grid_scan(spec, rep.sigma0, cutoff, 0.0, h, grid.size(), grid.data());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            double t = double(i) * h;
            double a = std::abs(grid[i]);
            if (!std::isfinite(a))
                throw numerical_error("non-finite L-value on grid at t = " + std::to_string(t) +
                                      " for " + spec.name);
            pool.push_back({t, a});
            if (i > 0) pool.push_back({-t, a});
        }
    } else {
        std::vector<cplx> grid(count);
        euler_grid_scan(spec, rep.sigma0, cutoff, -double(K) * h, h, count, grid.data());
        for (std::size_t i = 0; i < count; ++i) {
            double t = (double(i) - double(K)) * h;
            double a = std::abs(grid[i]);
            if (!std::isfinite(a))
                throw numerical_error("non-finite L-value on grid at t = " + std::to_string(t) +
                                      " for " + spec.name);
            pool.push_back({t, a});
        }
    }

    const double sigma0 = rep.sigma0;
    auto f_n = [](const Probe& p) { return p.abs_l; };
    auto f_m = [sigma0](const Probe& p) { return p.abs_l / std::hypot(sigma0, p.t); };

    // Local refinement; probes are shared between the two functionals and
    // evaluated once per distinct t.
    std::map<double, double> eval_cache;
    auto probe_at = [&](double t) -> Probe {
        auto it = eval_cache.find(t);
        if (it == eval_cache.end()) {
            double a = std::abs(euler_product_value(spec, sigma0, t, cutoff));
            if (!std::isfinite(a))
                throw numerical_error("non-finite L-value at refined t = " + std::to_string(t) +
                                      " for " + spec.name);
            it = eval_cache.emplace(t, a).first;
        }
        return {t, it->second};
    };

    auto refine = [&](auto value) {
        double step = h;
        for (int round = 0; round < 3; ++round) {
            step /= 10.0;
            const Probe* best = pick_argmax(pool, value);
            double center = best->t;
            for (int j = -10; j <= 10; ++j) {
                double t = center + double(j) * step;
                if (t < -rep.T0 || t > rep.T0) continue;
                pool.push_back(probe_at(t));
            }
        }
    };
    refine(f_n);
    refine(f_m);
    rep.refined = true;
    rep.grid_points = pool.size();

    const Probe* pn = pick_argmax(pool, f_n);
    const Probe* pm = pick_argmax(pool, f_m);
    const double two_k_loglog = std::pow(2.0, double(spec.kappa)) * std::log(std::log(x));
    rep.phi = pn->t;
    rep.abs_l_at_phi = pn->abs_l;
    rep.N = two_k_loglog - std::log(pn->abs_l);
    rep.psi = pm->t;
    rep.m_ratio_at_psi = f_m(*pm);
    rep.M = two_k_loglog - std::log(rep.m_ratio_at_psi);
    return rep;
}

double e_kappa(double x, uint32_t kappa) {
    if (kappa < 1) throw validation_error("e_kappa needs kappa >= 1");
    if (!(x >= 16.0)) throw validation_error("e_kappa needs x >= 16");
    double lx = std::log(x), llx = std::log(lx);
    if (kappa == 1) return std::pow(lx, -1.0 + 4.0 / M_PI) * std::pow(llx, 5.0 - 8.0 / M_PI);
    return std::pow(lx, std::pow(2.0, double(kappa)) - 2.0) * std::pow(llx, 3.0);
}

const char* halasz_variant_name(HalaszVariant v) {
    switch (v) {
        case HalaszVariant::M: return "M";
        case HalaszVariant::N: return "N";
        default: return "mvf";
    }
}

double halasz_rhs(const SpectralReport& rep, HalaszVariant variant) {
    double lx = std::log(rep.x), llx = std::log(lx);
    double pw = std::pow(2.0, double(rep.kappa));
    double l1 = std::pow(lx, pw - 1.0);
    switch (variant) {
        case HalaszVariant::M:
            return (rep.M + 1.0) * std::exp(-rep.M) * l1 + l1 / rep.T0 + std::pow(llx, pw) / lx;
        case HalaszVariant::N:
            return (rep.N + 1.0) * std::exp(-rep.N) * l1 + l1 / rep.T0 + std::pow(llx, pw) / lx;
        default:
            return l1 * ((rep.N + 1.0) * std::exp(-rep.N) / (1.0 + std::abs(rep.phi)) +
                         e_kappa(rep.x, rep.kappa) / l1);
    }
}

std::string SpectralReport::to_json() const {
    nlohmann::json j;
    j["spec"] = spec_name;
    j["kappa"] = kappa;
    j["x"] = x;
    j["T0"] = T0;
    j["grid_step"] = grid_step;
    j["sigma0"] = sigma0;
    j["cutoff"] = cutoff;
    j["phi"] = phi;
    j["N"] = N;
    j["abs_l_at_phi"] = abs_l_at_phi;
    j["psi"] = psi;
    j["M"] = M;
    j["m_ratio_at_psi"] = m_ratio_at_psi;
    j["refined"] = refined;
    j["grid_points"] = grid_points;
    j["warnings"] = warnings;
    return j.dump();
}

} // namespace halasz
