// Command-line front door: build and cache sieve tables, run any single
// computation (partial sums, L-values, spectral searches, distances, the
// theorem-shaped experiments), or the whole verification suite.
//
// Exit codes: 0 success (vacuous verdicts included), 2 validation error,
// 3 resource error, 1 anything else. Artifacts are written atomically.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "halasz/catalog.hpp"
#include "halasz/distance.hpp"
#include "halasz/errors.hpp"
#include "halasz/io_util.hpp"
#include "halasz/lvalue.hpp"
#include "halasz/oracles.hpp"
#include "halasz/parallel.hpp"
#include "halasz/spectral.hpp"
#include "halasz/suite.hpp"
#include "halasz/verify.hpp"

namespace {

using namespace halasz;

struct GlobalOpts {
    unsigned threads = 0;
    uint64_t seed = 20260809;
    std::string cache_dir;
    std::string out_path;
    std::string format = "jsonl";
    bool no_timestamp = false;
};

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string default_cache_dir() {
    if (const char* env = std::getenv("HALASZ_CACHE_DIR")) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME")) return std::string(xdg) + "/halasz";
    if (const char* home = std::getenv("HOME")) return std::string(home) + "/.cache/halasz";
    return "./halasz-cache";
}

// Disk-cached table build, keyed by (name, kappa, twist, x_max).
SieveTable load_or_build(const MultFuncSpec& spec, uint64_t x_max, const std::string& cache_dir) {
    char key[64];
    std::snprintf(key, sizeof key, "|%u|%.17g|%llu", spec.kappa, spec.twist,
                  static_cast<unsigned long long>(x_max));
    std::string path = cache_dir + "/sieve_" +
                       [&] {
                           char hex[20];
                           std::snprintf(hex, sizeof hex, "%016llx",
                                         (unsigned long long)fnv1a(spec.name + key));
                           return std::string(hex);
                       }() +
                       ".bin";
    {
        std::ifstream is(path, std::ios::binary);
        if (is) {
            try {
                return SieveTable::load(is, spec);
            } catch (const validation_error&) {
                // stale or foreign file; rebuild below
            }
        }
    }
    SieveTable t = SieveTable::build(spec, x_max);
    std::ostringstream os(std::ios::binary);
    t.dump(os);
    try {
        atomic_write_file(path, os.str());
    } catch (const resource_error&) {
        // cache directory not writable; computation still succeeded
    }
    return t;
}

void emit(const GlobalOpts& g, const std::string& content) {
    if (g.out_path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
    } else {
        atomic_write_file(g.out_path, content);
        std::cerr << "wrote " << g.out_path << "\n";
    }
}

std::string format_complex(cplx v) {
    char buf[80];
    if (std::abs(v.imag()) <= 1e-12 * std::max(1.0, std::abs(v.real()))) {
        std::snprintf(buf, sizeof buf, "%.17g", v.real());
    } else {
        std::snprintf(buf, sizeof buf, "%.17g%+.17gi", v.real(), v.imag());
    }
    return buf;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"halasz — partial sums, truncated L-values, pretentious distances and "
                 "decay exponents of divisor-bounded multiplicative functions"};
    app.require_subcommand(1);

    GlobalOpts g;
    g.cache_dir = default_cache_dir();
    app.add_option("--threads", g.threads, "worker threads (0 = all cores; results never depend on this)");
    app.add_option("--seed", g.seed, "seed for randomized sweeps");
    app.add_option("--cache-dir", g.cache_dir, "sieve cache directory (env HALASZ_CACHE_DIR)");
    app.add_option("--out", g.out_path, "write output to this file (atomic) instead of stdout");
    app.add_option("--format", g.format, "csv or jsonl where both exist")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    app.add_flag("--no-timestamp", g.no_timestamp, "suppress the timestamp header line in CSV");

    std::string func = "one", f1 = "one", f2 = "one", strategy = "euler";
    uint64_t x = 10'000, x1 = 10'000, x2 = 10'000, X_max = 100'000, cutoff = 0;
    double t = 0.0, t1 = 0.0, t2 = 0.0, T0 = NAN, grid_step = NAN;
    double C = 0.05, c_const = 2.0, c_pass = 0.01, grid_ratio = 0.0, w = 2.0;
    double phi_override = NAN;
    std::string grid_csv, manifest_path, dump_path, artifact_dir;
    bool w_sweep = false;

    auto* sieve = app.add_subcommand(
        "sieve", "Build (and disk-cache) the table of f(n) and its partial sums S(n, f) for n <= x");
    sieve->add_option("--func", func, "multiplicative function name")->required();
    sieve->add_option("--x", x, "table size")->required();
    sieve->add_option("--dump", dump_path, "also write the binary table dump here");
    sieve->add_option("--manifest", manifest_path, "write the catalog manifest text file here");

    auto* sum = app.add_subcommand(
        "sum", "Exact partial sum S(x, f) = sum over n <= x of f(n), from the sieve table");
    sum->add_option("--func", func)->required();
    sum->add_option("--x", x)->required();

    auto* lval = app.add_subcommand(
        "lvalue", "Truncated L(1 + 1/log x + it, f): direct series sum or Euler product, "
                  "with an explicit tail estimate");
    lval->add_option("--func", func)->required();
    lval->add_option("--x", x)->required();
    lval->add_option("--t", t, "imaginary shift t");
    lval->add_option("--strategy", strategy)->check(CLI::IsMember({"direct", "euler"}));
    lval->add_option("--cutoff", cutoff, "truncation point (default x)");

    auto* spectral = app.add_subcommand(
        "spectral", "Locate phi = argmax |L(1+1/log x+it, f)| and psi = argmax of the same "
                    "divided by |1+1/log x+it| over |t| <= T0, and solve the decay exponents "
                    "N and M from e^-N (log x)^{2^kappa} = |L| (and likewise M)");
    spectral->add_option("--func", func)->required();
    spectral->add_option("--x", x)->required();
    spectral->add_option("--T0", T0, "scan range (default (log x)^{2^kappa})");
    spectral->add_option("--grid-step", grid_step, "grid step (default 1/(8 log x))");
    spectral->add_option("--cutoff", cutoff, "Euler truncation (default x)");
    spectral->add_option("--grid-csv", grid_csv, "emit the (t, Re L, Im L, |L|) grid as CSV here");

    auto* dist = app.add_subcommand(
        "dist", "Pretentious distance D^2(f, n^{it}; x) = sum over p <= x of "
                "(2^kappa - Re f(p) p^{-it})/p, plus the L-comparison gap");
    dist->add_option("--func", func)->required();
    dist->add_option("--t", t);
    dist->add_option("--x", x)->required();

    auto* tri = app.add_subcommand(
        "triangle", "Triangle-type inequality: D(f1,n^{it1};x1) + D(f2,n^{it2};x2) >= "
                    "2^{-kappa/2} D(f1 f2, n^{i(t1+t2)}; min(x1,x2))");
    tri->add_option("--f1", f1)->required();
    tri->add_option("--f2", f2)->required();
    tri->add_option("--x1", x1)->required();
    tri->add_option("--x2", x2)->required();
    tri->add_option("--t1", t1);
    tri->add_option("--t2", t2);

    auto* lip = app.add_subcommand(
        "lipschitz", "Lipschitz-type delta between the twisted means at x and x/w against the "
                     "(log w + (log log x)^2)/log x bound, for 1 <= w <= x^{1/3}");
    lip->add_option("--func", func)->required();
    lip->add_option("--x", x)->required();
    lip->add_option("--w", w, "single scale factor");
    lip->add_flag("--sweep", w_sweep, "sweep w = 1, 2, 4, ... up to x^{1/3}");
    lip->add_option("--phi", phi_override, "twist phase (default: phi from a spectral search)");

    auto* lob = app.add_subcommand(
        "lowerbound", "Search y in [x^gamma, x], gamma = 1/(lambda e^lambda), for a large "
                      "|S(y,f)| relative to e^{-D^2} y (log y)^{2^kappa-1}/(1+|psi|)");
    lob->add_option("--func", func)->required();
    lob->add_option("--x", x)->required();
    lob->add_option("--c", c_const, "constant c inside lambda");
    lob->add_option("--c-pass", c_pass, "pass threshold for the best ratio");
    lob->add_option("--grid-ratio", grid_ratio, "geometric grid ratio (default 1.05)");

    auto* th1 = app.add_subcommand(
        "theorem1", "Product-sum pipeline: measure eta-largeness of f1 and f2, form f1 f2 "
                    "(kappa doubles), scan x in [min(x1,x2)^{xi^2}, X_max] for "
                    "|S(x, f1 f2)| >= xi x (log x)^{2^{2kappa}-1} with xi = C eta^{1+2^{kappa+3}}");
    th1->add_option("--f1", f1)->required();
    th1->add_option("--x1", x1)->required();
    th1->add_option("--f2", f2)->required();
    th1->add_option("--x2", x2)->required();
    th1->add_option("--C", C, "pipeline constant");
    th1->add_option("--X-max", X_max)->required();
    th1->add_option("--grid-ratio", grid_ratio, "geometric scan ratio (default 1.02)");

    auto* cor = app.add_subcommand(
        "corollary12", "The product-sum pipeline for the weight-12 eigenform coefficients "
                       "lambda_Delta (kappa = 1, exponent 1+2^4 = 17)");
    cor->add_option("--x1", x1)->required();
    cor->add_option("--x2", x2)->required();
    cor->add_option("--X-max", X_max)->required();
    cor->add_option("--C", C);

    auto* gsd = app.add_subcommand(
        "gsdecay", "Mean-value decay bound when the spectral point is far out: requires "
                   "|phi| >= (log x)^{2^{kappa-1}}, records |S(x,f)/x| against the "
                   "(log x)^{2^kappa-1}/(|phi|-2) bound");
    gsd->add_option("--func", func)->required();
    gsd->add_option("--x", x)->required();
    gsd->add_option("--phi-override", phi_override, "force the spectral point (test hook)");

    auto* suite = app.add_subcommand(
        "suite", "Run the full verification suite (one pass/fail line per criterion)");
    suite->add_option("--artifact-dir", artifact_dir, "write verdict JSONL and CSV traces here");
    unsigned threads_main = 8;
    suite->add_option("--threads-main", threads_main,
                      "worker count for the main pass (the determinism check compares against 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (g.threads) set_thread_count(g.threads);

        if (sieve->parsed()) {
            MultFuncSpec spec = parse_func(func);
            SieveTable tab = load_or_build(spec, x, g.cache_dir);
            if (!dump_path.empty()) {
                std::ostringstream os(std::ios::binary);
                tab.dump(os);
                atomic_write_file(dump_path, os.str());
            }
            if (!manifest_path.empty()) atomic_write_file(manifest_path, catalog_manifest());
            std::ostringstream os;
            os << "built " << spec.name << " up to " << x << "; S(" << x
               << ") = " << format_complex(tab.partial_sum(x))
               << "; eta-largeness = " << eta_largeness(tab, double(x)) << "\n";
            emit(g, os.str());
        } else if (sum->parsed()) {
            MultFuncSpec spec = parse_func(func);
            SieveTable tab = load_or_build(spec, x, g.cache_dir);
            emit(g, format_complex(tab.partial_sum(x)));
        } else if (lval->parsed()) {
            MultFuncSpec spec = parse_func(func);
            if (cutoff == 0) cutoff = x;
            LStrategy st = strategy == "direct" ? LStrategy::direct : LStrategy::euler;
            SieveTable tab;
            const SieveTable* tp = nullptr;
            if (st == LStrategy::direct) {
                tab = load_or_build(spec, cutoff, g.cache_dir);
                tp = &tab;
            }
            LProbe p = l_value(spec, double(x), t, st, cutoff, tp);
            std::ostringstream os;
            os << "L(" << p.sigma << (t >= 0 ? "+" : "") << t << "i, " << spec.name
               << ") ~ " << format_complex(p.value) << "  |L| = " << p.abs_value()
               << "  tail_estimate = " << p.tail_estimate << "  [" << strategy_name(p.strategy)
               << ", cutoff " << p.cutoff << "]\n";
            emit(g, os.str());
        } else if (spectral->parsed()) {
            MultFuncSpec spec = parse_func(func);
            SpectralReport rep =
                spectral_search(spec, double(x), T0, grid_step, cutoff == 0 ? x : cutoff);
            if (!grid_csv.empty()) {
                double h = rep.grid_step;
                int64_t K = static_cast<int64_t>(std::floor(rep.T0 / h));
                std::size_t count = static_cast<std::size_t>(2 * K + 1);
                std::vector<cplx> vals(count);
                euler_grid_scan(spec, rep.sigma0, rep.cutoff, -double(K) * h, h, count,
                                vals.data());
                std::string csv = timestamp_header(g.no_timestamp);
                csv += "t,re_l,im_l,abs_l\n";
                char row[160];
                for (std::size_t i = 0; i < count; ++i) {
                    double ti = (double(i) - double(K)) * h;
                    std::snprintf(row, sizeof row, "%.17g,%.17g,%.17g,%.17g\n", ti,
                                  vals[i].real(), vals[i].imag(), std::abs(vals[i]));
                    csv += row;
                }
                atomic_write_file(grid_csv, csv);
            }
            emit(g, rep.to_json());
        } else if (dist->parsed()) {
            MultFuncSpec spec = parse_func(func);
            DistanceReport rep = l_distance_gap(spec, t, x);
            if (g.format == "csv") {
                std::string csv = timestamp_header(g.no_timestamp);
                csv += "spec,t,x,dsq,l_gap,prime_count\n" + rep.csv_row() + "\n";
                emit(g, csv);
            } else {
                std::ostringstream os;
                os << "{\"spec\":\"" << rep.spec_name << "\",\"t\":" << rep.t
                   << ",\"x\":" << rep.x << ",\"dsq\":" << rep.dsq << ",\"l_gap\":" << rep.l_gap
                   << ",\"prime_count\":" << rep.prime_count << "}";
                emit(g, os.str());
            }
        } else if (tri->parsed()) {
            TriangleVerdict v =
                triangle_check(parse_func(f1), x1, t1, parse_func(f2), x2, t2);
            emit(g, v.to_json());
        } else if (lip->parsed()) {
            MultFuncSpec spec = parse_func(func);
            SieveTable tab = load_or_build(spec, x, g.cache_dir);
            double phi = phi_override;
            if (std::isnan(phi)) phi = spectral_search(spec, double(x)).phi;
            std::vector<double> ws;
            if (w_sweep) {
                double cap = std::cbrt(double(x));
                for (double wv = 1.0; wv <= cap; wv *= 2.0) ws.push_back(wv);
            } else {
                ws.push_back(w);
            }
            TheoremVerdict v = lipschitz_scan(tab, x, phi, ws);
            emit(g, v.to_json());
        } else if (lob->parsed()) {
            MultFuncSpec spec = parse_func(func);
            SieveTable tab = load_or_build(spec, x, g.cache_dir);
            SpectralReport rep = spectral_search(spec, double(x));
            LowerBoundSearch s = lower_bound_search(tab, rep, c_const,
                                                    grid_ratio > 1.0 ? grid_ratio : 1.05, c_pass);
            emit(g, lower_bound_verdict(s).to_json());
        } else if (th1->parsed()) {
            TheoremVerdict v =
                main_theorem_pipeline(parse_func(f1), x1, parse_func(f2), x2, C, X_max,
                                      grid_ratio > 1.0 ? grid_ratio : 1.02);
            emit(g, v.to_json());
        } else if (cor->parsed()) {
            TheoremVerdict v = cuspform_corollary(x1, x2, X_max, C);
            emit(g, v.to_json());
        } else if (gsd->parsed()) {
            MultFuncSpec spec = parse_func(func);
            SieveTable tab = load_or_build(spec, x, g.cache_dir);
            SpectralReport rep = spectral_search(spec, double(x));
            TheoremVerdict v = gs_decay_check(tab, rep, phi_override);
            emit(g, v.to_json());
        } else if (suite->parsed()) {
            SuiteOptions opts;
            opts.threads_main = g.threads ? g.threads : threads_main;
            opts.seed = g.seed;
            opts.artifact_dir = artifact_dir;
            SuiteResult res = run_acceptance(opts, std::cout);
            return res.all_pass ? 0 : 1;
        }
        return 0;
    } catch (const validation_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
