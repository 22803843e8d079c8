#include "halasz/catalog.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "halasz/dirichlet.hpp"
#include "halasz/errors.hpp"
#include "halasz/ramanujan.hpp"

namespace halasz {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    std::size_t e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    // trim to shortest repr that round-trips
    for (int prec = 1; prec < 17; ++prec) {
        char probe[40];
        std::snprintf(probe, sizeof probe, "%.*g", prec, v);
        double back = std::strtod(probe, nullptr);
        if (back == v) return probe;
    }
    return buf;
}

// Splits "a,b" at the top-level comma (ignoring nested parens).
std::pair<std::string, std::string> split_args(const std::string& s, const std::string& ctx) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == ',' && depth == 0)
            return {trim(s.substr(0, i)), trim(s.substr(i + 1))};
    }
    throw validation_error("expected two comma-separated arguments in '" + ctx + "'");
}

} // namespace

MultFuncSpec one_spec() {
    MultFuncSpec s;
    s.name = "one";
    s.kappa = 1;
    s.rule = [](uint64_t, uint32_t) { return cplx{1.0, 0.0}; };
    s.is_real = s.is_nonnegative = s.is_completely_multiplicative = true;
    return s;
}

MultFuncSpec moebius_spec() {
    MultFuncSpec s;
    s.name = "moebius";
    s.kappa = 1;
    s.rule = [](uint64_t, uint32_t a) { return a == 1 ? cplx{-1.0, 0.0} : cplx{0.0, 0.0}; };
    s.is_real = true;
    return s;
}

MultFuncSpec liouville_spec() {
    MultFuncSpec s;
    s.name = "liouville";
    s.kappa = 1;
    s.rule = [](uint64_t, uint32_t a) { return (a & 1) ? cplx{-1.0, 0.0} : cplx{1.0, 0.0}; };
    s.is_real = true;
    s.is_completely_multiplicative = true;
    return s;
}

MultFuncSpec tau_pow_spec(uint32_t k) {
    if (k < 1) throw validation_error("tau_pow exponent must be >= 1");
    MultFuncSpec s;
    s.name = k == 1 ? "tau" : "tau_pow" + std::to_string(k);
    s.kappa = k;
    s.rule = [k](uint64_t, uint32_t a) {
        double v = 1.0, base = double(a) + 1.0;
        for (uint32_t i = 0; i < k; ++i) v *= base;
        return cplx{v, 0.0};
    };
    s.is_real = s.is_nonnegative = true;
    return s;
}

MultFuncSpec dirichlet_char_spec(uint32_t q, uint64_t index) {
    auto grp = CharacterGroup::for_modulus(q);
    if (index >= grp->num_characters())
        throw validation_error("unknown character index " + std::to_string(index) + " mod " +
                               std::to_string(q) + "; valid range [0, " +
                               std::to_string(grp->num_characters()) + ")");
    MultFuncSpec s;
    s.name = "chi_" + std::to_string(q) + "_" + std::to_string(index);
    s.kappa = 1;
    s.rule = [grp, index](uint64_t p, uint32_t a) {
        cplx c = grp->chi(index, p);
        cplx v{1.0, 0.0};
        for (uint32_t i = 0; i < a; ++i) v *= c;
        return v;
    };
    s.is_real = grp->is_real_character(index);
    s.is_nonnegative = index == 0; // principal takes values {0, 1}
    s.is_completely_multiplicative = true;
    return s;
}

MultFuncSpec hecke_delta_spec() {
    MultFuncSpec s;
    s.name = "hecke_delta";
    s.kappa = 1;
    s.rule = [](uint64_t p, uint32_t a) {
        uint64_t pk = 1;
        for (uint32_t i = 0; i < a; ++i) {
            if (pk > kTauOracleCap / p)
                throw resource_error("hecke_delta needs tau(" + std::to_string(p) + "^" +
                                     std::to_string(a) + "), past the oracle cap " +
                                     std::to_string(kTauOracleCap));
            pk *= p;
        }
        auto tau = ramanujan_tau_table(std::max<uint64_t>(pk, 1000));
        return cplx{mpz_get_d((*tau)[pk].get_mpz_t()) / std::pow(double(pk), 5.5), 0.0};
    };
    s.is_real = true;
    return s;
}

MultFuncSpec twist_spec(MultFuncSpec base, double t0) {
    base.validate();
    MultFuncSpec s = std::move(base);
    s.name = "twist(" + s.name + "," + format_double(t0) + ")";
    s.twist += t0;
    s.is_nonnegative = false;
    s.is_real = s.is_real && s.twist == 0.0;
    return s;
}

MultFuncSpec product_spec(const MultFuncSpec& a, const MultFuncSpec& b) {
    a.validate();
    b.validate();
    MultFuncSpec s;
    s.name = "product(" + a.name + "," + b.name + ")";
    s.kappa = a.kappa + b.kappa;
    auto ra = a.rule, rb = b.rule;
    s.rule = [ra, rb](uint64_t p, uint32_t k) { return ra(p, k) * rb(p, k); };
    s.is_real = a.is_real && b.is_real;
    s.is_nonnegative = a.is_nonnegative && b.is_nonnegative;
    s.is_completely_multiplicative = a.is_completely_multiplicative && b.is_completely_multiplicative;
    s.twist = a.twist + b.twist;
    return s;
}

std::vector<MultFuncSpec> catalog() {
    std::vector<MultFuncSpec> cs;
    cs.push_back(one_spec());
    cs.push_back(moebius_spec());
    cs.push_back(liouville_spec());
    cs.push_back(tau_pow_spec(1));
    cs.push_back(tau_pow_spec(2));
    MultFuncSpec mu_sq = product_spec(moebius_spec(), moebius_spec());
    mu_sq.is_nonnegative = true; // mu(n)^2 is the squarefree indicator
    cs.push_back(std::move(mu_sq));
    cs.push_back(dirichlet_char_spec(4, 1));
    cs.push_back(dirichlet_char_spec(5, 1));
    cs.push_back(hecke_delta_spec());
    cs.push_back(twist_spec(one_spec(), 1.5));
    return cs;
}

MultFuncSpec parse_func(const std::string& raw) {
    std::string name = trim(raw);

    if (name == "one") return one_spec();
    if (name == "moebius" || name == "mu") return moebius_spec();
    if (name == "liouville") return liouville_spec();
    if (name == "tau") return tau_pow_spec(1);
    if (name == "hecke_delta") return hecke_delta_spec();
    if (name == "product(moebius,moebius)") {
        for (auto& c : catalog())
            if (c.name == name) return c; // catalog copy carries the nonneg flag
    }

    auto parse_u64 = [&](const std::string& s, const char* what) -> uint64_t {
        uint64_t v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || p != s.data() + s.size())
            throw validation_error(std::string("bad ") + what + " in function name '" + name + "'");
        return v;
    };

    if (name.rfind("tau_pow", 0) == 0)
        return tau_pow_spec(static_cast<uint32_t>(parse_u64(name.substr(7), "exponent")));

    if (name.rfind("chi_", 0) == 0) {
        auto rest = name.substr(4);
        auto us = rest.find('_');
        if (us == std::string::npos)
            throw validation_error("character name must look like chi_<q>_<index>, got '" + name + "'");
        uint32_t q = static_cast<uint32_t>(parse_u64(rest.substr(0, us), "modulus"));
        uint64_t idx = parse_u64(rest.substr(us + 1), "index");
        return dirichlet_char_spec(q, idx);
    }

    if (name.rfind("twist(", 0) == 0 && name.back() == ')') {
        auto [inner, t0s] = split_args(name.substr(6, name.size() - 7), name);
        double t0 = std::strtod(t0s.c_str(), nullptr);
        if (!std::isfinite(t0)) throw validation_error("bad twist value in '" + name + "'");
        return twist_spec(parse_func(inner), t0);
    }

    if (name.rfind("product(", 0) == 0 && name.back() == ')') {
        auto [lhs, rhs] = split_args(name.substr(8, name.size() - 9), name);
        return product_spec(parse_func(lhs), parse_func(rhs));
    }

    std::ostringstream os;
    os << "unknown function '" << name << "'; catalog:";
    for (const auto& c : catalog()) os << ' ' << c.name;
    os << "  (also: tau_pow<K>, chi_<Q>_<J>, twist(<f>,<t0>), product(<f>,<g>))";
    throw validation_error(os.str());
}

std::string catalog_manifest() {
    std::ostringstream os;
    os << "# name kappa real nonnegative completely_multiplicative twist\n";
    for (const auto& c : catalog()) {
        os << c.name << ' ' << c.kappa << ' ' << (c.is_real ? 1 : 0) << ' '
           << (c.is_nonnegative ? 1 : 0) << ' ' << (c.is_completely_multiplicative ? 1 : 0) << ' '
           << format_double(c.twist) << '\n';
    }
    return os.str();
}

} // namespace halasz
