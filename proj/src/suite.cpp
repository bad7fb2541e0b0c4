#include "fcheck/suite.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <future>
#include <limits>
#include <random>
#include <sstream>

#include "fcheck/compact.hpp"
#include "fcheck/discrete.hpp"
#include "fcheck/expression.hpp"
#include "fcheck/hankel.hpp"
#include "fcheck/lca.hpp"
#include "fcheck/realline.hpp"

namespace fcheck::verify {

using json = nlohmann::ordered_json;
using funcspace::FiniteSequence;
using funcspace::TestFunction;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const std::map<Domain, std::vector<std::pair<std::string, double>>>& default_tolerances() {
    static const std::map<Domain, std::vector<std::pair<std::string, double>>> t{
        {Domain::Real,
         {{"diff-property", 1e-6},
          {"dirac-limit", 1e-4},
          {"shift-property", 1e-6},
          {"integration-by-parts", 1e-8},
          {"fourier-equality", 1e-5}}},
        {Domain::Discrete,
         {{"difference-property", 1e-12},
          {"indicator", 1e-12},
          {"summation-by-parts", 1e-12},
          {"kernel-recurrence", 1e-12},
          {"kernel-equality", 1e-10}}},
        {Domain::Lca,
         {{"shift", 1e-11}, {"dirac", 1e-11}, {"factorization", 1e-12}, {"fourier-equality", 1e-11}}},
        {Domain::Compact,
         {{"linearity", 1e-12},
          {"star", 1e-12},
          {"irreducibility", 0.5},
          {"convolution", 1e-12},
          {"shift", 1e-12},
          {"fourier-equality", 1e-11}}},
        {Domain::Hankel,
         {{"bessel-property", 1e-4},
          {"kernel-bounded", 1.0},
          {"normalization", 1e-7},
          {"kernel-ode", 1e-5},
          {"parts-identities", 1e-6},
          {"hankel-equality", 1e-3}}},
    };
    return t;
}

// ---------------------------------------------------------------- descriptors

struct Descriptor {
    std::string text;
    bool builtin = false;
    std::string name;
    std::vector<std::pair<std::string, std::size_t>> params;  // token, offset
};

constexpr std::string_view kBuiltinPrefix = "builtin:";

Descriptor parse_descriptor(const std::string& text) {
    Descriptor d;
    d.text = text;
    if (text.rfind(kBuiltinPrefix, 0) != 0) return d;
    d.builtin = true;
    std::size_t pos = kBuiltinPrefix.size();
    std::vector<std::pair<std::string, std::size_t>> tokens;
    for (;;) {
        const std::size_t next = text.find(':', pos);
        tokens.emplace_back(text.substr(pos, next == std::string::npos ? std::string::npos : next - pos), pos);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    for (const auto& [tok, off] : tokens)
        if (tok.empty()) throw ParseError("empty field in builtin descriptor '" + text + "'", off);
    d.name = tokens.front().first;
    d.params.assign(tokens.begin() + 1, tokens.end());
    return d;
}

[[noreturn]] void unknown_builtin(const Descriptor& d, Domain dom) {
    std::string names;
    for (const auto& n : builtin_names(dom)) names += (names.empty() ? "" : ", ") + n;
    throw ParseError("unknown " + to_string(dom) + " builtin '" + d.name + "' (available: " + names + ")",
                     kBuiltinPrefix.size());
}

double parse_number(const std::pair<std::string, std::size_t>& tok) {
    double v = 0.0;
    const char* first = tok.first.data();
    const char* last = first + tok.first.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last) throw ParseError("expected a number, got '" + tok.first + "'", tok.second);
    return v;
}

bool is_number(const std::string& s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

double numeric_param(const Descriptor& d, double fallback, std::size_t max_params = 1) {
    if (d.params.size() > max_params)
        throw ParseError("too many parameters for builtin '" + d.name + "'", d.params[max_params].second);
    return d.params.empty() ? fallback : parse_number(d.params.front());
}

void no_params(const Descriptor& d) {
    if (!d.params.empty())
        throw ParseError("builtin '" + d.name + "' takes no parameter", d.params.front().second);
}

expr::Expression parse_kernel_expression(const Descriptor& d, std::vector<std::string> vars) {
    return expr::Expression::parse(d.text, std::move(vars));
}

std::string bump_label(double c, double h, Complex a) {
    return "bump(" + fmt(c) + "," + fmt(h) + "," + fmt(a) + ")";
}

struct BumpSpec {
    double center;
    double halfwidth;
    Complex amplitude;
    TestFunction make() const { return funcspace::make_bump(center, halfwidth, amplitude); }
    std::string label() const { return bump_label(center, halfwidth, amplitude); }
};

std::vector<BumpSpec> random_bumps(std::mt19937_64& rng, int count, double clo, double chi, double hlo,
                                   double hhi) {
    std::uniform_real_distribution<double> c(clo, chi), h(hlo, hhi), a(-1.0, 1.0);
    std::vector<BumpSpec> out;
    for (int k = 0; k < count; ++k) {
        const double ck = c(rng), hk = h(rng), ar = a(rng), ai = a(rng);
        out.push_back({ck, hk, Complex(ar, ai)});
    }
    return out;
}

std::vector<double> random_points(std::mt19937_64& rng, int count, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> out;
    for (int k = 0; k < count; ++k) out.push_back(u(rng));
    return out;
}

using Task = std::function<PropertyReport()>;

/// Runs independent checks concurrently; the result order is the task order.
std::vector<PropertyReport> run_tasks(const std::vector<Task>& tasks) {
    std::vector<std::future<PropertyReport>> futures;
    futures.reserve(tasks.size());
    for (const auto& t : tasks) futures.push_back(std::async(std::launch::async, t));
    std::vector<PropertyReport> out;
    out.reserve(tasks.size());
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

// ------------------------------------------------------------------ real line

realline::KernelTransform real_target(const Descriptor& d) {
    if (!d.builtin) {
        const auto e = parse_kernel_expression(d, {"x", "y"});
        realline::KernelTransform t;
        t.kernel = [e](double x, double y) { return e({x, y}); };
        t.domain_note = "R, parsed kernel";
        return t;
    }
    if (d.name == "fourier") {
        no_params(d);
        return realline::fourier_kernel();
    }
    if (d.name == "zero") {
        no_params(d);
        return realline::zero_kernel();
    }
    if (d.name == "modulated") {
        const double a = numeric_param(d, 1.0);
        return realline::modulated_kernel([a](double y) { return Complex(1.0 + a * y * y); });
    }
    if (d.name == "x-weighted") {
        no_params(d);
        return realline::x_weighted_kernel();
    }
    unknown_builtin(d, Domain::Real);
}

const std::vector<BumpSpec>& real_bumps() {
    static const std::vector<BumpSpec> b{{0.0, 1.0, 1.0},
                                         {0.5, 0.7, Complex(1.0, 0.5)},
                                         {-1.0, 1.5, Complex(0.0, 1.0)},
                                         {2.0, 0.4, Complex(-0.7, 0.2)},
                                         {-0.3, 0.25, Complex(1.2, -0.4)}};
    return b;
}

std::vector<PropertyReport> run_real(const Descriptor& d, const SuiteConfig& cfg) {
    const auto t = real_target(d);
    const std::string id = d.text;
    const Probes& p = cfg.probes;
    auto tol = [&](const char* k) { return cfg.tolerance(Domain::Real, k); };

    std::vector<Task> tasks;
    tasks.push_back([&, t] {
        std::vector<Witness> ws;
        for (const auto& b : real_bumps()) {
            const TestFunction f = b.make();
            for (const double y : p.real_y)
                ws.push_back({b.label() + " y=" + fmt(y), realline::diff_property_residual(t, f, y)});
        }
        return make_report("diff-property", id, Role::Axiom, tol("diff-property"), std::move(ws),
                           "|T(f')(y) - 2 pi i y T(f)(y)|");
    });
    tasks.push_back([&, t] {
        std::vector<int> idx;
        for (int k = 1; k <= p.dirac_max_power; ++k) idx.push_back(1 << k);
        const realline::LimitSchedule sched{idx, 1e-4};
        std::vector<Witness> ws;
        std::vector<Series> series;
        std::string stalled;
        for (const double y : p.dirac_y) {
            const auto lim = realline::dirac_limit(t, y, sched);
            ws.push_back({"y=" + fmt(y) + " n=" + std::to_string(idx.back()), std::abs(lim.value - 1.0)});
            series.push_back({"y=" + fmt(y), lim.sequence});
            if (!lim.converged) stalled += (stalled.empty() ? "" : ",") + fmt(y);
        }
        PropertyReport r = make_report("dirac-limit", id, Role::Axiom, tol("dirac-limit"), std::move(ws),
                                       "|lim_n T(delta_n)(y) - 1| along n = 2.." + std::to_string(idx.back()));
        r.series = std::move(series);
        if (!stalled.empty()) mark_failed(r, "sequence not settled at y=" + stalled);
        return r;
    });
    tasks.push_back([&, t] {
        std::vector<Witness> ws;
        for (std::size_t k = 0; k < 3; ++k) {
            const auto& b = real_bumps()[k];
            const TestFunction f = b.make();
            for (const double x0 : {1.5, -0.75})
                for (const double y : {-1.0, 0.5, 2.0})
                    ws.push_back({b.label() + " x0=" + fmt(x0) + " y=" + fmt(y),
                                  realline::shift_property_residual_r(t, f, x0, y)});
        }
        return make_report("shift-property", id, Role::Diagnostic, tol("shift-property"), std::move(ws),
                           "|T(L_x0 f)(y) - e^{-2 pi i x0 y} T(f)(y)|");
    });
    tasks.push_back([&, t] {
        if (!t.kernel_dx)
            return not_applicable("integration-by-parts", id, Role::Diagnostic, tol("integration-by-parts"),
                                  "kernel has no closed-form x-derivative; the conclusion is tested without it");
        std::vector<Witness> ws;
        for (const auto& b : real_bumps()) {
            const TestFunction f = b.make();
            for (const double y : p.real_y)
                ws.push_back({b.label() + " y=" + fmt(y), realline::integration_by_parts_check(t, f, y)});
        }
        return make_report("integration-by-parts", id, Role::Diagnostic, tol("integration-by-parts"),
                           std::move(ws), "|int K f' + int K_x f|");
    });
    tasks.push_back([&, t] {
        std::mt19937_64 rng(cfg.seed ^ 0x7ea1ULL);
        const auto bumps = random_bumps(rng, 5, -2.0, 2.0, 0.3, 1.5);
        const auto ys = random_points(rng, 5, -3.0, 3.0);
        std::vector<Witness> ws;
        for (const auto& b : bumps) {
            const TestFunction f = b.make();
            for (const double y : ys)
                ws.push_back({b.label() + " y=" + fmt(y),
                              std::abs(realline::apply_kernel(t, f, y) - realline::fourier_r(f, y, t.quad))});
        }
        return make_report("fourier-equality", id, Role::Conclusion, tol("fourier-equality"), std::move(ws),
                           "|T(f)(y) - F(f)(y)| on a fresh random grid");
    });
    return run_tasks(tasks);
}

// ------------------------------------------------------------------- integers

discrete::DiscreteKernelTransform discrete_target(const Descriptor& d, long radius) {
    discrete::DiscreteKernelTransform t = discrete::dtft_kernel(radius);
    if (!d.builtin) {
        const auto e = parse_kernel_expression(d, {"n", "y"});
        t.kernel = [e](long n, double y) { return e({static_cast<double>(n), y}); };
        return t;
    }
    if (d.name == "dtft") {
        no_params(d);
        return t;
    }
    if (d.name == "zero") {
        no_params(d);
        return discrete::zero_discrete_kernel(radius);
    }
    if (d.name == "scaled") {
        const double c = numeric_param(d, 2.0);
        t.kernel = [c](long n, double y) { return c * unit_phase(static_cast<double>(n) * y); };
        return t;
    }
    if (d.name == "conjugate") {
        no_params(d);
        t.kernel = [](long n, double y) { return std::conj(unit_phase(static_cast<double>(n) * y)); };
        return t;
    }
    unknown_builtin(d, Domain::Discrete);
}

std::string sequence_label(const FiniteSequence& f) {
    std::string s;
    for (const auto& [n, v] : f.entries()) s += (s.empty() ? "" : "+") + fmt(v) + "*1_" + std::to_string(n);
    return s.empty() ? "0" : s;
}

std::vector<PropertyReport> run_discrete(const Descriptor& d, const SuiteConfig& cfg) {
    const long radius = cfg.probes.discrete_radius;
    const auto t = discrete_target(d, std::max<long>(radius, 16));
    const std::string id = d.text;
    const auto& ys = cfg.probes.discrete_y;
    auto tol = [&](const char* k) { return cfg.tolerance(Domain::Discrete, k); };

    std::vector<FiniteSequence> seqs{FiniteSequence::indicator(0),
                                     FiniteSequence::indicator(0) + FiniteSequence::indicator(2, 3.0),
                                     FiniteSequence::indicator(-1) + FiniteSequence::indicator(4, Complex(0, 2))};
    std::mt19937_64 rng(cfg.seed ^ 0xd15cULL);
    std::uniform_int_distribution<long> where(-8, 8);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int k = 0; k < 3; ++k) {
        FiniteSequence f;
        for (int j = 0; j < 4; ++j) {
            const long n = where(rng);
            const double re = u(rng), im = u(rng);
            f.set(n, f(n) + Complex(re, im));
        }
        seqs.push_back(f);
    }

    std::vector<Task> tasks;
    tasks.push_back([&, t] {
        std::vector<Witness> ws;
        for (const auto& f : seqs)
            for (const double y : ys)
                ws.push_back({sequence_label(f) + " y=" + fmt(y), discrete::difference_property_residual(t, f, y)});
        return make_report("difference-property", id, Role::Axiom, tol("difference-property"), std::move(ws),
                           "|T(D+ f)(y) - (e^{2 pi i y} - 1) T(f)(y)|");
    });
    tasks.push_back([&, t] {
        std::vector<Witness> ws;
        for (const double y : ys)
            ws.push_back({"y=" + fmt(y),
                          std::abs(discrete::apply_discrete(t, FiniteSequence::indicator(0), y) - 1.0)});
        return make_report("indicator", id, Role::Axiom, tol("indicator"), std::move(ws), "|T(1_0)(y) - 1|");
    });
    tasks.push_back([&, t] {
        std::vector<Witness> ws;
        for (const auto& f : seqs)
            for (const double y : ys)
                ws.push_back({sequence_label(f) + " y=" + fmt(y), discrete::summation_by_parts_check(t, f, y)});
        return make_report("summation-by-parts", id, Role::Diagnostic, tol("summation-by-parts"), std::move(ws));
    });
    tasks.push_back([&, t] {
        std::vector<Witness> ws;
        for (const double y : ys) {
            double worst = 0.0;
            for (long n = -radius + 1; n <= radius; ++n)
                worst = std::max(worst, discrete::kernel_recurrence_residual(t, n, y));
            ws.push_back({"y=" + fmt(y) + " |n|<=" + std::to_string(radius), worst});
        }
        return make_report("kernel-recurrence", id, Role::Diagnostic, tol("kernel-recurrence"), std::move(ws),
                           "max_n |e^{2 pi i y} K(n, y) - K(n-1, y)|");
    });
    tasks.push_back([&, t] {
        std::vector<Witness> ws;
        for (const double y : ys) {
            double worst = 0.0;
            for (long n = -radius; n <= radius; ++n) {
                const Complex k = discrete::apply_discrete(t, FiniteSequence::indicator(n), y);
                worst = std::max(worst, std::abs(k - unit_phase(static_cast<double>(n) * y)));
            }
            ws.push_back({"y=" + fmt(y) + " |n|<=" + std::to_string(radius), worst});
        }
        return make_report("kernel-equality", id, Role::Conclusion, tol("kernel-equality"), std::move(ws),
                           "max_n |T(1_n)(y) - e^{-2 pi i n y}|");
    });
    return run_tasks(tasks);
}

// --------------------------------------------------------- finite abelian LCA

lca::GroupKernelTransform lca_target(const Descriptor& d, const lca::FiniteAbelianGroup& g) {
    if (!d.builtin)
        throw ParseError("the lca domain accepts builtin targets only", 0);
    if (d.name == "fourier") {
        no_params(d);
        return lca::fourier_transform_lca(g);
    }
    if (d.name == "zero") {
        no_params(d);
        return lca::modulated_fourier_lca(g, [](const lca::Character&) { return Complex(0.0); });
    }
    if (d.name == "relabeled") {
        no_params(d);
        return lca::relabeled_fourier_lca(g);
    }
    if (d.name == "scaled") {
        const double c = numeric_param(d, 2.0);
        return lca::modulated_fourier_lca(g, [c](const lca::Character&) { return Complex(c); });
    }
    unknown_builtin(d, Domain::Lca);
}

std::string character_label(const lca::Character& chi) {
    std::string s = "chi(";
    for (std::size_t k = 0; k < chi.frequencies.size(); ++k)
        s += (k ? "," : "") + std::to_string(chi.frequencies[k]);
    return s + ")";
}

std::vector<PropertyReport> run_lca(const Descriptor& d, const SuiteConfig& cfg) {
    const std::string id = d.text;
    auto tol = [&](const char* k) { return cfg.tolerance(Domain::Lca, k); };
    std::vector<Witness> shift, dirac, fact, equal;
    for (const auto& spec : cfg.probes.lca_groups) {
        const auto g = lca::FiniteAbelianGroup::parse(spec);
        const auto t = lca_target(d, g);
        const auto dual = lca::dual_group(g);
        const std::string tag = "Z" + g.name() + ": ";
        std::vector<std::pair<std::string, lca::GroupFunction>> span;
        for (std::size_t x = 0; x < g.size(); ++x)
            span.emplace_back("1_" + std::to_string(x), lca::GroupFunction::indicator(g, x));
        std::mt19937_64 rng(cfg.seed ^ 0x1caULL ^ g.size());
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int k = 0; k < 2; ++k) {
            std::vector<Complex> v(g.size());
            for (auto& z : v) {
                const double re = u(rng), im = u(rng);
                z = Complex(re, im);
            }
            span.emplace_back("random#" + std::to_string(k), lca::GroupFunction(g, std::move(v)));
        }
        auto over_chars = [&](auto&& fn) {
            double worst = 0.0;
            for (const auto& chi : dual) worst = std::max(worst, fn(chi));
            return worst;
        };
        for (const auto& [label, f] : span)
            for (std::size_t x0 = 0; x0 < g.size(); ++x0)
                shift.push_back({tag + label + " x0=" + std::to_string(x0), over_chars([&](const lca::Character& chi) {
                                     return lca::shift_property_residual_lca(t, f, x0, chi);
                                 })});
        for (const auto& chi : dual)
            dirac.push_back({tag + character_label(chi), std::abs(lca::dirac_family_check(t, chi) - 1.0)});
        for (const auto& [label, f] : span) {
            fact.push_back({tag + label, over_chars([&](const lca::Character& chi) {
                                return lca::shift_factorization_residual(t, f, chi);
                            })});
            equal.push_back({tag + label, over_chars([&](const lca::Character& chi) {
                                 return std::abs(t(f, chi) - lca::fourier_lca(f, chi));
                             })});
        }
    }
    std::vector<PropertyReport> out;
    out.push_back(make_report("shift", id, Role::Axiom, tol("shift"), std::move(shift),
                              "max_chi |T(L_x0 f)(chi) - conj(chi(x0)) T(f)(chi)|"));
    out.push_back(make_report("dirac", id, Role::Axiom, tol("dirac"), std::move(dirac), "|T(delta_e)(chi) - 1|"));
    out.push_back(make_report("factorization", id, Role::Diagnostic, tol("factorization"), std::move(fact),
                              "max_chi |T(delta_e * f)(chi) - T(delta_e)(chi) F(f)(chi)|"));
    out.push_back(make_report("fourier-equality", id, Role::Conclusion, tol("fourier-equality"), std::move(equal),
                              "max_chi |T(f)(chi) - F(f)(chi)| on the spanning set"));
    return out;
}

// -------------------------------------------------------------------- compact

bool looks_like_group(const std::string& s) {
    return s == "S3" || s == "D4" || s == "Q8" || s.rfind("Z/", 0) == 0;
}

struct CompactTarget {
    std::string name;
    double param = 0.0;
    bool has_param = false;
    std::vector<std::string> groups;
};

CompactTarget compact_target(const Descriptor& d, const SuiteConfig& cfg) {
    if (!d.builtin) throw ParseError("the compact domain accepts builtin targets only", 0);
    const auto& names = builtin_names(Domain::Compact);
    if (std::find(names.begin(), names.end(), d.name) == names.end()) unknown_builtin(d, Domain::Compact);
    CompactTarget t{d.name, 0.0, false, {}};
    for (const auto& tok : d.params) {
        if (looks_like_group(tok.first)) {
            t.groups.push_back(tok.first);
        } else if (is_number(tok.first) && !t.has_param && (d.name == "scaled" || d.name == "annihilated")) {
            t.param = parse_number(tok);
            t.has_param = true;
        } else {
            throw ParseError("unexpected parameter '" + tok.first + "' for builtin '" + d.name + "'", tok.second);
        }
    }
    if (t.groups.empty()) t.groups = cfg.probes.compact_groups;
    return t;
}

compact::BlockTransform compact_transform(const CompactTarget& t, const compact::FiniteGroup& g) {
    if (t.name == "fourier") return compact::fourier_block_transform(g);
    if (t.name == "dual-permuted") return compact::dual_permuted_fourier(g);
    if (t.name == "scaled") return compact::scaled_fourier(g, t.has_param ? t.param : 2.0);
    if (t.name == "zero") return compact::zero_block_transform(g);
    const auto reps = compact::irreps(g);
    if (t.name == "annihilated") {
        const double which = t.has_param ? t.param : static_cast<double>(reps.size() - 1);
        if (which < 0 || which >= static_cast<double>(reps.size()) || which != std::floor(which))
            throw DomainError("annihilated: block index out of range for " + g.name);
        return compact::annihilated_fourier(g, static_cast<std::size_t>(which));
    }
    // conjugated: a fixed non-scalar unitary on every block of dimension 2.
    std::vector<compact::Matrix> us;
    for (const auto& pi : reps) {
        compact::Matrix u = compact::Matrix::Identity(pi.dim, pi.dim);
        if (pi.dim == 2) {
            const double a = 0.7;
            u << std::cos(a), -std::sin(a) * std::exp(Complex(0, 0.3)), std::sin(a),
                std::cos(a) * std::exp(Complex(0, 0.3));
        }
        us.push_back(u);
    }
    return compact::conjugated_fourier(g, std::move(us));
}

std::vector<PropertyReport> run_compact(const Descriptor& d, const SuiteConfig& cfg) {
    const auto target = compact_target(d, cfg);
    const std::string id = d.text;
    std::vector<std::future<std::vector<PropertyReport>>> parts;
    for (const auto& name : target.groups) {
        const auto g = compact::make_group(name);
        const auto t = compact_transform(target, g);
        const compact::CharacterizationConfig cc{cfg.probes.random_draws, cfg.seed,
                                                 cfg.tolerance(Domain::Compact, "shift"),
                                                 cfg.tolerance(Domain::Compact, "fourier-equality")};
        parts.push_back(std::async(std::launch::async,
                                   [g, t, id, cc] { return compact::characterization_checks(g, t, id, cc); }));
    }
    std::map<std::string, std::vector<Witness>> merged;
    std::map<std::string, std::pair<Role, std::string>> meta;
    for (auto& fut : parts)
        for (auto& r : fut.get()) {
            auto& ws = merged[r.property_id];
            ws.insert(ws.end(), r.witnesses.begin(), r.witnesses.end());
            meta[r.property_id] = {r.role, r.notes};
        }
    std::vector<PropertyReport> out;
    for (const auto& pid : property_ids(Domain::Compact)) {
        auto it = merged.find(pid);
        if (it == merged.end()) continue;
        out.push_back(make_report(pid, id, meta[pid].first, cfg.tolerance(Domain::Compact, pid),
                                  std::move(it->second), meta[pid].second));
    }
    return out;
}

// --------------------------------------------------------------------- hankel

namespace hk = fcheck::hankel;

const std::vector<BumpSpec>& hankel_bumps() {
    static const std::vector<BumpSpec> b{{3.0, 1.0, 1.0}, {2.0, 0.5, 1.0}, {4.0, 1.5, -0.5}};
    return b;
}

TestFunction normalization_witness() { return funcspace::make_bump(3.0, 1.0, 1.0); }

hk::HankelKernelTransform hankel_target(const Descriptor& d, double alpha, double y_star) {
    if (!d.builtin) {
        const auto e = parse_kernel_expression(d, {"r"});
        hk::HankelKernelTransform t;
        t.kernel = [e](double r) { return e({r}).real(); };
        return t;
    }
    const auto h = hk::hankel_kernel(alpha);
    if (d.name == "hankel") {
        no_params(d);
        return h;
    }
    if (d.name == "zero") {
        no_params(d);
        return hk::zero_hankel_kernel();
    }
    if (d.name == "scaled") return hk::combine(numeric_param(d, 3.0), h, 0.0, hk::zero_hankel_kernel());
    const TestFunction fs = normalization_witness();
    const double href = hk::apply_hankel(h, fs, y_star).real();
    if (d.name == "admixture") {
        // (1 - b s) J + b Y2 with s = T_Y2(f*)(y*) / H(f*)(y*): bounded part
        // rescaled so that the normalization witness is still matched.
        const double b = numeric_param(d, 0.05);
        const auto y2 = hk::second_solution_kernel(hk::BesselSecondSolution(alpha));
        const double s = hk::apply_hankel(y2, fs, y_star).real() / href;
        return hk::combine(1.0 - b * s, h, b, y2);
    }
    if (d.name == "exponential") {
        // c e^{-r}, with c chosen to match the normalization witness.
        no_params(d);
        hk::HankelKernelTransform e;
        e.kernel = [](double r) { return std::exp(-r); };
        const double c = href / hk::apply_hankel(e, fs, y_star).real();
        e.kernel = [c](double r) { return c * std::exp(-r); };
        e.kernel_d1 = [c](double r) { return -c * std::exp(-r); };
        e.kernel_d2 = [c](double r) { return c * std::exp(-r); };
        return e;
    }
    unknown_builtin(d, Domain::Hankel);
}

std::vector<PropertyReport> run_hankel(const Descriptor& d, const SuiteConfig& cfg) {
    const std::string id = d.text;
    const Probes& p = cfg.probes;
    auto tol = [&](const char* k) { return cfg.tolerance(Domain::Hankel, k); };
    std::vector<double> alphas;
    std::string excluded;
    for (const double a : p.hankel_alpha) {
        if (a > 0.0) alphas.push_back(a);
        else excluded += (excluded.empty() ? "" : ",") + fmt(a);
    }
    // Validate the descriptor even when every order is excluded.
    hankel_target(d, alphas.empty() ? 1.0 : alphas.front(), p.hankel_y_star);
    const std::string excl_note =
        excluded.empty() ? "" : "; alpha=" + excluded + " excluded (the characterization needs alpha > 0)";
    if (alphas.empty()) {
        std::vector<PropertyReport> out;
        for (const auto& pid : property_ids(Domain::Hankel)) {
            const Role role = pid == "hankel-equality"                            ? Role::Conclusion
                              : (pid == "kernel-ode" || pid == "parts-identities") ? Role::Diagnostic
                                                                                   : Role::Axiom;
            out.push_back(not_applicable(pid, id, role, tol(pid.c_str()),
                                         "no order alpha > 0 in the probe set" + excl_note));
        }
        return out;
    }

    std::vector<hk::HankelKernelTransform> kernels;
    for (const double a : alphas) kernels.push_back(hankel_target(d, a, p.hankel_y_star));
    auto tag = [&](std::size_t k) { return "alpha=" + fmt(alphas[k]) + ": "; };

    std::vector<Task> tasks;
    tasks.push_back([&] {
        std::vector<Witness> ws;
        for (std::size_t k = 0; k < alphas.size(); ++k)
            for (const auto& b : hankel_bumps()) {
                const TestFunction f = b.make();
                for (const double y : p.hankel_y)
                    ws.push_back({tag(k) + b.label() + " y=" + fmt(y),
                                  hk::bessel_property_residual(kernels[k], alphas[k], f, y)});
            }
        return make_report("bessel-property", id, Role::Axiom, tol("bessel-property"), std::move(ws),
                           "|T(f'' + f'/x - alpha^2 f/x^2)(y) + y^2 T(f)(y)|" + excl_note);
    });
    tasks.push_back([&] {
        std::vector<Witness> ws;
        std::ostringstream notes;
        notes << "|K(r)| / B with B = 10 max_[1,10] |K|";
        for (std::size_t k = 0; k < alphas.size(); ++k) {
            const auto disc = hk::discriminate_kernel(kernels[k], alphas[k]);
            for (const auto& [r, v] : disc.probes) {
                double ratio;
                if (!std::isfinite(v)) ratio = kInf;
                else if (disc.bound > 0.0) ratio = std::abs(v) / disc.bound;
                else ratio = std::abs(v) > 0.0 ? kInf : 0.0;
                ws.push_back({tag(k) + "r=" + fmt(r), ratio});
            }
            notes << "; " << tag(k) << "C1=" << fmt(disc.c1) << " fit=" << fmt(disc.fit_residual)
                  << " B=" << fmt(disc.bound) << (disc.bounded_at_origin ? " bounded" : " unbounded");
        }
        return make_report("kernel-bounded", id, Role::Axiom, tol("kernel-bounded"), std::move(ws), notes.str());
    });
    tasks.push_back([&] {
        std::vector<Witness> ws;
        std::string notes = "|T(f*)(y*) - H(f*)(y*)|, f* = " + hankel_bumps().front().label() +
                            ", y* = " + fmt(p.hankel_y_star);
        for (std::size_t k = 0; k < alphas.size(); ++k) {
            try {
                const auto n = hk::normalization_check(kernels[k], alphas[k], normalization_witness(), p.hankel_y_star);
                ws.push_back({tag(k) + "f*,y*", n.residual});
                notes += "; " + tag(k) + "|H(f*)(y*)|=" + fmt(n.reference);
            } catch (const WitnessRejected& e) {
                ws.push_back({tag(k) + "f*,y*", kInf});
                notes += std::string("; ") + e.what();
            }
        }
        return make_report("normalization", id, Role::Axiom, tol("normalization"), std::move(ws), notes);
    });
    tasks.push_back([&] {
        std::vector<double> grid;
        for (int j = 0; j <= 38; ++j) grid.push_back(0.5 + 0.25 * j);
        std::vector<Witness> ws;
        for (std::size_t k = 0; k < alphas.size(); ++k) {
            const auto prof = hk::kernel_ode_residual_profile(kernels[k], alphas[k], grid);
            for (std::size_t j = 0; j < grid.size(); ++j)
                ws.push_back({tag(k) + "r=" + fmt(grid[j]), std::abs(prof[j])});
        }
        return make_report("kernel-ode", id, Role::Diagnostic, tol("kernel-ode"), std::move(ws),
                           "|r^2 K'' + r K' + (r^2 - alpha^2) K|; central differences where no closed form");
    });
    tasks.push_back([&] {
        std::vector<Witness> ws;
        for (std::size_t k = 0; k < alphas.size(); ++k) {
            if (!kernels[k].kernel_d1) continue;
            for (const auto& b : hankel_bumps()) {
                const TestFunction f = b.make();
                for (const double y : p.hankel_y) {
                    const auto r = hk::parts_identities_check(kernels[k], f, y);
                    ws.push_back({tag(k) + b.label() + " y=" + fmt(y), std::max(r.first, r.second.value_or(0.0))});
                }
            }
        }
        if (ws.empty())
            return not_applicable("parts-identities", id, Role::Diagnostic, tol("parts-identities"),
                                  "kernel has no closed-form derivative");
        return make_report("parts-identities", id, Role::Diagnostic, tol("parts-identities"), std::move(ws),
                           "integration-by-parts identities for x K f'' and y x K' f'");
    });
    tasks.push_back([&] {
        std::mt19937_64 rng(cfg.seed ^ 0x4a4eULL);
        const auto bumps = random_bumps(rng, 3, 2.0, 5.0, 0.3, 1.0);
        const auto ys = random_points(rng, 3, 0.3, 3.0);
        std::vector<Witness> ws;
        for (std::size_t k = 0; k < alphas.size(); ++k)
            for (const auto& b : bumps) {
                const TestFunction f = b.make();
                for (const double y : ys)
                    ws.push_back({tag(k) + b.label() + " y=" + fmt(y),
                                  std::abs(hk::apply_hankel(kernels[k], f, y) -
                                           hk::hankel_transform(alphas[k], f, y))});
            }
        return make_report("hankel-equality", id, Role::Conclusion, tol("hankel-equality"), std::move(ws),
                           "|T(f)(y) - H(f)(y)| on a fresh random grid");
    });
    return run_tasks(tasks);
}

// ------------------------------------------------------------------ config io

template <class T>
T get_as(const json& j, const std::string& key) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ParseError("config: wrong type for '" + key + "'", 0);
    }
}

void check_positive(const std::vector<double>& v, const std::string& key) {
    for (const double x : v)
        if (!(x > 0.0)) throw ParseError("config: '" + key + "' entries must be positive", 0);
}

} // namespace

std::string to_string(Domain d) {
    switch (d) {
    case Domain::Real: return "real";
    case Domain::Discrete: return "discrete";
    case Domain::Lca: return "lca";
    case Domain::Compact: return "compact";
    case Domain::Hankel: return "hankel";
    }
    return "?";
}

const std::vector<Domain>& all_domains() {
    static const std::vector<Domain> d{Domain::Real, Domain::Discrete, Domain::Lca, Domain::Compact, Domain::Hankel};
    return d;
}

Domain domain_from_string(const std::string& s) {
    for (const Domain d : all_domains())
        if (to_string(d) == s) return d;
    throw ParseError("unknown domain '" + s + "' (expected real, discrete, lca, compact or hankel)", 0);
}

const std::vector<std::string>& property_ids(Domain d) {
    static const auto table = [] {
        std::map<Domain, std::vector<std::string>> m;
        for (const auto& [dom, entries] : default_tolerances())
            for (const auto& e : entries) m[dom].push_back(e.first);
        return m;
    }();
    return table.at(d);
}

const std::vector<std::string>& builtin_names(Domain d) {
    static const std::map<Domain, std::vector<std::string>> names{
        {Domain::Real, {"fourier", "zero", "modulated", "x-weighted"}},
        {Domain::Discrete, {"dtft", "zero", "scaled", "conjugate"}},
        {Domain::Lca, {"fourier", "zero", "relabeled", "scaled"}},
        {Domain::Compact, {"fourier", "dual-permuted", "annihilated", "scaled", "conjugated", "zero"}},
        {Domain::Hankel, {"hankel", "zero", "scaled", "admixture", "exponential"}},
    };
    return names.at(d);
}

SuiteConfig SuiteConfig::defaults() {
    SuiteConfig c;
    for (const auto& [dom, entries] : default_tolerances())
        for (const auto& [id, v] : entries) c.tolerances[to_string(dom)][id] = v;
    return c;
}

double SuiteConfig::tolerance(Domain d, const std::string& property_id) const {
    const auto dit = tolerances.find(to_string(d));
    if (dit != tolerances.end()) {
        const auto it = dit->second.find(property_id);
        if (it != dit->second.end()) return it->second;
    }
    for (const auto& [id, v] : default_tolerances().at(d))
        if (id == property_id) return v;
    throw DomainError("no tolerance for " + to_string(d) + "/" + property_id);
}

SuiteConfig SuiteConfig::from_json(const json& j) {
    SuiteConfig c = defaults();
    if (!j.is_object()) throw ParseError("config: top level must be an object", 0);
    for (const auto& [key, val] : j.items()) {
        if (key == "seed") {
            if (!val.is_number_integer() || val.get<long long>() < 0)
                throw ParseError("config: 'seed' must be a nonnegative integer", 0);
            c.seed = val.get<std::uint64_t>();
        } else if (key == "tolerances") {
            if (!val.is_object()) throw ParseError("config: 'tolerances' must be an object", 0);
            for (const auto& [dname, entries] : val.items()) {
                const Domain dom = domain_from_string(dname);
                if (!entries.is_object()) throw ParseError("config: tolerances." + dname + " must be an object", 0);
                const auto& ids = property_ids(dom);
                for (const auto& [pid, tv] : entries.items()) {
                    if (std::find(ids.begin(), ids.end(), pid) == ids.end())
                        throw ParseError("config: unknown property '" + pid + "' for domain " + dname, 0);
                    const double t = get_as<double>(tv, pid);
                    if (!(t > 0.0)) throw ParseError("config: tolerance for '" + pid + "' must be positive", 0);
                    c.tolerances[dname][pid] = t;
                }
            }
        } else if (key == "probes") {
            if (!val.is_object()) throw ParseError("config: 'probes' must be an object", 0);
            Probes& p = c.probes;
            for (const auto& [pk, pv] : val.items()) {
                if (pk == "real_y") p.real_y = get_as<std::vector<double>>(pv, pk);
                else if (pk == "dirac_y") p.dirac_y = get_as<std::vector<double>>(pv, pk);
                else if (pk == "dirac_max_power") p.dirac_max_power = get_as<int>(pv, pk);
                else if (pk == "discrete_y") p.discrete_y = get_as<std::vector<double>>(pv, pk);
                else if (pk == "discrete_radius") p.discrete_radius = get_as<int>(pv, pk);
                else if (pk == "lca_groups") p.lca_groups = get_as<std::vector<std::string>>(pv, pk);
                else if (pk == "compact_groups") p.compact_groups = get_as<std::vector<std::string>>(pv, pk);
                else if (pk == "random_draws") p.random_draws = get_as<int>(pv, pk);
                else if (pk == "hankel_alpha") p.hankel_alpha = get_as<std::vector<double>>(pv, pk);
                else if (pk == "hankel_y") p.hankel_y = get_as<std::vector<double>>(pv, pk);
                else if (pk == "hankel_y_star") p.hankel_y_star = get_as<double>(pv, pk);
                else throw ParseError("config: unknown probe '" + pk + "'", 0);
            }
            if (p.dirac_max_power < 3 || p.dirac_max_power > 16)
                throw ParseError("config: 'dirac_max_power' must lie in [3, 16]", 0);
            if (p.discrete_radius < 1 || p.discrete_radius > 128)
                throw ParseError("config: 'discrete_radius' must lie in [1, 128]", 0);
            if (p.random_draws < 2) throw ParseError("config: 'random_draws' must be at least 2", 0);
            for (const double a : p.hankel_alpha)
                if (!(a >= 0.0)) throw ParseError("config: 'hankel_alpha' entries must be nonnegative", 0);
            check_positive(p.hankel_y, "hankel_y");
            check_positive({p.hankel_y_star}, "hankel_y_star");
        } else {
            throw ParseError("config: unknown key '" + key + "'", 0);
        }
    }
    return c;
}

SuiteConfig SuiteConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what(), e.byte);
    }
    return from_json(j);
}

json SuiteConfig::to_json() const {
    json t = json::object();
    for (const Domain d : all_domains()) {
        json entries = json::object();
        for (const auto& pid : property_ids(d)) entries[pid] = tolerance(d, pid);
        t[to_string(d)] = entries;
    }
    json p = json::object();
    p["real_y"] = probes.real_y;
    p["dirac_y"] = probes.dirac_y;
    p["dirac_max_power"] = probes.dirac_max_power;
    p["discrete_y"] = probes.discrete_y;
    p["discrete_radius"] = probes.discrete_radius;
    p["lca_groups"] = probes.lca_groups;
    p["compact_groups"] = probes.compact_groups;
    p["random_draws"] = probes.random_draws;
    p["hankel_alpha"] = probes.hankel_alpha;
    p["hankel_y"] = probes.hankel_y;
    p["hankel_y_star"] = probes.hankel_y_star;
    json j = json::object();
    j["tolerances"] = t;
    j["probes"] = p;
    j["seed"] = seed;
    return j;
}

std::vector<PropertyReport> run_suite(Domain d, const std::string& target, const SuiteConfig& cfg) {
    const Descriptor desc = parse_descriptor(target);
    switch (d) {
    case Domain::Real: return run_real(desc, cfg);
    case Domain::Discrete: return run_discrete(desc, cfg);
    case Domain::Lca: return run_lca(desc, cfg);
    case Domain::Compact: return run_compact(desc, cfg);
    case Domain::Hankel: return run_hankel(desc, cfg);
    }
    return {};
}

std::vector<std::string> failing_axioms(const std::vector<PropertyReport>& reports) {
    std::vector<std::string> out;
    for (const auto& r : reports)
        if (r.role == Role::Axiom && !r.passed()) out.push_back(r.property_id);
    return out;
}

bool all_passed(const std::vector<PropertyReport>& reports) {
    return std::none_of(reports.begin(), reports.end(), [](const PropertyReport& r) { return r.failed(); });
}

std::string characterize_narrative(Domain d, const std::string& target, const SuiteConfig& cfg) {
    const Descriptor desc = parse_descriptor(target);
    std::ostringstream os;
    os.precision(12);
    switch (d) {
    case Domain::Real: {
        const auto t = real_target(desc);
        std::vector<int> idx;
        for (int k = 1; k <= cfg.probes.dirac_max_power; ++k) idx.push_back(1 << k);
        os << "Target " << target << " on the real line.\n"
           << "If T has the differentiation property, K(x, y) = g(y) e^{-2 pi i x y} and\n"
           << "g(y) = lim_n T(delta_n)(y). Recovered modulation:\n";
        std::vector<double> ys = cfg.probes.dirac_y;
        ys.insert(ys.end(), cfg.probes.real_y.begin(), cfg.probes.real_y.end());
        for (const double y : ys) {
            const auto lim = realline::dirac_limit(t, y, {idx, 1e-4});
            os << "  g(" << y << ") = " << fmt(lim.value) << (lim.converged ? "" : "  (not settled)") << "\n";
        }
        os << "g = 1 at every probe is the Dirac condition; then T is the Fourier transform.\n";
        break;
    }
    case Domain::Discrete: {
        const long radius = 4;
        const auto t = discrete_target(desc, 16);
        os << "Target " << target << " on the integers.\n"
           << "The difference property forces e^{2 pi i y} K(n, y) = K(n-1, y); iterating from\n"
           << "K(0, y) = T(1_0)(y) reconstructs the kernel. Compare T(1_n)(y) with the iterate:\n";
        for (const double y : cfg.probes.discrete_y) {
            const auto rec = discrete::reconstruct_kernel(y, radius);
            os << "  y = " << y << ": T(1_0)(y) = " << fmt(discrete::apply_discrete(t, FiniteSequence::indicator(0), y))
               << "\n";
            double worst = 0.0;
            for (long n = -radius; n <= radius; ++n)
                worst = std::max(worst, std::abs(discrete::apply_discrete(t, FiniteSequence::indicator(n), y) - rec.at(n)));
            os << "          max_|n|<=" << radius << " |T(1_n)(y) - e^{-2 pi i n y}| = " << worst << "\n";
        }
        break;
    }
    case Domain::Lca: {
        os << "Target " << target << " on finite abelian groups.\n"
           << "With the shift property, T(f)(chi) = T(delta_e)(chi) F(f)(chi); the Dirac\n"
           << "condition asks T(delta_e)(chi) = 1.\n";
        for (const auto& spec : cfg.probes.lca_groups) {
            const auto g = lca::FiniteAbelianGroup::parse(spec);
            const auto t = lca_target(desc, g);
            os << "  Z" << g.name() << ":";
            for (const auto& chi : lca::dual_group(g))
                os << " " << character_label(chi) << "=" << fmt(lca::dirac_family_check(t, chi));
            os << "\n";
        }
        break;
    }
    case Domain::Compact: {
        const auto target_spec = compact_target(desc, cfg);
        os << "Target " << target << " on finite groups.\n"
           << "T(|G| 1_e)(pi) should be the identity on every block, and the shift property\n"
           << "ties block pi to the representation pi itself.\n";
        for (const auto& name : target_spec.groups) {
            const auto g = compact::make_group(name);
            const auto t = compact_transform(target_spec, g);
            const auto reps = compact::irreps(g);
            const auto unit = t(compact::GroupFunction::indicator(g, g.identity, static_cast<double>(g.order)));
            const auto f = compact::GroupFunction::random(g, cfg.seed);
            const auto tf = t(f);
            const auto ff = compact::group_fourier(g, f);
            os << "  " << g.name << ":\n";
            for (std::size_t k = 0; k < reps.size(); ++k) {
                const auto& blk = unit.blocks[k];
                const double id_dev =
                    (blk.rows() == reps[k].dim && blk.cols() == reps[k].dim)
                        ? compact::operator_norm(blk - compact::Matrix::Identity(reps[k].dim, reps[k].dim))
                        : kInf;
                os << "    pi=" << reps[k].label << " (dim " << reps[k].dim << "): ||T(|G| 1_e) - I|| = " << id_dev
                   << ", ||T(f) - F(f)|| = " << compact::operator_norm(tf.blocks[k] - ff.blocks[k]) << "\n";
            }
        }
        break;
    }
    case Domain::Hankel: {
        os << "Target " << target << " for the Hankel transform.\n"
           << "The Bessel property makes K a solution of the order-alpha Bessel equation,\n"
           << "K = C1 J_alpha + C2 Y_alpha; boundedness at 0 removes Y_alpha, and the\n"
           << "normalization witness fixes C1 = 1.\n";
        for (const double a : cfg.probes.hankel_alpha) {
            if (!(a > 0.0)) {
                os << "  alpha = " << a << ": outside the characterization (alpha must be positive)\n";
                continue;
            }
            const auto t = hankel_target(desc, a, cfg.probes.hankel_y_star);
            const auto disc = hk::discriminate_kernel(t, a);
            os << "  alpha = " << a << ": C1 = " << disc.c1 << ", max |K - C1 J| on [1,10] = " << disc.fit_residual
               << ", " << (disc.bounded_at_origin ? "bounded" : "unbounded") << " near 0 (max probe "
               << disc.probe_max << " vs B = " << disc.bound << ")\n";
        }
        break;
    }
    }
    return os.str();
}

} // namespace fcheck::verify
