// Acceptance suite: one PASS/FAIL line per criterion, with the tolerances
// and runtime budgets pinned here. Exit status is nonzero if any criterion
// fails.
//
// Usage: fcheck_acceptance <path to the fcheck CLI>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <stdexcept>
#include <vector>

#include <sys/wait.h>

#include "fcheck/compact.hpp"
#include "fcheck/discrete.hpp"
#include "fcheck/hankel.hpp"
#include "fcheck/lca.hpp"
#include "fcheck/realline.hpp"
#include "fcheck/suite.hpp"

using namespace fcheck;
using verify::Domain;
using verify::PropertyReport;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

const PropertyReport& find(const std::vector<PropertyReport>& rs, const std::string& id) {
    for (const auto& r : rs)
        if (r.property_id == id) return r;
    throw std::runtime_error("missing report " + id);
}

bool only_fails(const std::vector<PropertyReport>& rs, const std::string& axiom) {
    const auto f = verify::failing_axioms(rs);
    return f.size() == 1 && f.front() == axiom;
}

std::string joined(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
    return s.empty() ? "(none)" : s;
}

// 1. F(delta_n)(y) real to 1e-9 and inside [cos(2 pi y/n) - 1e-6, 1] for
// y in {0, 1, 5}, n = 8..256, and within 1e-3 of 1 at n = 256.
Outcome sandwich_bound() {
    Outcome o;
    constexpr double kRealTol = 1e-9, kLowerSlack = 1e-6, kFinalTol = 1e-3;
    // Upper end: 1 plus a rounding allowance of a few ulps, far below every
    // stated tolerance.
    constexpr double kRounding = 1e-12;
    for (const double y : {0.0, 1.0, 5.0}) {
        Complex last;
        for (int n = 8; n <= 256; n *= 2) {
            const Complex v = realline::fourier_r(funcspace::dirac_delta(n), y);
            const double lo = std::cos(2 * kPi * y / n) - kLowerSlack;
            o.require(std::abs(v.imag()) <= kRealTol, "imag at y=" + verify::fmt(y) + " n=" + std::to_string(n));
            o.require(v.real() >= lo && v.real() <= 1.0 + kRounding,
                      "outside sandwich at y=" + verify::fmt(y) + " n=" + std::to_string(n));
            last = v;
        }
        const double gap = std::abs(last - 1.0);
        o.detail += std::string(o.detail.empty() ? "" : "; ") + "|F(delta_256)(" + verify::fmt(y) + ") - 1| = " + sci(gap);
        o.require(gap <= kFinalTol, "y=" + verify::fmt(y) + " not within 1e-3 of 1 at n=256");
    }
    return o;
}

// 2. Fourier passes; zero and modulated fail exactly the Dirac check; fresh
// grid equality to 1e-5.
Outcome real_line_verdict() {
    Outcome o;
    const auto cfg = verify::SuiteConfig::defaults();
    const auto f = verify::run_suite(Domain::Real, "builtin:fourier", cfg);
    const auto& diff = find(f, "diff-property");
    const auto& dirac = find(f, "dirac-limit");
    const auto& eq = find(f, "fourier-equality");
    o.require(diff.witnesses.size() == 25 && diff.residual_max <= 1e-6, "fourier diff residual " + sci(diff.residual_max));
    o.require(dirac.passed() && dirac.residual_max <= 1e-4, "fourier dirac residual " + sci(dirac.residual_max));
    o.require(verify::failing_axioms(f).empty(), "fourier failing " + joined(verify::failing_axioms(f)));
    o.require(eq.residual_max <= 1e-5, "fourier equality " + sci(eq.residual_max));
    for (const char* t : {"builtin:zero", "builtin:modulated"}) {
        const auto r = verify::run_suite(Domain::Real, t, cfg);
        o.require(only_fails(r, "dirac-limit"), std::string(t) + " failing " + joined(verify::failing_axioms(r)));
    }
    o.detail += std::string(o.detail.empty() ? "" : "; ") + "diff " + sci(diff.residual_max) + ", dirac " +
                sci(dirac.residual_max) + ", equality " + sci(eq.residual_max);
    return o;
}

// 3. DTFT residuals <= 1e-12; reconstruction to 1e-12 on |n| <= 64.
Outcome integers_verdict() {
    Outcome o;
    const auto r = verify::run_suite(Domain::Discrete, "builtin:dtft", verify::SuiteConfig::defaults());
    double worst = 0.0;
    for (const auto& rep : r)
        if (rep.role != verify::Role::Conclusion) worst = std::max(worst, rep.residual_max);
    o.require(verify::failing_axioms(r).empty(), "dtft failing " + joined(verify::failing_axioms(r)));
    o.require(worst <= 1e-12, "dtft residual " + sci(worst));
    double rec = 0.0;
    for (int k = 1; k <= 9; ++k) {
        const double y = 0.1 * k;
        for (const auto& [n, v] : discrete::reconstruct_kernel(y, 64))
            rec = std::max(rec, std::abs(v - unit_phase(static_cast<double>(n) * y)));
    }
    o.require(rec <= 1e-12, "reconstruction " + sci(rec));
    o.detail += std::string(o.detail.empty() ? "" : "; ") + "max residual " + sci(worst) + ", reconstruction " + sci(rec);
    return o;
}

// 4. Z/6 and Z/3 x Z/5: shift and Dirac to 1e-11, factorization to 1e-12,
// relabeled kernel fails shift.
Outcome finite_abelian_verdict() {
    Outcome o;
    auto cfg = verify::SuiteConfig::defaults();
    cfg.probes.lca_groups = {"6", "3x5"};
    const auto r = verify::run_suite(Domain::Lca, "builtin:fourier", cfg);
    const double shift = find(r, "shift").residual_max, dirac = find(r, "dirac").residual_max,
                 fact = find(r, "factorization").residual_max;
    o.require(shift <= 1e-11, "shift " + sci(shift));
    o.require(dirac <= 1e-11, "dirac " + sci(dirac));
    o.require(fact <= 1e-12, "factorization " + sci(fact));
    const auto rel = verify::run_suite(Domain::Lca, "builtin:relabeled", cfg);
    o.require(find(rel, "shift").failed(), "relabeled kernel passes shift");
    o.detail += std::string(o.detail.empty() ? "" : "; ") + "shift " + sci(shift) + ", dirac " + sci(dirac) +
                ", factorization " + sci(fact);
    return o;
}

// 5. S3, D4, Q8, Z/4 with 50 seeded draws.
Outcome compact_verdict() {
    Outcome o;
    auto cfg = verify::SuiteConfig::defaults();
    cfg.probes.compact_groups = {"S3", "D4", "Q8", "Z/4"};
    cfg.probes.random_draws = 50;
    const auto r = verify::run_suite(Domain::Compact, "builtin:fourier", cfg);
    double worst = 0.0;
    for (const char* id : {"convolution", "shift", "star"}) worst = std::max(worst, find(r, id).residual_max);
    o.require(worst <= 1e-12, "axiom residual " + sci(worst));
    o.require(verify::failing_axioms(r).empty(), "fourier failing " + joined(verify::failing_axioms(r)));
    double planch = 0.0;
    for (const auto& name : cfg.probes.compact_groups) {
        const auto g = compact::make_group(name);
        const auto reps = compact::irreps(g);
        int dims = 0;
        for (const auto& pi : reps) dims += pi.dim * pi.dim;
        o.require(dims == g.order, name + ": sum d^2 = " + std::to_string(dims));
        for (std::uint64_t s = 0; s < 50; ++s) {
            const auto f = compact::GroupFunction::random(g, cfg.seed + s);
            double lhs = 0.0;
            for (const auto& v : f.values) lhs += std::norm(v);
            lhs /= g.order;
            const auto b = compact::group_fourier(g, f);
            double rhs = 0.0;
            for (std::size_t k = 0; k < reps.size(); ++k)
                rhs += reps[k].dim * (b.blocks[k] * b.blocks[k].adjoint()).trace().real();
            planch = std::max(planch, std::abs(lhs - rhs));
        }
        const auto left = compact::left_regular(g), right = compact::right_regular(g);
        const compact::Matrix q = compact::inversion_permutation(g);
        double qdev = 0.0;
        for (int x = 0; x < g.order; ++x)
            qdev = std::max(qdev, compact::operator_norm(q * left(x) * q.inverse() - right(x)));
        o.require(qdev <= 1e-12 && compact::unitary_equivalence(left, right).has_value(),
                  name + ": regular representations not certified equivalent");
    }
    o.require(planch <= 1e-11, "plancherel " + sci(planch));
    const auto dp = verify::run_suite(Domain::Compact, "builtin:dual-permuted", cfg);
    o.require(only_fails(dp, "shift"), "dual-permuted failing " + joined(verify::failing_axioms(dp)));
    o.detail += std::string(o.detail.empty() ? "" : "; ") + "axioms " + sci(worst) + ", plancherel " + sci(planch);
    return o;
}

// 6. Hankel, alpha = 1.
Outcome hankel_verdict() {
    Outcome o;
    auto cfg = verify::SuiteConfig::defaults();
    cfg.probes.hankel_alpha = {1.0};
    cfg.probes.hankel_y = {0.5, 1.0, 2.0};
    const auto r = verify::run_suite(Domain::Hankel, "builtin:hankel", cfg);
    const auto& bp = find(r, "bessel-property");
    o.require(bp.witnesses.size() == 9 && bp.residual_max <= 1e-4, "bessel property " + sci(bp.residual_max));

    const auto j1 = hankel::hankel_kernel(1.0);
    std::vector<double> grid;
    for (int k = 0; k <= 95; ++k) grid.push_back(0.5 + 0.1 * k);
    double ode = 0.0;
    for (const double v : hankel::kernel_ode_residual_profile(j1, 1.0, grid)) ode = std::max(ode, std::abs(v));
    o.require(ode <= 1e-5, "kernel ODE " + sci(ode));

    const auto disc = hankel::discriminate_kernel(j1, 1.0);
    o.require(disc.bounded_at_origin && std::abs(disc.c1 - 1.0) <= 1e-6, "J1 discrimination C1 = " + verify::fmt(disc.c1));
    const auto second = hankel::discriminate_kernel(
        hankel::second_solution_kernel(hankel::BesselSecondSolution(1.0)), 1.0);
    o.require(!second.bounded_at_origin, "second solution not flagged unbounded");

    const auto s3 = verify::run_suite(Domain::Hankel, "builtin:scaled:3", cfg);
    o.require(only_fails(s3, "normalization"), "3 Hankel failing " + joined(verify::failing_axioms(s3)));
    o.detail += std::string(o.detail.empty() ? "" : "; ") + "bessel " + sci(bp.residual_max) + ", ode " + sci(ode) +
                ", |C1-1| " + sci(std::abs(disc.c1 - 1.0)) + ", second-solution probe " + sci(second.probe_max);
    return o;
}

// 7. Integral representation vs series (1e-7) and vs J_{1/2} closed form (1e-8).
Outcome special_functions() {
    Outcome o;
    double series = 0.0, closed = 0.0;
    for (const double a : {0.0, 0.5, 1.0, 1.5, 2.0})
        for (const double r : {0.1, 1.0, 5.0, 10.0})
            series = std::max(series, std::abs(numerics::bessel_j(a, r) - numerics::bessel_j_series(a, r)));
    for (int k = 1; k <= 10; ++k) {
        const double r = 0.9 * k;
        closed = std::max(closed, std::abs(numerics::bessel_j(0.5, r) - std::sqrt(2.0 / (kPi * r)) * std::sin(r)));
    }
    o.require(series <= 1e-7, "series " + sci(series));
    o.require(closed <= 1e-8, "closed form " + sci(closed));
    o.detail += std::string(o.detail.empty() ? "" : "; ") + "series " + sci(series) + ", closed form " + sci(closed);
    return o;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// 8. Two CLI runs with identical config and seed give identical JSON.
Outcome determinism(const std::string& cli) {
    Outcome o;
    if (cli.empty()) {
        o.require(false, "no CLI path given");
        return o;
    }
    const std::string cfg_path = "acceptance_config.json";
    std::ofstream(cfg_path) << "{\"seed\": 77, \"probes\": {\"random_draws\": 20}}\n";
    for (const char* domain : {"compact", "real"}) {
        std::string out[2];
        for (int k = 0; k < 2; ++k) {
            const std::string path = std::string("acceptance_") + domain + std::to_string(k) + ".json";
            const std::string cmd = "\"" + cli + "\" verify " + domain + " --target builtin:" +
                                    (std::string(domain) == "compact" ? "fourier" : "modulated") + " --config " +
                                    cfg_path + " --json " + path + " > /dev/null";
            const int rc = std::system(cmd.c_str());
            o.require(rc != -1 && WIFEXITED(rc) && WEXITSTATUS(rc) <= 1, std::string("cli run failed for ") + domain);
            out[k] = slurp(path);
        }
        o.require(!out[0].empty() && out[0] == out[1], std::string(domain) + " reports differ");
        o.detail += std::string(o.detail.empty() ? "" : "; ") + domain + " " + std::to_string(out[0].size()) + " bytes";
    }
    return o;
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    struct Criterion {
        int id;
        const char* name;
        double budget_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "sandwich bound for F(delta_n)", 5.0, sandwich_bound},
        {2, "real-line characterization", 30.0, real_line_verdict},
        {3, "integer characterization", 1.0, integers_verdict},
        {4, "finite abelian characterization", 2.0, finite_abelian_verdict},
        {5, "finite group characterization", 10.0, compact_verdict},
        {6, "Hankel characterization, alpha = 1", 60.0, hankel_verdict},
        {7, "special-function cross-validation", 5.0, special_functions},
        {8, "byte-identical reports", 60.0, [&] { return determinism(cli); }},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.budget_s) {
            o.ok = false;
            o.detail += "; over budget";
        }
        if (!o.ok) ++failures;
        std::printf("[%s] criterion %d: %s (%.2fs, budget %.0fs): %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                    c.budget_s, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
