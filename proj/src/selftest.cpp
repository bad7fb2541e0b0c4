#include "fcheck/selftest.hpp"

#include <cmath>
#include <functional>
#include <future>
#include <random>

#include "fcheck/compact.hpp"
#include "fcheck/discrete.hpp"
#include "fcheck/hankel.hpp"
#include "fcheck/lca.hpp"
#include "fcheck/realline.hpp"

namespace fcheck::verify {

namespace {

using funcspace::TestFunction;
using numerics::QuadConfig;

PropertyReport quadrature_convergence() {
    std::vector<Witness> ws;
    const QuadConfig base{};
    const std::vector<TestFunction> fs{funcspace::make_bump(0, 1, 1), funcspace::make_bump(3, 1, 1),
                                       funcspace::dirac_delta(16), funcspace::make_bump(-1, 0.25, Complex(0, 2))};
    const char* names[] = {"bump(0,1,1)", "bump(3,1,1)", "delta_16", "bump(-1,0.25,2i)"};
    for (std::size_t k = 0; k < fs.size(); ++k) {
        const Complex a = numerics::integrate(fs[k].value, fs[k].support, base);
        const Complex b = numerics::integrate(fs[k].value, fs[k].support, base.with_panels(2 * base.panels));
        ws.push_back({names[k], std::abs(a - b)});
    }
    return make_report("quadrature-convergence", "numerics", Role::Axiom, 4 * base.tol_abs, std::move(ws),
                       "|I(2 panels) - I(panels)|");
}

PropertyReport bessel_series_agreement() {
    std::vector<Witness> ws;
    for (const double a : {0.0, 0.5, 1.0, 1.5, 2.0})
        for (const double r : {0.1, 1.0, 5.0, 10.0})
            ws.push_back({"alpha=" + fmt(a) + " r=" + fmt(r),
                          std::abs(numerics::bessel_j(a, r) - numerics::bessel_j_series(a, r))});
    return make_report("bessel-series", "numerics", Role::Axiom, 1e-7, std::move(ws),
                       "integral representation vs ascending series");
}

PropertyReport bessel_closed_form() {
    std::vector<Witness> ws;
    for (int k = 1; k <= 10; ++k) {
        const double r = 0.7 * k;
        const double exact = std::sqrt(2.0 / (kPi * r)) * std::sin(r);
        ws.push_back({"r=" + fmt(r), std::abs(numerics::bessel_j(0.5, r) - exact)});
    }
    return make_report("bessel-half-order", "numerics", Role::Axiom, 1e-8, std::move(ws),
                       "J_{1/2}(r) vs sqrt(2/(pi r)) sin r");
}

PropertyReport bessel_ode_finite_difference() {
    std::vector<Witness> ws;
    const double h = 5e-4;
    for (const double a : {0.0, 0.5, 1.0, 2.0})
        for (double r = 0.5; r <= 10.0 + 1e-12; r += 0.5) {
            auto j = [a](double x) { return numerics::bessel_j(a, x); };
            const numerics::SmoothFunction k{j, [&](double x) { return (j(x + h) - j(x - h)) / (2 * h); },
                                             [&](double x) { return (j(x + h) - 2 * j(x) + j(x - h)) / (h * h); }};
            ws.push_back({"alpha=" + fmt(a) + " r=" + fmt(r), std::abs(numerics::bessel_ode_residual(k, a, r))});
        }
    return make_report("bessel-ode", "numerics", Role::Axiom, 1e-5, std::move(ws),
                       "r^2 J'' + r J' + (r^2 - alpha^2) J with central differences");
}

PropertyReport dirac_sequence() {
    std::vector<Witness> ws;
    for (int n = 1; n <= 256; n *= 2) {
        const TestFunction d = funcspace::dirac_delta(n);
        double r = std::abs(numerics::integrate(d.value, d.support) - 1.0);
        r = std::max(r, std::abs(d.support.lo + 1.0 / n) + std::abs(d.support.hi - 1.0 / n));
        for (int j = -20; j <= 20; ++j) {
            const double x = j / (20.0 * n);
            const Complex v = d(x);
            r = std::max(r, std::abs(v - d(-x)));
            r = std::max(r, std::max(0.0, -v.real()) + std::abs(v.imag()));
        }
        for (const double x : {1.0 / n, 1.5 / n, -1.0 / n, -3.0 / n}) r = std::max(r, std::abs(d(x)));
        ws.push_back({"n=" + std::to_string(n), r});
    }
    return make_report("dirac-sequence", "funcspace", Role::Axiom, 1e-10, std::move(ws),
                       "unit mass, support [-1/n, 1/n], nonnegative, symmetric");
}

PropertyReport bump_derivatives() {
    std::vector<Witness> ws;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> c(-3.0, 3.0), hw(0.5, 2.0), u(-0.9, 0.9);
    for (int k = 0; k < 100; ++k) {
        const double ck = c(rng), hk = hw(rng);
        const TestFunction f = funcspace::make_bump(ck, hk, 1.0);
        const double h = 1e-5 * hk;
        double worst = 0.0;
        for (int j = 0; j < 32; ++j) {
            const double x = ck + hk * u(rng);
            const Complex fd1 = (f(x + h) - f(x - h)) / (2 * h);
            const Complex fd2 = (f.deriv1(x + h) - f.deriv1(x - h)) / (2 * h);
            worst = std::max(worst, std::abs(fd1 - f.deriv1(x)) / (1.0 + std::abs(f.deriv1(x))));
            worst = std::max(worst, std::abs(fd2 - f.deriv2(x)) / (1.0 + std::abs(f.deriv2(x))));
        }
        ws.push_back({"bump(" + fmt(ck) + "," + fmt(hk) + ",1)", worst});
    }
    return make_report("bump-derivatives", "funcspace", Role::Axiom, 1e-5, std::move(ws),
                       "relative deviation of closed-form derivatives from central differences");
}

PropertyReport sandwich() {
    std::vector<Witness> ws;
    const auto t = realline::fourier_kernel();
    for (const double y : {0.0, 1.0, 2.0, 5.0})
        for (int n = 2; n <= 256; n *= 2) {
            if (!(n > 4 * std::abs(y))) continue;
            const Complex v = realline::fourier_r(funcspace::dirac_delta(n), y);
            const double lo = std::cos(2 * kPi * y / n) - 1e-6;
            const double excess = std::max({0.0, lo - v.real(), v.real() - (1.0 + 1e-6)});
            ws.push_back({"y=" + fmt(y) + " n=" + std::to_string(n), std::max(std::abs(v.imag()), excess)});
        }
    return make_report("sandwich", "realline", Role::Axiom, 1e-9, std::move(ws),
                       "F(delta_n)(y) real and in [cos(2 pi y/n), 1]");
}

PropertyReport kernel_reconstruction() {
    std::vector<Witness> ws;
    for (int k = 1; k <= 9; ++k) {
        const double y = 0.1 * k;
        const auto rec = discrete::reconstruct_kernel(y, 64);
        double worst = 0.0;
        for (const auto& [n, v] : rec) worst = std::max(worst, std::abs(v - unit_phase(static_cast<double>(n) * y)));
        ws.push_back({"y=" + fmt(y), worst});
    }
    return make_report("kernel-reconstruction", "discrete", Role::Axiom, 1e-12, std::move(ws),
                       "iterated recurrence vs e^{-2 pi i n y}, |n| <= 64");
}

PropertyReport characters_and_inversion() {
    std::vector<Witness> ws;
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (const char* spec : {"2", "4", "6", "8", "3x5", "2x2x4"}) {
        const auto g = lca::FiniteAbelianGroup::parse(spec);
        const auto dual = lca::dual_group(g);
        double worst = 0.0;
        for (const auto& chi : dual)
            for (std::size_t x = 0; x < g.size(); ++x) {
                worst = std::max(worst, std::abs(std::abs(chi(g, x)) - 1.0));
                for (std::size_t y = 0; y < g.size(); ++y)
                    worst = std::max(worst, std::abs(chi(g, g.add(x, y)) - chi(g, x) * chi(g, y)));
            }
        std::vector<Complex> v(g.size());
        for (auto& z : v) {
            const double re = u(rng), im = u(rng);
            z = Complex(re, im);
        }
        const lca::GroupFunction f(g, v);
        std::vector<Complex> spectrum;
        for (const auto& chi : dual) spectrum.push_back(lca::fourier_lca(f, chi));
        const auto back = lca::inverse_fourier_lca(g, spectrum);
        for (std::size_t x = 0; x < g.size(); ++x) worst = std::max(worst, std::abs(back.values[x] - v[x]));
        ws.push_back({std::string("Z") + spec, worst});
    }
    return make_report("characters-inversion", "lcafinite", Role::Axiom, 1e-12, std::move(ws),
                       "character homomorphism, |chi| = 1 and Fourier inversion");
}

PropertyReport representation_certificates() {
    std::vector<Witness> ws;
    for (const char* name : {"Z/4", "Z/7", "S3", "D4", "Q8"}) {
        const auto g = compact::make_group(name);
        const auto reps = compact::irreps(g);
        double defect = 0.0;
        int dims = 0;
        bool irreducible = true;
        for (const auto& pi : reps) {
            defect = std::max(defect, compact::rep_defect(g, pi));
            dims += pi.dim * pi.dim;
            irreducible = irreducible && compact::schur_irreducible(pi);
        }
        double r = defect + std::abs(dims - g.order) + (irreducible ? 0.0 : 1.0);
        const auto q = compact::unitary_equivalence(compact::left_regular(g), compact::right_regular(g));
        const compact::Matrix p = compact::inversion_permutation(g);
        const auto pl = compact::left_regular(g), pr = compact::right_regular(g);
        double qdev = 0.0;
        for (int x = 0; x < g.order; ++x)
            qdev = std::max(qdev, compact::operator_norm(p * pl(x) * p.adjoint() - pr(x)));
        r += qdev + (q ? 0.0 : 1.0);
        ws.push_back({name, r});
    }
    return make_report("representations", "compactgrp", Role::Axiom, 1e-12, std::move(ws),
                       "unitary homomorphisms, sum d^2 = |G|, Schur, Q pi_L Q^-1 = pi_R");
}

PropertyReport plancherel() {
    std::vector<Witness> ws;
    for (const char* name : {"Z/4", "S3", "D4", "Q8"}) {
        const auto g = compact::make_group(name);
        const auto reps = compact::irreps(g);
        double worst = 0.0;
        for (std::uint64_t s = 0; s < 10; ++s) {
            const auto f = compact::GroupFunction::random(g, 100 + s);
            double lhs = 0.0;
            for (const auto& v : f.values) lhs += std::norm(v);
            lhs /= g.order;
            const auto blocks = compact::group_fourier(g, f);
            const auto star = compact::group_fourier(g, compact::involution(g, f));
            double rhs = 0.0;
            for (std::size_t k = 0; k < reps.size(); ++k) {
                rhs += reps[k].dim * (blocks.blocks[k] * blocks.blocks[k].adjoint()).trace().real();
                worst = std::max(worst, compact::operator_norm(star.blocks[k] - blocks.blocks[k].adjoint()));
            }
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        ws.push_back({name, worst});
    }
    return make_report("plancherel", "compactgrp", Role::Axiom, 1e-11, std::move(ws),
                       "(1/|G|) sum |f|^2 = sum d tr(F F^*), and F(f^*) = F(f)^*");
}

PropertyReport hankel_decay() {
    std::vector<Witness> ws;
    const TestFunction f = funcspace::make_bump(3, 1, 1);
    for (const double y : {50.0, 75.0, 100.0})
        ws.push_back({"y=" + fmt(y), std::abs(hankel::hankel_transform(1.0, f, y))});
    return make_report("hankel-decay", "hankel", Role::Axiom, 1e-3, std::move(ws), "|H_1(f)(y)| for large y");
}

PropertyReport hankel_self_reciprocity() {
    const QuadConfig coarse = QuadConfig{}.with_panels(32);
    auto gauss = [](double x) { return Complex(std::exp(-x * x / 2)); };
    const TestFunction f{gauss, {}, {}, numerics::Interval(0.0, 8.0)};
    const auto rule = numerics::gauss_legendre(coarse.nodes_per_panel);
    // Tabulate H_0(f) on the quadrature nodes of [0, 8] once.
    std::vector<double> nodes, weights;
    std::vector<Complex> g;
    const double width = 8.0 / coarse.panels;
    for (int p = 0; p < coarse.panels; ++p)
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            const double x = width * (p + 0.5 * (rule.nodes[k] + 1.0));
            nodes.push_back(x);
            weights.push_back(0.5 * width * rule.weights[k]);
            g.push_back(hankel::hankel_transform(0.0, f, x, coarse));
        }
    std::vector<Witness> ws;
    for (const double x : {0.3, 0.8, 1.5, 2.2, 3.0}) {
        Complex back = 0.0;
        for (std::size_t k = 0; k < nodes.size(); ++k)
            back += weights[k] * numerics::bessel_j(0.0, x * nodes[k]) * g[k] * nodes[k];
        ws.push_back({"x=" + fmt(x), std::abs(back - gauss(x))});
    }
    return make_report("hankel-self-reciprocity", "hankel", Role::Axiom, 1e-3, std::move(ws),
                       "H_0(H_0 f) = f for the truncated Gaussian");
}

} // namespace

std::vector<PropertyReport> run_selftest() {
    const std::vector<std::function<PropertyReport()>> checks{
        quadrature_convergence, bessel_series_agreement, bessel_closed_form, bessel_ode_finite_difference,
        dirac_sequence, bump_derivatives, sandwich, kernel_reconstruction, characters_and_inversion,
        representation_certificates, plancherel, hankel_decay, hankel_self_reciprocity};
    std::vector<std::future<PropertyReport>> fs;
    for (const auto& c : checks) fs.push_back(std::async(std::launch::async, c));
    std::vector<PropertyReport> out;
    for (auto& f : fs) out.push_back(f.get());
    return out;
}

} // namespace fcheck::verify
