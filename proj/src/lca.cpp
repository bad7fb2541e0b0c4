#include "fcheck/lca.hpp"

#include <charconv>
#include <sstream>

namespace fcheck::lca {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> orders, double measure)
    : orders_(std::move(orders)), measure_(measure), size_(1) {
    if (orders_.empty()) throw DomainError("FiniteAbelianGroup: needs at least one factor");
    for (const int n : orders_) {
        if (n < 1) throw DomainError("FiniteAbelianGroup: cyclic orders must be >= 1");
        size_ *= static_cast<std::size_t>(n);
    }
    if (!(measure_ > 0.0)) throw DomainError("FiniteAbelianGroup: measure must be positive");
}

FiniteAbelianGroup FiniteAbelianGroup::parse(const std::string& spec) {
    std::vector<int> orders;
    std::size_t pos = 0;
    while (true) {
        int n = 0;
        const char* begin = spec.data() + pos;
        const char* end = spec.data() + spec.size();
        const auto [ptr, ec] = std::from_chars(begin, end, n);
        if (ec != std::errc{} || n < 1)
            throw ParseError("expected a positive cyclic order in group '" + spec + "'", pos);
        orders.push_back(n);
        pos = static_cast<std::size_t>(ptr - spec.data());
        if (pos == spec.size()) break;
        if (spec[pos] != 'x') throw ParseError("expected 'x' in group '" + spec + "'", pos);
        ++pos;
    }
    return FiniteAbelianGroup(std::move(orders));
}

std::string FiniteAbelianGroup::name() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < orders_.size(); ++k) os << (k ? "x" : "") << orders_[k];
    return os.str();
}

Element FiniteAbelianGroup::element(std::size_t index) const {
    Element x(orders_.size());
    for (std::size_t k = orders_.size(); k-- > 0;) {
        const auto n = static_cast<std::size_t>(orders_[k]);
        x[k] = static_cast<int>(index % n);
        index /= n;
    }
    return x;
}

std::size_t FiniteAbelianGroup::index(const Element& x) const {
    if (x.size() != orders_.size()) throw DomainError("element arity does not match group");
    std::size_t idx = 0;
    for (std::size_t k = 0; k < orders_.size(); ++k) {
        const int n = orders_[k];
        idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(((x[k] % n) + n) % n);
    }
    return idx;
}

std::size_t FiniteAbelianGroup::add(std::size_t a, std::size_t b) const {
    Element x = element(a);
    const Element y = element(b);
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += y[k];
    return index(x);
}

std::size_t FiniteAbelianGroup::neg(std::size_t a) const {
    Element x = element(a);
    for (auto& v : x) v = -v;
    return index(x);
}

Complex Character::operator()(const FiniteAbelianGroup& g, std::size_t x) const {
    const Element e = g.element(x);
    double turns = 0.0;
    for (std::size_t k = 0; k < e.size(); ++k) {
        const long n = g.orders()[k];
        turns += static_cast<double>((static_cast<long>(frequencies[k]) * e[k]) % n) /
                 static_cast<double>(n);
    }
    // unit_phase gives e^{-2 pi i t}.
    return unit_phase(-turns);
}

GroupFunction::GroupFunction(FiniteAbelianGroup g)
    : group(std::move(g)), values(group.size()) {}

GroupFunction::GroupFunction(FiniteAbelianGroup g, std::vector<Complex> v)
    : group(std::move(g)), values(std::move(v)) {
    if (values.size() != group.size())
        throw DomainError("GroupFunction: value count does not match group order");
}

GroupFunction GroupFunction::indicator(const FiniteAbelianGroup& g, std::size_t x, Complex c) {
    GroupFunction f(g);
    f.values.at(x) = c;
    return f;
}

GroupFunction GroupFunction::point_mass(const FiniteAbelianGroup& g) {
    return indicator(g, FiniteAbelianGroup::identity(), 1.0 / g.measure());
}

GroupFunction GroupFunction::shifted(std::size_t x0) const {
    GroupFunction h(group);
    for (std::size_t t = 0; t < values.size(); ++t) h.values[t] = values[group.sub(t, x0)];
    return h;
}

GroupFunction& GroupFunction::operator+=(const GroupFunction& other) {
    if (!(group == other.group)) throw DomainError("GroupFunction: group mismatch");
    for (std::size_t k = 0; k < values.size(); ++k) values[k] += other.values[k];
    return *this;
}

GroupFunction operator*(Complex c, GroupFunction f) {
    for (auto& v : f.values) v *= c;
    return f;
}

std::vector<Character> dual_group(const FiniteAbelianGroup& g) {
    if (g.size() > kMaxDualSize) {
        std::ostringstream os;
        os << "dual_group: |G| = " << g.size() << " exceeds " << kMaxDualSize;
        throw RangeError(os.str());
    }
    std::vector<Character> chars;
    chars.reserve(g.size());
    for (std::size_t m = 0; m < g.size(); ++m) chars.push_back(Character{g.element(m)});
    return chars;
}

Complex fourier_lca(const GroupFunction& f, const Character& chi) {
    Complex s{};
    for (std::size_t x = 0; x < f.values.size(); ++x)
        s += f.values[x] * std::conj(chi(f.group, x));
    return s * f.group.measure();
}

GroupFunction convolve(const GroupFunction& f, const GroupFunction& g) {
    if (!(f.group == g.group)) throw DomainError("convolve: group mismatch");
    const auto& grp = f.group;
    GroupFunction h(grp);
    for (std::size_t z = 0; z < grp.size(); ++z) {
        Complex s{};
        for (std::size_t x = 0; x < grp.size(); ++x) s += f.values[x] * g.values[grp.sub(z, x)];
        h.values[z] = s * grp.measure();
    }
    return h;
}

GroupFunction inverse_fourier_lca(const FiniteAbelianGroup& g,
                                  const std::vector<Complex>& spectrum) {
    const auto chars = dual_group(g);
    if (spectrum.size() != chars.size())
        throw DomainError("inverse_fourier_lca: spectrum size does not match dual group");
    GroupFunction f(g);
    const double norm = 1.0 / (static_cast<double>(g.size()) * g.measure());
    for (std::size_t x = 0; x < g.size(); ++x) {
        Complex s{};
        for (std::size_t m = 0; m < chars.size(); ++m) s += spectrum[m] * chars[m](g, x);
        f.values[x] = s * norm;
    }
    return f;
}

Complex GroupKernelTransform::operator()(const GroupFunction& f, const Character& chi) const {
    if (!(f.group == group)) throw DomainError("GroupKernelTransform: group mismatch");
    Complex s{};
    for (std::size_t x = 0; x < f.values.size(); ++x) s += kernel(x, chi) * f.values[x];
    return s * group.measure();
}

GroupKernelTransform fourier_transform_lca(const FiniteAbelianGroup& g) {
    return {[g](std::size_t x, const Character& chi) { return std::conj(chi(g, x)); }, g};
}

GroupKernelTransform relabeled_fourier_lca(const FiniteAbelianGroup& g) {
    return {[g](std::size_t x, const Character& chi) {
                const std::size_t next = (g.index(chi.frequencies) + 1) % g.size();
                return std::conj(Character{g.element(next)}(g, x));
            },
            g};
}

GroupKernelTransform modulated_fourier_lca(const FiniteAbelianGroup& g,
                                           std::function<Complex(const Character&)> c) {
    return {[g, c](std::size_t x, const Character& chi) { return c(chi) * std::conj(chi(g, x)); },
            g};
}

double shift_property_residual_lca(const GroupKernelTransform& t, const GroupFunction& f,
                                   std::size_t x0, const Character& chi) {
    const Complex lhs = t(f.shifted(x0), chi);
    const Complex rhs = std::conj(chi(f.group, x0)) * t(f, chi);
    return std::abs(lhs - rhs);
}

Complex dirac_family_check(const GroupKernelTransform& t, const Character& chi) {
    return t(GroupFunction::point_mass(t.group), chi);
}

double shift_factorization_residual(const GroupKernelTransform& t, const GroupFunction& f,
                                    const Character& chi) {
    const GroupFunction delta = GroupFunction::point_mass(f.group);
    const Complex lhs = t(convolve(delta, f), chi);
    const Complex rhs = t(delta, chi) * fourier_lca(f, chi);
    return std::abs(lhs - rhs);
}

} // namespace fcheck::lca
