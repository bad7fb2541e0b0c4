#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fcheck/common.hpp"

namespace fcheck::verify {

enum class Verdict { Pass, Fail, NotApplicable };

/// Axioms are the hypotheses of a characterization; the conclusion is the
/// final equality with the reference transform; diagnostics are auxiliary
/// identities reported alongside.
enum class Role { Axiom, Conclusion, Diagnostic };

std::string to_string(Verdict v);
std::string to_string(Role r);
Verdict verdict_from_string(const std::string& s);
Role role_from_string(const std::string& s);

struct Witness {
    std::string input;
    double residual = 0.0;

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// A labelled sequence of (index, value) pairs, e.g. T(delta_n)(y) along n.
struct Series {
    std::string label;
    std::vector<std::pair<int, Complex>> points;

    friend bool operator==(const Series&, const Series&) = default;
};

struct PropertyReport {
    std::string property_id;
    std::string target_id;
    Role role = Role::Axiom;
    double residual_max = 0.0;
    double tolerance = 0.0;
    std::vector<Witness> witnesses;
    Verdict verdict = Verdict::NotApplicable;
    std::string notes;
    std::vector<Series> series;

    bool passed() const { return verdict == Verdict::Pass; }
    bool failed() const { return verdict == Verdict::Fail; }

    friend bool operator==(const PropertyReport&, const PropertyReport&) = default;
};

/// residual_max = max witness residual; pass iff residual_max <= tolerance
/// (a NaN residual fails).
PropertyReport make_report(std::string property_id, std::string target_id, Role role,
                           double tolerance, std::vector<Witness> witnesses,
                           std::string notes = {});

PropertyReport not_applicable(std::string property_id, std::string target_id, Role role,
                              double tolerance, std::string notes);

/// Forces a failing verdict and appends the reason to the notes.
void mark_failed(PropertyReport& r, const std::string& reason);

/// Shortest round-trip decimal form of a double, used in witness labels.
std::string fmt(double v);
std::string fmt(Complex v);

} // namespace fcheck::verify
