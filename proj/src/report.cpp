#include "fcheck/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace fcheck::verify {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not-applicable";
    }
    return "?";
}

std::string to_string(Role r) {
    switch (r) {
    case Role::Axiom: return "axiom";
    case Role::Conclusion: return "conclusion";
    case Role::Diagnostic: return "diagnostic";
    }
    return "?";
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "pass") return Verdict::Pass;
    if (s == "fail") return Verdict::Fail;
    if (s == "not-applicable") return Verdict::NotApplicable;
    throw ParseError("unknown verdict '" + s + "'", 0);
}

Role role_from_string(const std::string& s) {
    if (s == "axiom") return Role::Axiom;
    if (s == "conclusion") return Role::Conclusion;
    if (s == "diagnostic") return Role::Diagnostic;
    throw ParseError("unknown role '" + s + "'", 0);
}

PropertyReport make_report(std::string property_id, std::string target_id, Role role,
                           double tolerance, std::vector<Witness> witnesses, std::string notes) {
    PropertyReport r;
    r.property_id = std::move(property_id);
    r.target_id = std::move(target_id);
    r.role = role;
    r.tolerance = tolerance;
    r.notes = std::move(notes);
    bool nan = false;
    for (const auto& w : witnesses) {
        if (std::isnan(w.residual))
            nan = true;
        else
            r.residual_max = std::max(r.residual_max, w.residual);
    }
    r.witnesses = std::move(witnesses);
    r.verdict = (!nan && r.residual_max <= tolerance) ? Verdict::Pass : Verdict::Fail;
    if (nan) r.residual_max = std::nan("");
    return r;
}

PropertyReport not_applicable(std::string property_id, std::string target_id, Role role,
                              double tolerance, std::string notes) {
    PropertyReport r;
    r.property_id = std::move(property_id);
    r.target_id = std::move(target_id);
    r.role = role;
    r.tolerance = tolerance;
    r.verdict = Verdict::NotApplicable;
    r.notes = std::move(notes);
    return r;
}

void mark_failed(PropertyReport& r, const std::string& reason) {
    r.verdict = Verdict::Fail;
    r.notes += r.notes.empty() ? reason : "; " + reason;
}

std::string fmt(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string fmt(Complex v) {
    if (v.imag() == 0.0) return fmt(v.real());
    return fmt(v.real()) + (std::signbit(v.imag()) ? "-" : "+") + fmt(std::abs(v.imag())) + "i";
}

} // namespace fcheck::verify
