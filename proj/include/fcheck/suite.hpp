#pragma once

// Property-suite orchestration: target descriptors, suite configuration and
// the per-domain characterization runs.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "fcheck/report.hpp"

namespace fcheck::verify {

enum class Domain { Real, Discrete, Lca, Compact, Hankel };

std::string to_string(Domain d);
/// ParseError for anything but real, discrete, lca, compact, hankel.
Domain domain_from_string(const std::string& s);
const std::vector<Domain>& all_domains();

/// Probe grids. Each domain reads only its own fields.
struct Probes {
    std::vector<double> real_y{-2.0, -0.5, 0.5, 1.0, 2.5};
    std::vector<double> dirac_y{0.0, 1.0, 5.0};
    int dirac_max_power = 12;  ///< schedule 2, 4, ..., 2^k
    std::vector<double> discrete_y{0.0, 0.1, 0.25, 0.3, 0.5, 0.75, 0.9};
    int discrete_radius = 64;
    std::vector<std::string> lca_groups{"6", "3x5"};
    std::vector<std::string> compact_groups{"S3", "D4", "Q8", "Z/4"};
    int random_draws = 50;
    std::vector<double> hankel_alpha{1.0};
    std::vector<double> hankel_y{0.5, 1.0, 2.0};
    double hankel_y_star = 0.5;

    friend bool operator==(const Probes&, const Probes&) = default;
};

struct SuiteConfig {
    /// tolerances[domain][property_id]; defaults() fills every entry.
    std::map<std::string, std::map<std::string, double>> tolerances;
    Probes probes;
    std::uint64_t seed = 2024;

    static SuiteConfig defaults();
    /// Overlays a JSON document {tolerances, probes, seed} on the defaults.
    /// Unknown keys, unknown property ids and nonpositive tolerances are
    /// ParseErrors.
    static SuiteConfig from_json(const nlohmann::ordered_json& j);
    static SuiteConfig from_file(const std::string& path);
    nlohmann::ordered_json to_json() const;

    double tolerance(Domain d, const std::string& property_id) const;

    friend bool operator==(const SuiteConfig&, const SuiteConfig&) = default;
};

/// Property ids checked for a domain, in report order.
const std::vector<std::string>& property_ids(Domain d);

/// Builtin target names for a domain.
const std::vector<std::string>& builtin_names(Domain d);

/// Runs every check for `target` and returns the reports in property_ids(d)
/// order. Targets are "builtin:<name>[:<param>]" or, for real, discrete and
/// hankel, a kernel expression in (x, y), (n, y) or r. ParseError names the
/// offending position.
std::vector<PropertyReport> run_suite(Domain d, const std::string& target, const SuiteConfig& cfg);

/// Reports with role Axiom that did not pass.
std::vector<std::string> failing_axioms(const std::vector<PropertyReport>& reports);
bool all_passed(const std::vector<PropertyReport>& reports);

/// Human-readable account of what the axioms recover from `target`: g(y) on
/// the line, K(n, y) on the integers, T(delta_e)(chi) on finite abelian
/// groups, the block labelling on compact groups, C1 for Hankel kernels.
std::string characterize_narrative(Domain d, const std::string& target, const SuiteConfig& cfg);

} // namespace fcheck::verify
