#pragma once

// Counterexample gallery: transforms that violate exactly one axiom of a
// characterization while satisfying the others, showing that each axiom is
// needed.

#include <string>
#include <vector>

#include "fcheck/suite.hpp"

namespace fcheck::verify {

struct GalleryEntry {
    std::string name;
    Domain domain;
    std::string target;
    std::string expected_failure;  ///< the single axiom this entry violates
    std::string description;
};

const std::vector<GalleryEntry>& gallery();

/// Axioms no gallery entry isolates, with the reason.
struct GalleryGap {
    Domain domain;
    std::string axiom;
    std::string reason;
};
const std::vector<GalleryGap>& gallery_gaps();

struct GalleryOutcome {
    GalleryEntry entry;
    std::vector<PropertyReport> reports;
    std::vector<std::string> failing;  ///< failing axioms
    /// failing == {expected_failure}: every other axiom passes.
    bool isolated() const { return failing.size() == 1 && failing.front() == entry.expected_failure; }
};

std::vector<GalleryOutcome> run_gallery(const SuiteConfig& cfg);

} // namespace fcheck::verify
