#pragma once

#include <vector>

#include "fcheck/report.hpp"

namespace fcheck::verify {

/// The internal invariants of every module (quadrature convergence, special
/// function cross-checks, representation certificates, Plancherel, ...), one
/// report each. target_id names the module.
std::vector<PropertyReport> run_selftest();

} // namespace fcheck::verify
