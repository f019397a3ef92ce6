#pragma once

#include <cstdint>

#include "gnbg/problem.hpp"

namespace gnbg {

inline constexpr int kSuiteSize = 24;

// Builds one of the 24 published problem instances at dimension 30 over
// [-100, 100]^30. Construction is deterministic: the generator stream is
// seeded from (id, seed), and per component, in index order, parameters are
// drawn as center, then floor, then h_diag, then theta (row-major above the
// diagonal, gate before angle), then mu, then omega. Fixed parameters consume
// no draws. Rerunning with the same (id, seed) reproduces the instance
// field-for-field; portable interchange goes through instance files, not
// seeds.
Instanced make_instance(int id, std::uint64_t seed);

// The same recipe reduced for landscape plots: dimension 2, every component
// floor forced to 0 and every center to the origin. Published instances are
// strictly d=30; this reduction exists only for visualization.
Instanced make_figure_instance(int id, std::uint64_t seed);

}  // namespace gnbg
