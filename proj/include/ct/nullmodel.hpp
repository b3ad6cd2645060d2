#pragma once

#include <cstdint>

#include "ct/signal.hpp"

namespace ct {

struct NullConfig {
    int n_obs = 192;
    int n_vars = 32;
    double activity_rate = 0.2;
    std::uint64_t seed = 0;
};

// Independence null: each column independently gets exactly
// round(activity_rate * n_obs) ones at uniformly random positions.
// Byte-identical output for a fixed seed on every platform.
BinaryMatrix generate_independent(const NullConfig& cfg);

enum class ToyFixture { I, II, III, IV, V };

// The toy datasets; V is IV minus its first row.
BinaryMatrix toy_fixture(ToyFixture name);

// d+2 observations forming the facets of a (d+1)-simplex on the first d+2
// variables (one d-dimensional class at level 1), plus noise rows restricted
// to the remaining variables so the shell can never be filled.
BinaryMatrix planted_hole(int d, int n_vars, int noise_obs, std::uint64_t seed);

// Seeded continuous series for pipeline-scale tests.
SeriesMatrix generate_series(int n_time, int n_vars, std::uint64_t seed);

}  // namespace ct
