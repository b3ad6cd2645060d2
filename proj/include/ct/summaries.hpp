#pragma once

#include <cstdint>
#include <optional>

#include "ct/complex.hpp"
#include "ct/persistence.hpp"

namespace ct {

// Count plus the eight (mean birth^i * lifespan^j)^(1/(i+j)) summaries.
struct MomentVector {
    int dimension = 0;
    std::int64_t count = 0;
    std::optional<double> m[3][3];  // [i][j], (0,0) unused

    std::optional<double> mean_birth() const { return m[1][0]; }
    std::optional<double> mean_lifespan() const { return m[0][1]; }
};

MomentVector moments(const PersistenceDiagram& diagram, int d);

// Exact Euler characteristic of the uncapped frame(f), by inclusion-exclusion
// over maximal faces with memoized recursion. Falls back to direct face
// enumeration when the budget runs out and V' <= 25.
std::int64_t euler_characteristic(const FilteredComplex& fc, std::int64_t f,
                                  std::int64_t budget = -1);

// The two routes individually, exposed so their agreement can be tested.
std::int64_t euler_inclusion_exclusion(const FilteredComplex& fc, std::int64_t f,
                                       std::int64_t budget = -1);
std::int64_t euler_direct(const FilteredComplex& fc, std::int64_t f);

// Maximal faces of the uncapped frame(f), recovered from the stored
// observation rows through their intersection closure.
std::vector<Simplex> maximal_faces(const FilteredComplex& fc, std::int64_t f);

}  // namespace ct
