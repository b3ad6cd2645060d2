#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ct/complex.hpp"
#include "ct/types.hpp"

namespace ct {

struct PersistencePair {
    int dim = 0;
    std::int64_t birth = 0;  // frequency level where the class appears
    std::int64_t death = 0;  // level where it becomes a boundary; 0 = never
    std::int64_t lifespan() const { return birth - death; }
    auto operator<=>(const PersistencePair&) const = default;
};

struct PersistenceDiagram {
    std::vector<PersistencePair> pairs;  // sorted: dim, birth desc, death desc
    int max_dim = 0;
    std::string provenance;

    std::vector<PersistencePair> dim_pairs(int d) const;
    // Classes alive in frame(f): birth >= f > death.
    std::int64_t alive(std::int64_t f, int d) const;
};

// Standard Z/2 column reduction over the descending-count filtration order
// (count desc, dimension asc, lexicographic asc). Zero-lifespan pairs are
// dropped; dimension 0 is unreduced.
PersistenceDiagram compute_persistence(const FilteredComplex& fc, int max_dim);

// rank H_d(frame(f)) by boundary-matrix ranks; the independent cross-check
// of the diagram.
std::int64_t betti(const FilteredComplex& fc, std::int64_t f, int d);

// CSV rows (birth, death, multiplicity), birth then death descending.
std::string plot_csv(const PersistenceDiagram& diagram, int d);
// Static death-vs-birth scatter; coincident points get enlarged glyphs.
std::string plot_svg(const PersistenceDiagram& diagram, int d);

}  // namespace ct
