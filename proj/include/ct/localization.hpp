#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ct/complex.hpp"
#include "ct/gf2.hpp"
#include "ct/types.hpp"

namespace ct {

// The boundary of the (d+1)-simplex on these vertices: all d+2 facets, the
// smallest chain that can form a d-cycle.
ChainGF2 short_cycle_chain(const Simplex& vertices);

// A nonzero homology class of frame(f) that owns at least one short
// representative cycle. `key` is the canonical coset representative over the
// level's d-simplex indexing and identifies the class within its level.
struct NarrowClass {
    std::int64_t level = 0;
    Gf2Vec key;
    ChainGF2 representative;            // first short cycle of the class
    std::vector<Simplex> short_cycles;  // (d+2)-vertex subsets, sorted
};

struct ShortCycleRecord {
    Simplex vertices;
    int dimension = 0;
    std::vector<std::int64_t> levels_nonbounding;  // ascending
    std::int64_t cycle_lifespan() const {
        return static_cast<std::int64_t>(levels_nonbounding.size());
    }
    bool contiguous() const;
};

// Per-(level, dimension) boundary bases are built once and cached.
class Localizer {
public:
    explicit Localizer(const FilteredComplex& fc) : fc_(fc) {}

    // All (d+2)-subsets whose d+2 facets all lie in frame(f), found by
    // extending d-simplices of the frame rather than scanning C(V', d+2).
    std::vector<Simplex> enumerate_short_cycles(std::int64_t f, int d) const;

    // Whether z bounds in frame(f); throws when z is not supported there.
    bool is_boundary(std::int64_t f, const ChainGF2& z) const;

    // All short cycles of frame(f) homologous to z.
    std::vector<Simplex> localize(std::int64_t f, const ChainGF2& z) const;

    std::vector<NarrowClass> narrow_classes(std::int64_t f, int d) const;

    // Unordered index pairs into narrow_classes(f, d) whose class sum is
    // also narrow.
    std::vector<std::pair<int, int>> adjacent_pairs(std::int64_t f, int d) const;

    // Every subset that is a short cycle somewhere, with the levels at which
    // it is present and non-bounding.
    std::vector<ShortCycleRecord> cycle_lifespans(int d) const;

    const FilteredComplex& complex() const { return fc_; }

private:
    struct LevelContext {
        std::vector<Simplex> d_simplices;  // lexicographic
        std::unordered_map<Simplex, int, SimplexHash> index;
        Gf2Basis boundaries;  // spanned by boundaries of frame (d+1)-simplices
    };
    const LevelContext& context(std::int64_t f, int d) const;
    Gf2Vec chain_to_vec(const LevelContext& ctx, std::int64_t f, const ChainGF2& z) const;

    const FilteredComplex& fc_;
    mutable std::map<std::pair<std::int64_t, int>, LevelContext> cache_;
};

}  // namespace ct
