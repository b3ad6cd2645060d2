#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "ct/signal.hpp"
#include "ct/types.hpp"

namespace ct {

// Descending-frequency filtered concurrence complex. Every nonempty subset
// of each observation's active set with |S| <= max_dim_stored + 1 is stored
// together with its concurrence count; the frame at level f is the set of
// stored simplices with count >= f. Distinct observation rows are kept so
// that uncapped frames (Euler characteristic) stay recoverable.
struct FilteredComplex {
    std::unordered_map<Simplex, std::int64_t, SimplexHash> counts;
    std::vector<std::pair<Simplex, std::int64_t>> rows;  // distinct active sets + multiplicity
    std::vector<std::string> var_labels;
    int max_dim_stored = 0;
    std::int64_t n_obs = 0;
    std::int64_t max_level = 0;

    std::int64_t count_of(const Simplex& s) const {
        auto it = counts.find(s);
        return it == counts.end() ? 0 : it->second;
    }
    bool in_frame(const Simplex& s, std::int64_t f) const { return count_of(s) >= f; }

    // Stored simplices with count >= f, ordered by dimension then lexicographic.
    std::vector<Simplex> frame(std::int64_t f) const;
    // Frame members of one dimension, lexicographic.
    std::vector<Simplex> frame_dim(std::int64_t f, int d) const;
};

// Number of observations in which every variable of `subset` is active.
std::int64_t concurrence_count(const BinaryMatrix& bm, const Simplex& subset);

// Builds the complex storing subsets up to size max_dim + 2. Throws
// BudgetError when the projected subset enumeration exceeds the budget
// (default 1e9 visits, overridable through CT_WORK_BUDGET).
FilteredComplex build_filtered_complex(const BinaryMatrix& bm, int max_dim,
                                       std::int64_t budget = -1);
// Single-threaded reference with identical output.
FilteredComplex build_filtered_complex_serial(const BinaryMatrix& bm, int max_dim,
                                              std::int64_t budget = -1);

// Count of observations whose active set is exactly `pattern`, by Moebius
// inversion over supersets. Needs an uncapped complex.
std::int64_t contingency_from_counts(const FilteredComplex& fc, const Simplex& pattern);

// Highest-order interaction lambda_S of the saturated log-linear model fitted
// over all non-constant variables, with `adjust` added to every cell.
double loglinear_interaction(const BinaryMatrix& bm, const Simplex& subset,
                             double adjust = 0.5);

}  // namespace ct
