#include "ct/complex.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ct {

std::vector<Simplex> FilteredComplex::frame(std::int64_t f) const {
    std::vector<Simplex> out;
    for (const auto& [s, c] : counts)
        if (c >= f) out.push_back(s);
    std::sort(out.begin(), out.end(), [](const Simplex& a, const Simplex& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::vector<Simplex> FilteredComplex::frame_dim(std::int64_t f, int d) const {
    std::vector<Simplex> out;
    for (const auto& [s, c] : counts)
        if (c >= f && static_cast<int>(s.size()) == d + 1) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t concurrence_count(const BinaryMatrix& bm, const Simplex& subset) {
    std::int64_t n = 0;
    for (int i = 0; i < bm.n_obs; ++i) {
        bool all = true;
        for (Vertex v : subset)
            if (!bm.at(i, v)) {
                all = false;
                break;
            }
        n += all;
    }
    return n;
}

namespace {

std::map<Simplex, std::int64_t> group_rows(const BinaryMatrix& bm) {
    std::map<Simplex, std::int64_t> rows;
    for (int i = 0; i < bm.n_obs; ++i) {
        Simplex active;
        for (int v = 0; v < bm.n_vars; ++v)
            if (bm.at(i, v)) active.push_back(v);
        if (!active.empty()) ++rows[active];  // all-zero observations drop out
    }
    return rows;
}

template <typename F>
void for_each_subset(const Simplex& set, int max_size, F&& fn) {
    Simplex cur;
    cur.reserve(max_size);
    auto rec = [&](auto&& self, std::size_t start) -> void {
        for (std::size_t j = start; j < set.size(); ++j) {
            cur.push_back(set[j]);
            fn(cur);
            if (static_cast<int>(cur.size()) < max_size) self(self, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

std::int64_t projected_work(const std::map<Simplex, std::int64_t>& rows, int max_size) {
    std::int64_t total = 0;
    for (const auto& [row, mult] : rows) {
        (void)mult;
        const int a = static_cast<int>(row.size());
        for (int j = 1; j <= std::min(a, max_size); ++j) {
            const std::int64_t c = binomial(a, j);
            if (total > (std::int64_t{1} << 62) - c) return std::int64_t{1} << 62;
            total += c;
        }
    }
    return total;
}

FilteredComplex build_impl(const BinaryMatrix& bm, int max_dim, std::int64_t budget,
                           bool parallel) {
    if (max_dim < 0) throw DataError("max_dim must be nonnegative");
    if (budget < 0) budget = work_budget_or(1000000000);
    const int max_size = max_dim + 2;  // one dimension above max_dim

    FilteredComplex fc;
    fc.var_labels = bm.var_labels;
    fc.max_dim_stored = max_dim + 1;
    fc.n_obs = bm.n_obs;

    auto grouped = group_rows(bm);
    if (projected_work(grouped, max_size) > budget)
        throw BudgetError("dimension cap too generous for these active-set sizes");
    fc.rows.assign(grouped.begin(), grouped.end());

    using Local = std::unordered_map<Simplex, std::int64_t, SimplexHash>;
    int n_threads = 1;
#ifdef _OPENMP
    if (parallel) n_threads = omp_get_max_threads();
#else
    (void)parallel;
#endif
    std::vector<Local> locals(n_threads);
    const int n_rows = static_cast<int>(fc.rows.size());
    #pragma omp parallel for schedule(dynamic) num_threads(n_threads) if (parallel)
    for (int r = 0; r < n_rows; ++r) {
        int tid = 0;
#ifdef _OPENMP
        tid = omp_get_thread_num();
#endif
        const auto& [row, mult] = fc.rows[r];
        for_each_subset(row, max_size,
                        [&](const Simplex& s) { locals[tid][s] += mult; });
    }
    for (auto& local : locals)
        for (auto& [s, c] : local) fc.counts[s] += c;
    for (const auto& [s, c] : fc.counts) fc.max_level = std::max(fc.max_level, c);
    return fc;
}

}  // namespace

FilteredComplex build_filtered_complex(const BinaryMatrix& bm, int max_dim,
                                       std::int64_t budget) {
    return build_impl(bm, max_dim, budget, true);
}

FilteredComplex build_filtered_complex_serial(const BinaryMatrix& bm, int max_dim,
                                              std::int64_t budget) {
    return build_impl(bm, max_dim, budget, false);
}

std::int64_t contingency_from_counts(const FilteredComplex& fc, const Simplex& pattern) {
    const int n_vars = static_cast<int>(fc.var_labels.size());
    if (fc.max_dim_stored < n_vars - 1)
        throw DataError("full table requires uncapped complex");
    // counts[empty] := n_obs, contributing only the A = {} case.
    std::int64_t total = pattern.empty() ? fc.n_obs : 0;
    for (const auto& [b, c] : fc.counts) {
        if (!std::includes(b.begin(), b.end(), pattern.begin(), pattern.end())) continue;
        const int extra = static_cast<int>(b.size() - pattern.size());
        total += (extra % 2 == 0) ? c : -c;
    }
    return total;
}

double loglinear_interaction(const BinaryMatrix& bm, const Simplex& subset, double adjust) {
    if (subset.size() < 2) throw DataError("interaction needs at least two variables");
    if (adjust <= 0.0) throw DataError("adjustment must be positive");

    // The saturated model runs over every non-constant variable.
    std::vector<int> model_vars;
    for (int v = 0; v < bm.n_vars; ++v) {
        std::int64_t ones = 0;
        for (int i = 0; i < bm.n_obs; ++i) ones += bm.at(i, v);
        if (ones > 0 && ones < bm.n_obs) model_vars.push_back(v);
    }
    std::vector<int> pos_in_model(bm.n_vars, -1);
    for (std::size_t i = 0; i < model_vars.size(); ++i) pos_in_model[model_vars[i]] = static_cast<int>(i);
    for (Vertex v : subset)
        if (v < 0 || v >= bm.n_vars || pos_in_model[v] < 0)
            throw DataError("interaction over constant or unknown variable");

    // Cells with zero count contribute ln(adjust) with signs summing to zero,
    // so only observed patterns enter: lambda = 2^-p * sum sign * ln((n+a)/a).
    std::map<std::vector<std::uint8_t>, std::int64_t> patterns;
    for (int i = 0; i < bm.n_obs; ++i) {
        std::vector<std::uint8_t> pat(model_vars.size());
        for (std::size_t j = 0; j < model_vars.size(); ++j) pat[j] = bm.at(i, model_vars[j]);
        ++patterns[pat];
    }
    double sum = 0.0;
    for (const auto& [pat, n] : patterns) {
        int sign = 1;
        for (Vertex v : subset)
            if (!pat[pos_in_model[v]]) sign = -sign;
        sum += sign * std::log((static_cast<double>(n) + adjust) / adjust);
    }
    return std::ldexp(sum, -static_cast<int>(model_vars.size()));
}

}  // namespace ct
