#include "ct/summaries.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <unordered_set>

namespace ct {

MomentVector moments(const PersistenceDiagram& diagram, int d) {
    MomentVector mv;
    mv.dimension = d;
    const auto pairs = diagram.dim_pairs(d);
    mv.count = static_cast<std::int64_t>(pairs.size());
    if (pairs.empty()) return mv;  // moments stay undefined
    for (int i = 0; i <= 2; ++i) {
        for (int j = 0; j <= 2; ++j) {
            if (i == 0 && j == 0) continue;
            double sum = 0.0;
            for (const auto& p : pairs)
                sum += std::pow(static_cast<double>(p.birth), i) *
                       std::pow(static_cast<double>(p.lifespan()), j);
            mv.m[i][j] = std::pow(sum / static_cast<double>(pairs.size()), 1.0 / (i + j));
        }
    }
    return mv;
}

namespace {

using Mask = std::vector<std::uint64_t>;

struct MaskHash {
    std::size_t operator()(const Mask& m) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint64_t w : m) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

Mask to_mask(const Simplex& s, int words) {
    Mask m(words, 0);
    for (Vertex v : s) m[v / 64] |= 1ull << (v % 64);
    return m;
}

Simplex to_simplex(const Mask& m) {
    Simplex s;
    for (std::size_t w = 0; w < m.size(); ++w)
        for (int b = 0; b < 64; ++b)
            if (m[w] & (1ull << b)) s.push_back(static_cast<Vertex>(w * 64 + b));
    return s;
}

Mask mask_and(const Mask& a, const Mask& b) {
    Mask out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
    return out;
}

bool mask_empty(const Mask& m) {
    return std::all_of(m.begin(), m.end(), [](std::uint64_t w) { return w == 0; });
}

bool mask_subset(const Mask& a, const Mask& b) {  // a subseteq b
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

int mask_popcount(const Mask& m) {
    int n = 0;
    for (std::uint64_t w : m) n += __builtin_popcountll(w);
    return n;
}

struct Budget {
    std::int64_t left;
    void spend(std::int64_t n = 1) {
        left -= n;
        if (left < 0) throw BudgetError("Euler budget exceeded");
    }
};

// Drops duplicates and masks contained in another mask.
std::vector<Mask> maximalize(std::vector<Mask> masks) {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<Mask> out;
    for (std::size_t i = 0; i < masks.size(); ++i) {
        bool contained = false;
        for (std::size_t j = 0; j < masks.size() && !contained; ++j)
            contained = i != j && mask_subset(masks[i], masks[j]) && masks[i] != masks[j];
        if (!contained) out.push_back(masks[i]);
    }
    return out;
}

std::vector<Mask> maximal_face_masks(const FilteredComplex& fc, std::int64_t f,
                                     Budget& budget) {
    if (f < 1) throw DataError("frequency level must be >= 1");
    const int words = (static_cast<int>(fc.var_labels.size()) + 63) / 64;
    std::vector<Mask> row_masks;
    std::vector<std::int64_t> mults;
    for (const auto& [row, mult] : fc.rows) {
        row_masks.push_back(to_mask(row, words));
        mults.push_back(mult);
    }
    auto count_of = [&](const Mask& m) {
        std::int64_t c = 0;
        for (std::size_t r = 0; r < row_masks.size(); ++r)
            if (mask_subset(m, row_masks[r])) c += mults[r];
        return c;
    };

    // Maximal frame members are intersections of rows; once an intersection
    // reaches count >= f every further intersection is non-maximal.
    std::unordered_set<Mask, MaskHash> seen;
    std::deque<Mask> work(row_masks.begin(), row_masks.end());
    std::vector<Mask> candidates;
    while (!work.empty()) {
        Mask m = std::move(work.front());
        work.pop_front();
        if (mask_empty(m) || !seen.insert(m).second) continue;
        budget.spend();
        if (count_of(m) >= f) {
            candidates.push_back(m);
            continue;
        }
        for (const auto& r : row_masks) {
            budget.spend();
            Mask child = mask_and(m, r);
            if (!mask_empty(child) && child != m && !seen.count(child))
                work.push_back(std::move(child));
        }
    }
    return maximalize(std::move(candidates));
}

std::int64_t chi_recursive(std::vector<Mask> faces,
                           std::map<std::vector<std::uint64_t>, std::int64_t>& memo,
                           Budget& budget) {
    budget.spend();
    if (faces.empty()) return 0;
    if (faces.size() == 1) return 1;
    std::vector<std::uint64_t> key;
    for (const auto& m : faces) key.insert(key.end(), m.begin(), m.end());
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const Mask last = faces.back();
    faces.pop_back();
    std::vector<Mask> intersections;
    for (const auto& face : faces) {
        Mask m = mask_and(face, last);
        if (!mask_empty(m)) intersections.push_back(std::move(m));
    }
    const std::int64_t chi = chi_recursive(faces, memo, budget) + 1 -
                             chi_recursive(maximalize(std::move(intersections)), memo, budget);
    memo.emplace(std::move(key), chi);
    return chi;
}

}  // namespace

std::vector<Simplex> maximal_faces(const FilteredComplex& fc, std::int64_t f) {
    Budget budget{work_budget_or(100000000)};
    std::vector<Simplex> out;
    for (const auto& m : maximal_face_masks(fc, f, budget)) out.push_back(to_simplex(m));
    std::sort(out.begin(), out.end(), [](const Simplex& a, const Simplex& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::int64_t euler_inclusion_exclusion(const FilteredComplex& fc, std::int64_t f,
                                       std::int64_t budget_in) {
    Budget budget{budget_in >= 0 ? budget_in : work_budget_or(100000000)};
    auto faces = maximalize(maximal_face_masks(fc, f, budget));
    std::sort(faces.begin(), faces.end());
    std::map<std::vector<std::uint64_t>, std::int64_t> memo;
    return chi_recursive(std::move(faces), memo, budget);
}

std::int64_t euler_direct(const FilteredComplex& fc, std::int64_t f) {
    if (static_cast<int>(fc.var_labels.size()) > 25)
        throw DataError("direct Euler enumeration limited to 25 variables");
    Budget budget{work_budget_or(100000000)};
    const int words = 1;
    std::vector<Mask> row_masks;
    std::vector<std::int64_t> mults;
    for (const auto& [row, mult] : fc.rows) {
        row_masks.push_back(to_mask(row, words));
        mults.push_back(mult);
    }
    auto count_of = [&](const Mask& m) {
        std::int64_t c = 0;
        for (std::size_t r = 0; r < row_masks.size(); ++r)
            if (mask_subset(m, row_masks[r])) c += mults[r];
        return c;
    };
    // Every face of frame(1) reached from the rows by vertex deletion.
    std::unordered_set<Mask, MaskHash> seen;
    std::deque<Mask> work(row_masks.begin(), row_masks.end());
    std::int64_t chi = 0;
    while (!work.empty()) {
        Mask m = std::move(work.front());
        work.pop_front();
        if (mask_empty(m) || !seen.insert(m).second) continue;
        budget.spend();
        if (count_of(m) >= f) chi += mask_popcount(m) % 2 == 1 ? 1 : -1;
        const Simplex s = to_simplex(m);
        for (Vertex v : s) {
            Mask child = m;
            child[v / 64] &= ~(1ull << (v % 64));
            if (!mask_empty(child) && !seen.count(child)) work.push_back(std::move(child));
        }
    }
    return chi;
}

std::int64_t euler_characteristic(const FilteredComplex& fc, std::int64_t f,
                                  std::int64_t budget) {
    try {
        return euler_inclusion_exclusion(fc, f, budget);
    } catch (const BudgetError&) {
        if (static_cast<int>(fc.var_labels.size()) <= 25) return euler_direct(fc, f);
        throw;
    }
}

}  // namespace ct
