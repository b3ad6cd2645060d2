#include "ct/gf2.hpp"

#include <algorithm>

namespace ct {

Gf2Vec gf2_xor(const Gf2Vec& a, const Gf2Vec& b) {
    Gf2Vec out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

Gf2Vec Gf2Basis::reduce(Gf2Vec v) const {
    // Basis columns carry no foreign pivots, so one descending sweep suffices.
    for (auto it = cols_.rbegin(); it != cols_.rend(); ++it) {
        if (std::binary_search(v.begin(), v.end(), it->first))
            v = gf2_xor(v, it->second);
    }
    return v;
}

void Gf2Basis::insert(Gf2Vec v) {
    v = reduce(std::move(v));
    if (v.empty()) return;
    const int pivot = v.back();
    for (auto& [p, col] : cols_) {
        if (std::binary_search(col.begin(), col.end(), pivot))
            col = gf2_xor(col, v);
    }
    cols_.emplace(pivot, std::move(v));
}

int gf2_rank(std::vector<std::vector<std::uint64_t>> rows, int ncols) {
    const int words = (ncols + 63) / 64;
    int rank = 0;
    for (int col = 0; col < ncols; ++col) {
        const int w = col / 64;
        const std::uint64_t bit = 1ull << (col % 64);
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
            if (rows[r][w] & bit) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[pivot], rows[rank]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r != rank && (rows[r][w] & bit))
                for (int k = 0; k < words; ++k) rows[r][k] ^= rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

std::vector<std::uint64_t> gf2_pack(const Gf2Vec& v, int ncols) {
    std::vector<std::uint64_t> out((ncols + 63) / 64, 0);
    for (int i : v) out[i / 64] |= 1ull << (i % 64);
    return out;
}

}  // namespace ct
