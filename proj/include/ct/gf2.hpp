#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace ct {

// Sorted-index sparse GF(2) vectors; pivot is the largest index.
using Gf2Vec = std::vector<int>;

Gf2Vec gf2_xor(const Gf2Vec& a, const Gf2Vec& b);

// Fully inter-reduced column basis of a GF(2) subspace. reduce() returns
// the canonical coset representative of v modulo the spanned space.
class Gf2Basis {
public:
    void insert(Gf2Vec v);
    Gf2Vec reduce(Gf2Vec v) const;
    bool contains(const Gf2Vec& v) const { return reduce(v).empty(); }
    std::size_t rank() const { return cols_.size(); }

private:
    std::map<int, Gf2Vec> cols_;  // pivot -> column, no column holds another's pivot
};

// Rank of a dense GF(2) matrix given as bit-packed rows over `ncols` columns.
int gf2_rank(std::vector<std::vector<std::uint64_t>> rows, int ncols);

// Bit-packed helpers for the dense route.
std::vector<std::uint64_t> gf2_pack(const Gf2Vec& v, int ncols);

}  // namespace ct
