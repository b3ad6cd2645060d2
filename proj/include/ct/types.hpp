#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ct {

// A simplex is its strictly sorted vertex list; dimension = size - 1.
using Vertex = int;
using Simplex = std::vector<Vertex>;

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        std::uint64_t h = 1469598103934665603ull;
        for (Vertex v : s) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// Data or validation problem; maps to CLI exit code 2.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Work budget exceeded; maps to CLI exit code 3.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Chain over Z/2: a set of same-dimension simplices under symmetric difference.
struct ChainGF2 {
    int dimension = -1;  // -1 when empty
    std::set<Simplex> simplices;

    bool empty() const { return simplices.empty(); }
    void add(const Simplex& s);               // xor one simplex in/out
    ChainGF2& operator+=(const ChainGF2& o);  // symmetric difference
    friend ChainGF2 operator+(ChainGF2 a, const ChainGF2& b) { return a += b; }
    bool operator==(const ChainGF2& o) const { return simplices == o.simplices; }
};

// Boundary of a single simplex: all facets (one vertex removed).
ChainGF2 boundary(const Simplex& s);
// Boundary of a chain.
ChainGF2 boundary(const ChainGF2& z);

// C(n, k) with saturation at int64 max.
std::int64_t binomial(int n, int k);

// Work-budget default overridable through CT_WORK_BUDGET.
std::int64_t work_budget_or(std::int64_t fallback);

}  // namespace ct
