#include "ct/types.hpp"

#include <cstdlib>
#include <limits>

namespace ct {

void ChainGF2::add(const Simplex& s) {
    auto it = simplices.find(s);
    if (it != simplices.end()) {
        simplices.erase(it);
        if (simplices.empty()) dimension = -1;
        return;
    }
    const int d = static_cast<int>(s.size()) - 1;
    if (!simplices.empty() && d != dimension)
        throw DataError("chain dimension mismatch");
    dimension = d;
    simplices.insert(s);
}

ChainGF2& ChainGF2::operator+=(const ChainGF2& o) {
    for (const auto& s : o.simplices) add(s);
    return *this;
}

ChainGF2 boundary(const Simplex& s) {
    ChainGF2 out;
    if (s.size() < 2) return out;  // vertices have empty boundary
    for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex facet;
        facet.reserve(s.size() - 1);
        for (std::size_t j = 0; j < s.size(); ++j)
            if (j != i) facet.push_back(s[j]);
        out.add(facet);
    }
    return out;
}

ChainGF2 boundary(const ChainGF2& z) {
    ChainGF2 out;
    for (const auto& s : z.simplices) out += boundary(s);
    return out;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    const std::int64_t cap = std::numeric_limits<std::int64_t>::max();
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        if (r > cap / (n - k + i)) return cap;
        r = r * (n - k + i) / i;
    }
    return r;
}

std::int64_t work_budget_or(std::int64_t fallback) {
    if (const char* env = std::getenv("CT_WORK_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return fallback;
}

}  // namespace ct
