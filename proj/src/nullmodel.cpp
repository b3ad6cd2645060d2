#include "ct/nullmodel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace ct {

namespace {

// mt19937_64 output is standardized; distributions are not, so bounded draws
// go through an explicit rejection-free mapping.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    // Lemire's multiply-shift reduction
    unsigned __int128 m = static_cast<unsigned __int128>(rng()) * n;
    return static_cast<std::uint64_t>(m >> 64);
}

BinaryMatrix from_rows(std::vector<std::vector<int>> rows,
                       std::vector<std::string> labels) {
    BinaryMatrix bm;
    bm.var_labels = std::move(labels);
    bm.n_vars = static_cast<int>(bm.var_labels.size());
    bm.n_obs = static_cast<int>(rows.size());
    bm.bits.assign(static_cast<std::size_t>(bm.n_obs) * bm.n_vars, 0);
    for (int i = 0; i < bm.n_obs; ++i)
        for (int v : rows[i]) bm.at(i, v) = 1;
    return bm;
}

}  // namespace

BinaryMatrix generate_independent(const NullConfig& cfg) {
    if (cfg.n_obs < 1 || cfg.n_vars < 1) throw DataError("null config needs n_obs, n_vars >= 1");
    if (cfg.activity_rate <= 0.0 || cfg.activity_rate >= 1.0)
        throw DataError("activity_rate must lie in (0,1)");
    const int k = std::min<int>(
        cfg.n_obs, static_cast<int>(std::llround(cfg.activity_rate * cfg.n_obs)));

    BinaryMatrix bm;
    bm.n_obs = cfg.n_obs;
    bm.n_vars = cfg.n_vars;
    for (int v = 0; v < cfg.n_vars; ++v) bm.var_labels.push_back("V" + std::to_string(v + 1));
    bm.bits.assign(static_cast<std::size_t>(cfg.n_obs) * cfg.n_vars, 0);

    std::mt19937_64 rng(cfg.seed);
    std::vector<int> idx(cfg.n_obs);
    for (int v = 0; v < cfg.n_vars; ++v) {
        std::iota(idx.begin(), idx.end(), 0);
        for (int i = 0; i < k; ++i) {  // partial Fisher-Yates
            const int j = i + static_cast<int>(bounded(rng, cfg.n_obs - i));
            std::swap(idx[i], idx[j]);
            bm.at(idx[i], v) = 1;
        }
    }
    return bm;
}

BinaryMatrix toy_fixture(ToyFixture name) {
    using Rows = std::vector<std::vector<int>>;
    const std::vector<std::string> vwxyz = {"V", "W", "X", "Y", "Z"};
    const std::vector<std::string> vwxz = {"V", "W", "X", "Z"};
    switch (name) {
        case ToyFixture::I:
            return from_rows(Rows{{},
                                  {3, 4},
                                  {2, 4},
                                  {2, 3},
                                  {},
                                  {3, 4},
                                  {2, 4},
                                  {2, 3},
                                  {0, 4},
                                  {1, 2},
                                  {0, 1}},
                             vwxyz);
        case ToyFixture::II:
            return from_rows(Rows{{},
                                  {4},
                                  {3},
                                  {2},
                                  {3, 4},
                                  {2, 4},
                                  {2, 3},
                                  {2, 3, 4},
                                  {0, 4},
                                  {1, 2},
                                  {0, 1}},
                             vwxyz);
        case ToyFixture::III:
            return from_rows(Rows{{4},
                                  {3},
                                  {2},
                                  {2, 3, 4},
                                  {4},
                                  {3},
                                  {2},
                                  {2, 3, 4},
                                  {0, 4},
                                  {1, 2},
                                  {0, 1}},
                             vwxyz);
        case ToyFixture::IV:
            return from_rows(Rows{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}, vwxz);
        case ToyFixture::V:
            return from_rows(Rows{{0, 2, 3}, {0, 1, 3}, {0, 1, 2}}, vwxz);
    }
    throw DataError("unknown fixture");
}

BinaryMatrix planted_hole(int d, int n_vars, int noise_obs, std::uint64_t seed) {
    if (d < 0 || n_vars < d + 2) throw DataError("planted hole needs n_vars >= d + 2");
    std::vector<std::vector<int>> rows;
    for (int skip = 0; skip < d + 2; ++skip) {
        std::vector<int> facet;
        for (int v = 0; v < d + 2; ++v)
            if (v != skip) facet.push_back(v);
        rows.push_back(std::move(facet));
    }
    // Noise stays off the planted variables, so no row can fill the shell.
    std::mt19937_64 rng(seed);
    const int n_free = n_vars - (d + 2);
    for (int i = 0; i < noise_obs; ++i) {
        std::vector<int> row;
        if (n_free > 0) {
            const int weight = 1 + static_cast<int>(bounded(rng, std::min(n_free, 3)));
            while (static_cast<int>(row.size()) < weight) {
                const int v = d + 2 + static_cast<int>(bounded(rng, n_free));
                if (std::find(row.begin(), row.end(), v) == row.end()) row.push_back(v);
            }
            std::sort(row.begin(), row.end());
        }
        rows.push_back(std::move(row));
    }
    std::vector<std::string> labels;
    for (int v = 0; v < n_vars; ++v) labels.push_back("V" + std::to_string(v + 1));
    return from_rows(std::move(rows), std::move(labels));
}

SeriesMatrix generate_series(int n_time, int n_vars, std::uint64_t seed) {
    SeriesMatrix sm;
    sm.n_time = n_time;
    sm.n_vars = n_vars;
    for (int v = 0; v < n_vars; ++v) sm.var_labels.push_back("V" + std::to_string(v + 1));
    sm.values.resize(static_cast<std::size_t>(n_time) * n_vars);
    std::mt19937_64 rng(seed);
    for (auto& x : sm.values) {
        // uniform(0,1) from the top 53 bits; enough structure for fixtures
        x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    }
    return sm;
}

}  // namespace ct
