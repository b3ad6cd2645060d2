#include "ct/localization.hpp"

#include <algorithm>

namespace ct {

ChainGF2 short_cycle_chain(const Simplex& vertices) {
    if (vertices.size() < 2) throw DataError("short cycle needs at least two vertices");
    return boundary(vertices);
}

bool ShortCycleRecord::contiguous() const {
    for (std::size_t i = 1; i < levels_nonbounding.size(); ++i)
        if (levels_nonbounding[i] != levels_nonbounding[i - 1] + 1) return false;
    return true;
}

namespace {

struct Level {
    std::vector<Simplex> d_simplices;
    std::unordered_map<Simplex, int, SimplexHash> index;
    Gf2Basis boundaries;
};

Level build_level(const FilteredComplex& fc, std::int64_t f, int d) {
    if (d + 1 > fc.max_dim_stored) throw DataError("insufficient stored dimension");
    Level lvl;
    lvl.d_simplices = fc.frame_dim(f, d);
    for (int i = 0; i < static_cast<int>(lvl.d_simplices.size()); ++i)
        lvl.index[lvl.d_simplices[i]] = i;
    for (const auto& cof : fc.frame_dim(f, d + 1)) {
        Gf2Vec col;
        for (std::size_t i = 0; i < cof.size(); ++i) {
            Simplex facet;
            for (std::size_t k = 0; k < cof.size(); ++k)
                if (k != i) facet.push_back(cof[k]);
            col.push_back(lvl.index.at(facet));
        }
        std::sort(col.begin(), col.end());
        lvl.boundaries.insert(std::move(col));
    }
    return lvl;
}

Gf2Vec to_vec(const Level& lvl, const ChainGF2& z) {
    Gf2Vec v;
    for (const auto& s : z.simplices) {
        auto it = lvl.index.find(s);
        if (it == lvl.index.end()) throw DataError("chain not supported in frame");
        v.push_back(it->second);
    }
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<Simplex> shorts_in_level(const FilteredComplex& fc, std::int64_t f, int d,
                                     const Level& lvl) {
    const int n_vars = static_cast<int>(fc.var_labels.size());
    std::vector<Simplex> out;
    for (const auto& base : lvl.d_simplices) {
        for (Vertex v = base.back() + 1; v < n_vars; ++v) {
            Simplex cand(base);
            cand.push_back(v);
            bool all = true;
            for (std::size_t i = 0; i < cand.size() && all; ++i) {
                Simplex facet;
                for (std::size_t k = 0; k < cand.size(); ++k)
                    if (k != i) facet.push_back(cand[k]);
                all = fc.in_frame(facet, f);
            }
            if (all) out.push_back(std::move(cand));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

const Localizer::LevelContext& Localizer::context(std::int64_t f, int d) const {
    auto it = cache_.find({f, d});
    if (it == cache_.end()) {
        Level lvl = build_level(fc_, f, d);
        LevelContext ctx{std::move(lvl.d_simplices), std::move(lvl.index),
                         std::move(lvl.boundaries)};
        it = cache_.emplace(std::make_pair(f, d), std::move(ctx)).first;
    }
    return it->second;
}

Gf2Vec Localizer::chain_to_vec(const LevelContext& ctx, std::int64_t, const ChainGF2& z) const {
    Gf2Vec v;
    for (const auto& s : z.simplices) {
        auto it = ctx.index.find(s);
        if (it == ctx.index.end()) throw DataError("chain not supported in frame");
        v.push_back(it->second);
    }
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<Simplex> Localizer::enumerate_short_cycles(std::int64_t f, int d) const {
    if (d + 1 > fc_.max_dim_stored) throw DataError("insufficient stored dimension");
    Level lvl;
    lvl.d_simplices = fc_.frame_dim(f, d);
    return shorts_in_level(fc_, f, d, lvl);
}

bool Localizer::is_boundary(std::int64_t f, const ChainGF2& z) const {
    if (z.empty()) return true;
    const auto& ctx = context(f, z.dimension);
    return ctx.boundaries.reduce(chain_to_vec(ctx, f, z)).empty();
}

std::vector<Simplex> Localizer::localize(std::int64_t f, const ChainGF2& z) const {
    if (z.empty()) throw DataError("cannot localize the empty chain");
    if (!boundary(z).empty()) throw DataError("chain is not a cycle");
    const int d = z.dimension;
    const auto& ctx = context(f, d);
    const Gf2Vec zvec = ctx.boundaries.reduce(chain_to_vec(ctx, f, z));
    std::vector<Simplex> out;
    for (const auto& cand : enumerate_short_cycles(f, d)) {
        const Gf2Vec cvec =
            ctx.boundaries.reduce(chain_to_vec(ctx, f, short_cycle_chain(cand)));
        if (cvec == zvec) out.push_back(cand);
    }
    return out;
}

std::vector<NarrowClass> Localizer::narrow_classes(std::int64_t f, int d) const {
    const auto& ctx = context(f, d);
    std::map<Gf2Vec, std::vector<Simplex>> groups;
    for (const auto& cand : enumerate_short_cycles(f, d)) {
        Gf2Vec nf = ctx.boundaries.reduce(chain_to_vec(ctx, f, short_cycle_chain(cand)));
        if (nf.empty()) continue;  // bounding short cycles carry no class
        groups[std::move(nf)].push_back(cand);
    }
    std::vector<NarrowClass> out;
    for (auto& [key, cycles] : groups) {
        NarrowClass nc;
        nc.level = f;
        nc.key = key;
        nc.representative = short_cycle_chain(cycles.front());
        nc.short_cycles = std::move(cycles);
        out.push_back(std::move(nc));
    }
    std::sort(out.begin(), out.end(), [](const NarrowClass& a, const NarrowClass& b) {
        return a.short_cycles.front() < b.short_cycles.front();
    });
    return out;
}

std::vector<std::pair<int, int>> Localizer::adjacent_pairs(std::int64_t f, int d) const {
    const auto narrow = narrow_classes(f, d);
    std::map<Gf2Vec, int> by_key;
    for (int i = 0; i < static_cast<int>(narrow.size()); ++i) by_key[narrow[i].key] = i;
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < static_cast<int>(narrow.size()); ++i) {
        for (int j = i + 1; j < static_cast<int>(narrow.size()); ++j) {
            // keys are normal forms, so their xor is again a normal form
            Gf2Vec sum = gf2_xor(narrow[i].key, narrow[j].key);
            if (!sum.empty() && by_key.count(sum)) out.emplace_back(i, j);
        }
    }
    return out;
}

std::vector<ShortCycleRecord> Localizer::cycle_lifespans(int d) const {
    const int n_levels = static_cast<int>(fc_.max_level);
    std::vector<std::vector<Simplex>> nonbounding(n_levels + 1);
    #pragma omp parallel for schedule(dynamic)
    for (int f = 1; f <= n_levels; ++f) {
        Level lvl = build_level(fc_, f, d);
        for (const auto& cand : shorts_in_level(fc_, f, d, lvl)) {
            ChainGF2 z = short_cycle_chain(cand);
            if (!lvl.boundaries.reduce(to_vec(lvl, z)).empty())
                nonbounding[f].push_back(cand);
        }
    }
    std::map<Simplex, std::vector<std::int64_t>> levels;
    for (int f = 1; f <= n_levels; ++f)
        for (const auto& s : nonbounding[f]) levels[s].push_back(f);
    std::vector<ShortCycleRecord> out;
    for (auto& [s, lv] : levels) out.push_back({s, d, std::move(lv)});
    return out;
}

}  // namespace ct
