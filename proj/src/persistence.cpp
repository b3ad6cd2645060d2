#include "ct/persistence.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ct/gf2.hpp"

namespace ct {

std::vector<PersistencePair> PersistenceDiagram::dim_pairs(int d) const {
    std::vector<PersistencePair> out;
    for (const auto& p : pairs)
        if (p.dim == d) out.push_back(p);
    return out;
}

std::int64_t PersistenceDiagram::alive(std::int64_t f, int d) const {
    std::int64_t n = 0;
    for (const auto& p : pairs)
        if (p.dim == d && p.birth >= f && f > p.death) ++n;
    return n;
}

PersistenceDiagram compute_persistence(const FilteredComplex& fc, int max_dim) {
    if (fc.max_dim_stored < max_dim + 1)
        throw DataError("insufficient stored dimension");

    struct Entry {
        Simplex s;
        std::int64_t count;
        int dim;
    };
    std::vector<Entry> order;
    order.reserve(fc.counts.size());
    for (const auto& [s, c] : fc.counts) {
        const int d = static_cast<int>(s.size()) - 1;
        if (d <= max_dim + 1) order.push_back({s, c, d});
    }
    std::sort(order.begin(), order.end(), [](const Entry& a, const Entry& b) {
        if (a.count != b.count) return a.count > b.count;
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.s < b.s;
    });

    std::unordered_map<Simplex, int, SimplexHash> position;
    for (int i = 0; i < static_cast<int>(order.size()); ++i) position[order[i].s] = i;

    const int n = static_cast<int>(order.size());
    std::vector<Gf2Vec> reduced(n);
    std::vector<int> pivot_owner(n, -1);  // facet position -> column with that low
    std::vector<bool> is_destroyer(n, false);

    PersistenceDiagram dg;
    dg.max_dim = max_dim;
    for (int j = 0; j < n; ++j) {
        Gf2Vec col;
        if (order[j].dim > 0) {
            const Simplex& s = order[j].s;
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex facet;
                for (std::size_t k = 0; k < s.size(); ++k)
                    if (k != i) facet.push_back(s[k]);
                col.push_back(position.at(facet));
            }
            std::sort(col.begin(), col.end());
        }
        while (!col.empty() && pivot_owner[col.back()] >= 0)
            col = gf2_xor(col, reduced[pivot_owner[col.back()]]);
        if (col.empty()) continue;  // creator; paired later or essential
        const int low = col.back();
        pivot_owner[low] = j;
        reduced[j] = std::move(col);
        is_destroyer[j] = true;
        const Entry& creator = order[low];
        const Entry& destroyer = order[j];
        if (creator.dim <= max_dim && creator.count != destroyer.count)
            dg.pairs.push_back({creator.dim, creator.count, destroyer.count});
    }
    for (int j = 0; j < n; ++j) {
        if (is_destroyer[j] || pivot_owner[j] >= 0) continue;
        if (order[j].dim <= max_dim)
            dg.pairs.push_back({order[j].dim, order[j].count, 0});
    }
    std::sort(dg.pairs.begin(), dg.pairs.end(), [](const PersistencePair& a, const PersistencePair& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        if (a.birth != b.birth) return a.birth > b.birth;
        return a.death > b.death;
    });
    return dg;
}

std::int64_t betti(const FilteredComplex& fc, std::int64_t f, int d) {
    if (f < 1) throw DataError("frequency level must be >= 1");
    if (d > fc.max_dim_stored - 1) throw DataError("insufficient stored dimension");

    auto rank_boundary = [&](int dim) -> int {
        // rank of the boundary map from dim-simplices to (dim-1)-simplices
        if (dim <= 0) return 0;
        const auto sources = fc.frame_dim(f, dim);
        const auto targets = fc.frame_dim(f, dim - 1);
        if (sources.empty() || targets.empty()) return 0;
        std::unordered_map<Simplex, int, SimplexHash> index;
        for (int i = 0; i < static_cast<int>(targets.size()); ++i) index[targets[i]] = i;
        std::vector<std::vector<std::uint64_t>> rows;
        rows.reserve(sources.size());
        for (const auto& s : sources) {
            Gf2Vec v;
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex facet;
                for (std::size_t k = 0; k < s.size(); ++k)
                    if (k != i) facet.push_back(s[k]);
                v.push_back(index.at(facet));
            }
            std::sort(v.begin(), v.end());
            rows.push_back(gf2_pack(v, static_cast<int>(targets.size())));
        }
        return gf2_rank(std::move(rows), static_cast<int>(targets.size()));
    };

    const std::int64_t n_d = static_cast<std::int64_t>(fc.frame_dim(f, d).size());
    return n_d - rank_boundary(d) - rank_boundary(d + 1);
}

namespace {

std::map<std::pair<std::int64_t, std::int64_t>, int>
multiplicities(const PersistenceDiagram& diagram, int d) {
    std::map<std::pair<std::int64_t, std::int64_t>, int> m;
    for (const auto& p : diagram.pairs)
        if (p.dim == d) ++m[{p.birth, p.death}];
    return m;
}

}  // namespace

std::string plot_csv(const PersistenceDiagram& diagram, int d) {
    std::ostringstream out;
    out << "birth,death,multiplicity\n";
    auto m = multiplicities(diagram, d);
    for (auto it = m.rbegin(); it != m.rend(); ++it)
        out << it->first.first << "," << it->first.second << "," << it->second << "\n";
    return out.str();
}

std::string plot_svg(const PersistenceDiagram& diagram, int d) {
    auto m = multiplicities(diagram, d);
    std::int64_t top = 1;
    for (const auto& [bd, mult] : m) top = std::max(top, bd.first);
    const double size = 320.0, margin = 40.0;
    const double scale = (size - 2 * margin) / static_cast<double>(top);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
        << "\" height=\"" << size << "\">\n";
    out << "  <line x1=\"" << margin << "\" y1=\"" << size - margin << "\" x2=\""
        << size - margin << "\" y2=\"" << size - margin << "\" stroke=\"black\"/>\n";
    out << "  <line x1=\"" << margin << "\" y1=\"" << size - margin << "\" x2=\""
        << margin << "\" y2=\"" << margin << "\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << size / 2 << "\" y=\"" << size - 8
        << "\" text-anchor=\"middle\" font-size=\"12\">birth</text>\n";
    out << "  <text x=\"12\" y=\"" << size / 2
        << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 12 "
        << size / 2 << ")\">death</text>\n";
    for (const auto& [bd, mult] : m) {
        const double x = margin + bd.first * scale;
        const double y = size - margin - bd.second * scale;
        out << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\""
            << 3 + 2 * (mult - 1) << "\" fill=\"none\" stroke=\"black\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace ct
