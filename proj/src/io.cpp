#include "ct/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace ct {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

struct CsvTable {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> rows;
};

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError(path + ": cannot open file");
    CsvTable table;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (strip(line).empty()) continue;
        auto cells = split_csv_line(line);
        if (table.labels.empty()) {
            for (auto& c : cells) table.labels.push_back(strip(c));
            std::set<std::string> uniq(table.labels.begin(), table.labels.end());
            if (uniq.size() != table.labels.size())
                throw DataError(path + ":1: duplicate variable labels");
            continue;
        }
        if (cells.size() != table.labels.size())
            throw DataError(path + ":" + std::to_string(lineno) + ": expected " +
                            std::to_string(table.labels.size()) + " cells, got " +
                            std::to_string(cells.size()));
        std::vector<double> row;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const std::string cell = strip(cells[c]);
            std::size_t used = 0;
            double value = 0.0;
            bool ok = !cell.empty();
            if (ok) {
                try {
                    value = std::stod(cell, &used);
                } catch (const std::exception&) {
                    ok = false;
                }
            }
            if (!ok || used != cell.size())
                throw DataError(path + ":" + std::to_string(lineno) + ": bad cell '" +
                                cells[c] + "' in column " + std::to_string(c + 1));
            row.push_back(value);
        }
        table.rows.push_back(std::move(row));
    }
    if (table.labels.empty()) throw DataError(path + ": empty file");
    return table;
}

json chain_labels(const FilteredComplex& fc, const Simplex& s) {
    json arr = json::array();
    for (Vertex v : s) arr.push_back(fc.var_labels[v]);
    return arr;
}

}  // namespace

SeriesMatrix read_series_csv(const std::string& path) {
    auto table = read_csv(path);
    if (table.rows.size() < 2) throw DataError(path + ": need at least two time points");
    SeriesMatrix sm;
    sm.var_labels = table.labels;
    sm.n_vars = static_cast<int>(table.labels.size());
    sm.n_time = static_cast<int>(table.rows.size());
    for (const auto& row : table.rows)
        sm.values.insert(sm.values.end(), row.begin(), row.end());
    return sm;
}

BinaryMatrix read_binary_csv(const std::string& path) {
    auto table = read_csv(path);
    BinaryMatrix bm;
    bm.var_labels = table.labels;
    bm.n_vars = static_cast<int>(table.labels.size());
    bm.n_obs = static_cast<int>(table.rows.size());
    bm.bits.reserve(static_cast<std::size_t>(bm.n_obs) * bm.n_vars);
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        for (double x : table.rows[r]) {
            if (x != 0.0 && x != 1.0)
                throw DataError(path + ":" + std::to_string(r + 2) + ": cell is not 0 or 1");
            bm.bits.push_back(x == 1.0 ? 1 : 0);
        }
    }
    return bm;
}

void write_binary_csv(const BinaryMatrix& bm, const std::string& path) {
    std::ostringstream out;
    for (int v = 0; v < bm.n_vars; ++v) out << (v ? "," : "") << bm.var_labels[v];
    out << "\n";
    for (int i = 0; i < bm.n_obs; ++i) {
        for (int v = 0; v < bm.n_vars; ++v) out << (v ? "," : "") << int(bm.at(i, v));
        out << "\n";
    }
    write_text(path, out.str());
}

std::string complex_json(const FilteredComplex& fc) {
    json doc;
    doc["n_obs"] = fc.n_obs;
    doc["max_dim_stored"] = fc.max_dim_stored;
    doc["var_labels"] = fc.var_labels;
    json entries = json::array();
    for (const auto& s : fc.frame(1))
        entries.push_back({{"vertices", chain_labels(fc, s)}, {"count", fc.count_of(s)}});
    doc["simplices"] = std::move(entries);
    return doc.dump(2) + "\n";
}

std::string diagram_json(const PersistenceDiagram& diagram, const std::string& provenance) {
    json doc;
    json dims = json::array();
    for (int d = 0; d <= diagram.max_dim; ++d) {
        json pairs = json::array();
        for (const auto& p : diagram.dim_pairs(d)) pairs.push_back({p.birth, p.death});
        dims.push_back({{"d", d}, {"pairs", std::move(pairs)}});
    }
    doc["dims"] = std::move(dims);
    doc["provenance"] = provenance;
    return doc.dump(2) + "\n";
}

std::string moments_json(const std::vector<MomentVector>& per_dim) {
    json arr = json::array();
    for (const auto& mv : per_dim) {
        json entry;
        entry["dimension"] = mv.dimension;
        entry["count"] = mv.count;
        for (int i = 0; i <= 2; ++i) {
            for (int j = 0; j <= 2; ++j) {
                if (i == 0 && j == 0) continue;
                const std::string key = "m" + std::to_string(i) + std::to_string(j);
                if (mv.m[i][j])
                    entry[key] = *mv.m[i][j];
                else
                    entry[key] = nullptr;
            }
        }
        arr.push_back(std::move(entry));
    }
    return arr.dump(2) + "\n";
}

std::string localization_json(const FilteredComplex& fc,
                              const std::vector<std::vector<NarrowClass>>& per_level_narrow,
                              const std::vector<std::vector<std::pair<int, int>>>& per_level_adjacent,
                              const std::vector<std::int64_t>& levels,
                              const std::vector<ShortCycleRecord>& records, int d) {
    json doc;
    doc["dimension"] = d;
    json lv = json::array();
    for (std::size_t i = 0; i < levels.size(); ++i) {
        json narrow = json::array();
        for (const auto& nc : per_level_narrow[i]) {
            json cycles = json::array();
            for (const auto& s : nc.short_cycles) cycles.push_back(chain_labels(fc, s));
            narrow.push_back({{"short_cycles", std::move(cycles)}});
        }
        json adjacent = json::array();
        for (const auto& [a, b] : per_level_adjacent[i]) adjacent.push_back({a, b});
        lv.push_back({{"level", levels[i]},
                      {"narrow_classes", std::move(narrow)},
                      {"adjacent_pairs", std::move(adjacent)}});
    }
    doc["levels"] = std::move(lv);
    json recs = json::array();
    for (const auto& r : records) {
        recs.push_back({{"vertices", chain_labels(fc, r.vertices)},
                        {"levels_nonbounding", r.levels_nonbounding},
                        {"cycle_lifespan", r.cycle_lifespan()},
                        {"contiguous", r.contiguous()}});
    }
    doc["short_cycle_records"] = std::move(recs);
    return doc.dump(2) + "\n";
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError(path + ": cannot open file");
    std::uint64_t h = 1469598103934665603ull;
    char buf[4096];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 1099511628211ull;
        }
        if (!in) break;
    }
    std::ostringstream out;
    out << "fnv1a:" << std::hex << h;
    return out.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError(path + ": cannot write file");
    out << text;
}

}  // namespace ct
