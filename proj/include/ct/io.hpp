#pragma once

#include <string>
#include <vector>

#include "ct/complex.hpp"
#include "ct/localization.hpp"
#include "ct/persistence.hpp"
#include "ct/signal.hpp"
#include "ct/summaries.hpp"

namespace ct {

// CSV: first row variable labels, cells decimal reals, no missing values.
SeriesMatrix read_series_csv(const std::string& path);
BinaryMatrix read_binary_csv(const std::string& path);
void write_binary_csv(const BinaryMatrix& bm, const std::string& path);

// Deterministic JSON texts (keys and entries in fixed order).
std::string complex_json(const FilteredComplex& fc);
std::string diagram_json(const PersistenceDiagram& diagram, const std::string& provenance);
std::string moments_json(const std::vector<MomentVector>& per_dim);
std::string localization_json(const FilteredComplex& fc,
                              const std::vector<std::vector<NarrowClass>>& per_level_narrow,
                              const std::vector<std::vector<std::pair<int, int>>>& per_level_adjacent,
                              const std::vector<std::int64_t>& levels,
                              const std::vector<ShortCycleRecord>& records, int d);

// FNV-1a 64 over a file's bytes, as "fnv1a:<hex>".
std::string file_digest(const std::string& path);

void write_text(const std::string& path, const std::string& text);

}  // namespace ct
