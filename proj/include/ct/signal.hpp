#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ct/types.hpp"

namespace ct {

// Continuous multivariate series, row-major T x V.
struct SeriesMatrix {
    std::vector<double> values;
    std::vector<std::string> var_labels;
    int n_time = 0;
    int n_vars = 0;

    double at(int t, int v) const { return values[static_cast<std::size_t>(t) * n_vars + v]; }
    std::vector<double> column(int v) const;
};

// 0/1 observations x variables.
struct BinaryMatrix {
    std::vector<std::uint8_t> bits;  // row-major N x V
    std::vector<std::string> var_labels;
    int n_obs = 0;
    int n_vars = 0;

    std::uint8_t at(int i, int v) const { return bits[static_cast<std::size_t>(i) * n_vars + v]; }
    std::uint8_t& at(int i, int v) { return bits[static_cast<std::size_t>(i) * n_vars + v]; }
};

enum class Domain { time, fourier };

struct DichotomizeConfig {
    Domain domain = Domain::time;
    double drop_fraction = 0.2;
    double active_fraction = 0.2;
    double power_quantile = 0.9;
};

// Linear-interpolation quantile of an unsorted sample, p in [0,1].
double quantile(std::vector<double> sample, double p);

// IQR / median; throws DataError("undefined robust CV") when the median is 0.
double robust_cv(const std::vector<double>& series);

// Drops the floor(drop_fraction*V) least variable columns (undefined robust CV
// sorts below everything), plus every constant column. Returns the retained
// matrix and the dropped labels in sorted order.
std::pair<SeriesMatrix, std::vector<std::string>>
drop_low_variability(const SeriesMatrix& sm, double drop_fraction);

// Per variable, the ceil(active_fraction*T) largest values become 1; ties at
// the cutoff break toward the earlier time index.
BinaryMatrix dichotomize_time(const SeriesMatrix& sm, double active_fraction);

// I(w_k) = |DFT_k|^2 / T at k = 1..floor(T/2); the zero frequency is excluded.
std::vector<double> periodogram(const std::vector<double>& series);
// O(T^2) reference used by tests and the benchmark.
std::vector<double> periodogram_direct(const std::vector<double>& series);

// Per variable, frequencies with power strictly above that variable's
// empirical power_quantile become 1; one observation per Fourier frequency.
BinaryMatrix dichotomize_fourier(const SeriesMatrix& sm, double power_quantile);

BinaryMatrix dichotomize(const SeriesMatrix& sm, const DichotomizeConfig& cfg,
                         std::vector<std::string>* dropped = nullptr);

}  // namespace ct
