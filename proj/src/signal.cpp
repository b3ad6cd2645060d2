#include "ct/signal.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>

namespace ct {

std::vector<double> SeriesMatrix::column(int v) const {
    std::vector<double> out(n_time);
    for (int t = 0; t < n_time; ++t) out[t] = at(t, v);
    return out;
}

double quantile(std::vector<double> sample, double p) {
    std::sort(sample.begin(), sample.end());
    const std::size_t n = sample.size();
    if (n == 1) return sample[0];
    const double h = p * static_cast<double>(n - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, n - 1);
    const double frac = h - static_cast<double>(lo);
    return sample[lo] + frac * (sample[hi] - sample[lo]);
}

double robust_cv(const std::vector<double>& series) {
    if (series.size() < 2) throw DataError("robust CV needs at least two points");
    const double med = quantile(series, 0.5);
    if (med == 0.0) throw DataError("undefined robust CV");
    const double iqr = quantile(series, 0.75) - quantile(series, 0.25);
    return iqr / med;
}

static bool is_constant(const std::vector<double>& s) {
    return std::adjacent_find(s.begin(), s.end(), std::not_equal_to<>()) == s.end();
}

std::pair<SeriesMatrix, std::vector<std::string>>
drop_low_variability(const SeriesMatrix& sm, double drop_fraction) {
    if (drop_fraction < 0.0 || drop_fraction >= 1.0)
        throw DataError("drop_fraction must lie in [0,1)");
    const int v_count = sm.n_vars;
    std::vector<std::optional<double>> cv(v_count);
    std::vector<bool> constant(v_count, false);
    for (int v = 0; v < v_count; ++v) {
        auto col = sm.column(v);
        constant[v] = is_constant(col);
        try {
            cv[v] = robust_cv(col);
        } catch (const DataError&) {
            cv[v] = std::nullopt;  // median 0: lowest variability of all
        }
    }

    std::vector<int> order(v_count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const bool ua = !cv[a].has_value(), ub = !cv[b].has_value();
        if (ua != ub) return ua;
        if (!ua && *cv[a] != *cv[b]) return *cv[a] < *cv[b];
        return a < b;
    });

    const int quota = static_cast<int>(std::floor(drop_fraction * v_count));
    std::set<int> dropped(order.begin(), order.begin() + quota);
    for (int v = 0; v < v_count; ++v)
        if (constant[v]) dropped.insert(v);
    if (static_cast<int>(dropped.size()) == v_count)
        throw DataError("no variables retained");

    SeriesMatrix out;
    out.n_time = sm.n_time;
    out.n_vars = v_count - static_cast<int>(dropped.size());
    out.values.reserve(static_cast<std::size_t>(out.n_time) * out.n_vars);
    for (int t = 0; t < sm.n_time; ++t)
        for (int v = 0; v < v_count; ++v)
            if (!dropped.count(v)) out.values.push_back(sm.at(t, v));
    for (int v = 0; v < v_count; ++v)
        if (!dropped.count(v)) out.var_labels.push_back(sm.var_labels[v]);

    std::vector<std::string> dropped_labels;
    for (int v : dropped) dropped_labels.push_back(sm.var_labels[v]);
    std::sort(dropped_labels.begin(), dropped_labels.end());
    return {std::move(out), std::move(dropped_labels)};
}

BinaryMatrix dichotomize_time(const SeriesMatrix& sm, double active_fraction) {
    if (active_fraction <= 0.0 || active_fraction >= 1.0)
        throw DataError("active_fraction must lie in (0,1)");
    const int k = static_cast<int>(std::ceil(active_fraction * sm.n_time));
    BinaryMatrix bm;
    bm.var_labels = sm.var_labels;
    bm.n_obs = sm.n_time;
    bm.n_vars = sm.n_vars;
    bm.bits.assign(static_cast<std::size_t>(bm.n_obs) * bm.n_vars, 0);
    #pragma omp parallel for schedule(static)
    for (int v = 0; v < sm.n_vars; ++v) {
        std::vector<int> idx(sm.n_time);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            if (sm.at(a, v) != sm.at(b, v)) return sm.at(a, v) > sm.at(b, v);
            return a < b;  // ties: earlier time point wins
        });
        for (int i = 0; i < k; ++i) bm.at(idx[i], v) = 1;
    }
    return bm;
}

std::vector<double> periodogram(const std::vector<double>& series) {
    const int t_len = static_cast<int>(series.size());
    if (t_len < 2) throw DataError("periodogram needs at least two points");
    std::vector<double> in(series);
    std::vector<fftw_complex> out(static_cast<std::size_t>(t_len / 2 + 1));
    static std::mutex plan_mutex;  // FFTW planning is not thread-safe
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        plan = fftw_plan_dft_r2c_1d(t_len, in.data(), out.data(), FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        fftw_destroy_plan(plan);
    }
    std::vector<double> power(static_cast<std::size_t>(t_len / 2));
    for (int k = 1; k <= t_len / 2; ++k)
        power[k - 1] = (out[k][0] * out[k][0] + out[k][1] * out[k][1]) / t_len;
    return power;
}

std::vector<double> periodogram_direct(const std::vector<double>& series) {
    const int t_len = static_cast<int>(series.size());
    if (t_len < 2) throw DataError("periodogram needs at least two points");
    std::vector<double> power(static_cast<std::size_t>(t_len / 2));
    for (int k = 1; k <= t_len / 2; ++k) {
        const double w = 2.0 * M_PI * k / t_len;
        double re = 0.0, im = 0.0;
        for (int t = 0; t < t_len; ++t) {
            re += series[t] * std::cos(w * t);
            im -= series[t] * std::sin(w * t);
        }
        power[k - 1] = (re * re + im * im) / t_len;
    }
    return power;
}

BinaryMatrix dichotomize_fourier(const SeriesMatrix& sm, double power_quantile) {
    if (power_quantile <= 0.0 || power_quantile >= 1.0)
        throw DataError("power_quantile must lie in (0,1)");
    const int n_freq = sm.n_time / 2;
    BinaryMatrix bm;
    bm.var_labels = sm.var_labels;
    bm.n_obs = n_freq;
    bm.n_vars = sm.n_vars;
    bm.bits.assign(static_cast<std::size_t>(n_freq) * sm.n_vars, 0);
    #pragma omp parallel for schedule(static)
    for (int v = 0; v < sm.n_vars; ++v) {
        const auto power = periodogram(sm.column(v));
        const double threshold = quantile(power, power_quantile);
        for (int k = 0; k < n_freq; ++k)
            if (power[k] > threshold) bm.at(k, v) = 1;
    }
    return bm;
}

BinaryMatrix dichotomize(const SeriesMatrix& sm, const DichotomizeConfig& cfg,
                         std::vector<std::string>* dropped) {
    auto [kept, dropped_labels] = drop_low_variability(sm, cfg.drop_fraction);
    if (dropped) *dropped = dropped_labels;
    return cfg.domain == Domain::time ? dichotomize_time(kept, cfg.active_fraction)
                                      : dichotomize_fourier(kept, cfg.power_quantile);
}

}  // namespace ct
