#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "ct/nullmodel.hpp"
#include "ct/signal.hpp"

using namespace ct;

namespace {

SeriesMatrix from_columns(const std::vector<std::vector<double>>& cols) {
    SeriesMatrix sm;
    sm.n_vars = static_cast<int>(cols.size());
    sm.n_time = static_cast<int>(cols[0].size());
    for (int v = 0; v < sm.n_vars; ++v) sm.var_labels.push_back("c" + std::to_string(v));
    sm.values.resize(static_cast<std::size_t>(sm.n_time) * sm.n_vars);
    for (int t = 0; t < sm.n_time; ++t)
        for (int v = 0; v < sm.n_vars; ++v)
            sm.values[static_cast<std::size_t>(t) * sm.n_vars + v] = cols[v][t];
    return sm;
}

int column_sum(const BinaryMatrix& bm, int v) {
    int n = 0;
    for (int i = 0; i < bm.n_obs; ++i) n += bm.at(i, v);
    return n;
}

}  // namespace

TEST_CASE("robust_cv basics") {
    CHECK(robust_cv({5, 5, 5, 5}) == doctest::Approx(0.0));
    // linear-interpolation quartiles: Q1=1.75, Q3=3.25, median 2.5
    CHECK(robust_cv({1, 2, 3, 4}) == doctest::Approx(1.5 / 2.5));
    CHECK_THROWS_WITH_AS(robust_cv({0, 0, 0, 1}), "undefined robust CV", DataError);
}

TEST_CASE("drop_low_variability quota and constants") {
    std::mt19937_64 rng(11);
    std::vector<std::vector<double>> cols(40, std::vector<double>(50));
    for (int v = 0; v < 40; ++v)
        for (auto& x : cols[v]) x = 1.0 + (v + 1) * 0.1 * (rng() % 1000) / 1000.0;
    auto sm = from_columns(cols);
    auto [kept, dropped] = drop_low_variability(sm, 0.2);
    CHECK(kept.n_vars == 32);
    CHECK(dropped.size() == 8);

    SUBCASE("drop_fraction 0 is a no-op") {
        auto [kept0, dropped0] = drop_low_variability(sm, 0.0);
        CHECK(kept0.n_vars == 40);
        CHECK(dropped0.empty());
    }
}

TEST_CASE("drop_low_variability drops a constant column first") {
    // ranked by hand: column 2 is constant, others vary
    auto sm = from_columns({{1, 9, 2, 8, 3},
                            {4, 6, 5, 7, 3},
                            {2, 2, 2, 2, 2},
                            {1, 5, 9, 2, 7},
                            {3, 8, 1, 6, 4}});
    auto [kept, dropped] = drop_low_variability(sm, 0.2);
    CHECK(dropped == std::vector<std::string>{"c2"});
    CHECK(kept.n_vars == 4);
}

TEST_CASE("drop_low_variability removes constants beyond the quota") {
    auto sm = from_columns({{1, 9, 2}, {7, 7, 7}, {3, 3, 3}});
    auto [kept, dropped] = drop_low_variability(sm, 0.0);
    CHECK(kept.n_vars == 1);
    CHECK(dropped.size() == 2);
}

TEST_CASE("drop_low_variability errors when nothing is left") {
    auto sm = from_columns({{1, 1, 1}, {2, 2, 2}});
    CHECK_THROWS_WITH_AS(drop_low_variability(sm, 0.0).first, "no variables retained",
                         DataError);
}

TEST_CASE("drop_low_variability is permutation-equivariant") {
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<std::vector<double>> cols(6, std::vector<double>(12));
        for (auto& col : cols)
            for (auto& x : col) x = 1.0 + (rng() % 10000) / 1000.0;
        auto sm = from_columns(cols);
        std::vector<int> perm(6);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::vector<double>> shuffled(6);
        for (int v = 0; v < 6; ++v) shuffled[v] = cols[perm[v]];
        auto smp = from_columns(shuffled);
        for (int v = 0; v < 6; ++v) smp.var_labels[v] = sm.var_labels[perm[v]];

        auto dropped_a = drop_low_variability(sm, 0.4).second;
        auto dropped_b = drop_low_variability(smp, 0.4).second;
        CHECK(dropped_a == dropped_b);
    }
}

TEST_CASE("dichotomize_time active counts") {
    auto sm = generate_series(192, 3, 5);
    auto bm = dichotomize_time(sm, 0.2);
    for (int v = 0; v < 3; ++v) CHECK(column_sum(bm, v) == 39);  // ceil(38.4)

    SUBCASE("monotone series activates the tail") {
        std::vector<double> inc(10);
        std::iota(inc.begin(), inc.end(), 0.0);
        auto bm2 = dichotomize_time(from_columns({inc}), 0.2);
        for (int t = 0; t < 10; ++t) CHECK(int(bm2.at(t, 0)) == (t >= 8 ? 1 : 0));
    }
    SUBCASE("tie at the cutoff goes to the earlier index") {
        auto bm3 = dichotomize_time(from_columns({{3, 1, 3, 0}}), 0.25);
        CHECK(int(bm3.at(0, 0)) == 1);
        CHECK(int(bm3.at(2, 0)) == 0);
        CHECK(column_sum(bm3, 0) == 1);
    }
}

TEST_CASE("dichotomize_time column sums equal ceil(fraction*T) on random input") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 20; ++rep) {
        const int t_len = 5 + static_cast<int>(rng() % 60);
        const double frac = 0.05 + 0.9 * (rng() % 1000) / 1000.0;
        auto sm = generate_series(t_len, 4, rng());
        auto bm = dichotomize_time(sm, frac);
        const int k = static_cast<int>(std::ceil(frac * t_len));
        for (int v = 0; v < 4; ++v) CHECK(column_sum(bm, v) == k);
    }
}

TEST_CASE("periodogram single mode and constants") {
    std::vector<double> constant(32, 4.2);
    for (double p : periodogram(constant)) CHECK(p == doctest::Approx(0.0).epsilon(1e-12));

    std::vector<double> cosine(16);
    for (int t = 0; t < 16; ++t) cosine[t] = std::cos(2.0 * M_PI * 3 * t / 16.0);
    auto power = periodogram(cosine);
    REQUIRE(power.size() == 8);
    for (int k = 1; k <= 8; ++k) {
        if (k == 3)
            CHECK(power[k - 1] > 1.0);
        else
            CHECK(std::abs(power[k - 1]) < 1e-9);
    }
}

TEST_CASE("periodogram matches the direct DFT oracle") {
    std::mt19937_64 rng(64);
    std::vector<double> noise(64);
    for (auto& x : noise) x = (rng() % 10000) / 5000.0 - 1.0;
    const auto fast = periodogram(noise);
    const auto direct = periodogram_direct(noise);
    REQUIRE(fast.size() == direct.size());
    for (std::size_t k = 0; k < fast.size(); ++k)
        CHECK(fast[k] == doctest::Approx(direct[k]).epsilon(1e-9));
}

TEST_CASE("periodogram total is invariant under adding a constant") {
    std::mt19937_64 rng(99);
    std::vector<double> x(50), shifted(50);
    for (int i = 0; i < 50; ++i) {
        x[i] = (rng() % 1000) / 100.0;
        shifted[i] = x[i] + 123.456;
    }
    const auto a = periodogram(x), b = periodogram(shifted);
    const double ta = std::accumulate(a.begin(), a.end(), 0.0);
    const double tb = std::accumulate(b.begin(), b.end(), 0.0);
    CHECK(ta == doctest::Approx(tb).epsilon(1e-9));
}

TEST_CASE("dichotomize_fourier marks only spike frequencies") {
    // T=42 gives 21 frequencies; at quantile 0.9 exactly two lie above the
    // interpolated threshold when the spikes dominate.
    const int t_len = 42;
    std::mt19937_64 rng(7);
    std::vector<double> x(t_len);
    for (int t = 0; t < t_len; ++t)
        x[t] = 10.0 * std::sin(2.0 * M_PI * 5 * t / t_len) +
               8.0 * std::sin(2.0 * M_PI * 9 * t / t_len) +
               0.01 * ((rng() % 1000) / 1000.0 - 0.5);
    auto bm = dichotomize_fourier(from_columns({x}), 0.9);
    REQUIRE(bm.n_obs == 21);
    CHECK(column_sum(bm, 0) == 2);
    CHECK(int(bm.at(4, 0)) == 1);  // k=5 -> index 4
    CHECK(int(bm.at(8, 0)) == 1);  // k=9 -> index 8
}

TEST_CASE("dichotomize_fourier on a constant series has no active frequencies") {
    std::vector<double> constant(40, 1.0);
    auto bm = dichotomize_fourier(from_columns({constant}), 0.9);
    CHECK(column_sum(bm, 0) == 0);
}

TEST_CASE("dichotomize_fourier active count with distinct powers") {
    // with m frequencies and distinct powers, exactly m-1-floor((m-1)q)
    // values lie strictly above the interpolated quantile
    std::mt19937_64 rng(123);
    for (int rep = 0; rep < 20; ++rep) {
        const int t_len = 20 + 2 * static_cast<int>(rng() % 40);
        const int m = t_len / 2;
        auto sm = generate_series(t_len, 1, rng());
        const double q = 0.9;
        auto bm = dichotomize_fourier(sm, q);
        const double h = q * (m - 1);
        const int expected = m - 1 - static_cast<int>(std::floor(h));
        CHECK(column_sum(bm, 0) == expected);
    }
}

TEST_CASE("dichotomize_fourier observation count is floor(T/2)") {
    auto sm = generate_series(192, 2, 3);
    auto bm = dichotomize_fourier(sm, 0.9);
    CHECK(bm.n_obs == 96);
}
