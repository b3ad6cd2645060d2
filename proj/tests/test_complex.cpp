#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "ct/complex.hpp"
#include "ct/nullmodel.hpp"

using namespace ct;

namespace {

BinaryMatrix random_matrix(std::mt19937_64& rng, int n_obs, int n_vars, double p = 0.4) {
    BinaryMatrix bm;
    bm.n_obs = n_obs;
    bm.n_vars = n_vars;
    for (int v = 0; v < n_vars; ++v) bm.var_labels.push_back("r" + std::to_string(v));
    bm.bits.resize(static_cast<std::size_t>(n_obs) * n_vars);
    for (auto& b : bm.bits) b = (rng() % 1000) < 1000 * p ? 1 : 0;
    return bm;
}

Simplex active_set(const BinaryMatrix& bm, int row) {
    Simplex s;
    for (int v = 0; v < bm.n_vars; ++v)
        if (bm.at(row, v)) s.push_back(v);
    return s;
}

}  // namespace

TEST_CASE("concurrence counts on fixture II") {
    auto bm = toy_fixture(ToyFixture::II);
    // labels V W X Y Z = 0 1 2 3 4
    CHECK(concurrence_count(bm, {2, 3, 4}) == 1);
    CHECK(concurrence_count(bm, {2, 3}) == 2);
    CHECK(concurrence_count(bm, {2}) == 5);
}

TEST_CASE("concurrence count is zero through an inactive column") {
    BinaryMatrix bm;
    bm.n_obs = 3;
    bm.n_vars = 2;
    bm.var_labels = {"a", "b"};
    bm.bits = {1, 0, 1, 0, 1, 0};
    CHECK(concurrence_count(bm, {0, 1}) == 0);
}

TEST_CASE("fixture IV builds a hollow tetrahedron") {
    auto fc = build_filtered_complex(toy_fixture(ToyFixture::IV), 2);
    CHECK(fc.count_of({0, 1, 2}) == 1);
    CHECK(fc.count_of({0, 1, 3}) == 1);
    CHECK(fc.count_of({0, 2, 3}) == 1);
    CHECK(fc.count_of({1, 2, 3}) == 1);
    CHECK(fc.count_of({0, 1, 2, 3}) == 0);
    CHECK(fc.max_level == 3);  // each vertex sits in three rows
}

TEST_CASE("fixture I frame at level 2") {
    auto fc = build_filtered_complex(toy_fixture(ToyFixture::I), 2);
    auto frame = fc.frame(2);
    // vertices V W X Y Z plus exactly the edges XY XZ YZ
    std::vector<Simplex> expected = {{0}, {1}, {2}, {3}, {4}, {2, 3}, {2, 4}, {3, 4}};
    CHECK(frame == expected);

    SUBCASE("frame nesting") {
        for (std::int64_t f = 1; f < fc.max_level; ++f) {
            auto lo = fc.frame(f), hi = fc.frame(f + 1);
            for (const auto& s : hi)
                CHECK(std::find(lo.begin(), lo.end(), s) != lo.end());
        }
    }
    SUBCASE("frame above max_level is empty") { CHECK(fc.frame(fc.max_level + 1).empty()); }
}

TEST_CASE("all-zero matrix builds an empty complex") {
    BinaryMatrix bm;
    bm.n_obs = 4;
    bm.n_vars = 3;
    bm.var_labels = {"a", "b", "c"};
    bm.bits.assign(12, 0);
    auto fc = build_filtered_complex(bm, 2);
    CHECK(fc.counts.empty());
    CHECK(fc.rows.empty());
}

TEST_CASE("budget guard rejects runaway enumeration") {
    BinaryMatrix bm;
    bm.n_obs = 2;
    bm.n_vars = 40;
    for (int v = 0; v < 40; ++v) bm.var_labels.push_back("w" + std::to_string(v));
    bm.bits.assign(80, 1);
    CHECK_THROWS_WITH_AS(build_filtered_complex(bm, 20, 1000),
                         "dimension cap too generous for these active-set sizes",
                         BudgetError);
}

TEST_CASE("serial and parallel builds agree") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 10; ++rep) {
        auto bm = random_matrix(rng, 20, 8);
        auto a = build_filtered_complex(bm, 3);
        auto b = build_filtered_complex_serial(bm, 3);
        CHECK(a.counts.size() == b.counts.size());
        for (const auto& [s, c] : a.counts) CHECK(b.count_of(s) == c);
        CHECK(a.max_level == b.max_level);
        CHECK(a.rows == b.rows);
    }
}

TEST_CASE("counts are monotone under inclusion") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 10; ++rep) {
        auto bm = random_matrix(rng, 15, 7);
        auto fc = build_filtered_complex(bm, 5);
        for (const auto& [s, c] : fc.counts) {
            if (s.size() < 2) continue;
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex facet;
                for (std::size_t k = 0; k < s.size(); ++k)
                    if (k != i) facet.push_back(s[k]);
                CHECK(fc.count_of(facet) >= c);
            }
        }
    }
}

TEST_CASE("caps agree on shared dimensions") {
    std::mt19937_64 rng(29);
    auto bm = random_matrix(rng, 12, 8);
    auto small = build_filtered_complex(bm, 1);
    auto large = build_filtered_complex(bm, 4);
    for (const auto& [s, c] : small.counts) CHECK(large.count_of(s) == c);
    for (const auto& [s, c] : large.counts)
        if (static_cast<int>(s.size()) <= 3) CHECK(small.count_of(s) == c);
}

TEST_CASE("contingency reconstruction on fixture I") {
    auto bm = toy_fixture(ToyFixture::I);
    auto fc = build_filtered_complex(bm, bm.n_vars - 1);
    CHECK(contingency_from_counts(fc, {3, 4}) == 2);  // rows equal to 00011
    CHECK(contingency_from_counts(fc, {}) == 2);      // two all-zero rows
}

TEST_CASE("contingency of a single observation") {
    BinaryMatrix bm;
    bm.n_obs = 1;
    bm.n_vars = 3;
    bm.var_labels = {"a", "b", "c"};
    bm.bits = {1, 0, 1};
    auto fc = build_filtered_complex(bm, 2);
    CHECK(contingency_from_counts(fc, {0, 2}) == 1);
    CHECK(contingency_from_counts(fc, {0}) == 0);
    CHECK(contingency_from_counts(fc, {0, 1, 2}) == 0);
    CHECK(contingency_from_counts(fc, {}) == 0);
}

TEST_CASE("contingency requires an uncapped complex") {
    auto fc = build_filtered_complex(toy_fixture(ToyFixture::I), 1);
    CHECK_THROWS_WITH_AS(contingency_from_counts(fc, {0}),
                         "full table requires uncapped complex", DataError);
}

TEST_CASE("Moebius reconstruction equals the empirical table") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 25; ++rep) {
        const int n_vars = 3 + static_cast<int>(rng() % 5);
        auto bm = random_matrix(rng, 4 + static_cast<int>(rng() % 12), n_vars);
        auto fc = build_filtered_complex(bm, n_vars - 1);

        std::map<Simplex, std::int64_t> empirical;
        for (int i = 0; i < bm.n_obs; ++i) ++empirical[active_set(bm, i)];

        std::int64_t total = 0;
        for (int pattern = 0; pattern < (1 << n_vars); ++pattern) {
            Simplex a;
            for (int v = 0; v < n_vars; ++v)
                if (pattern & (1 << v)) a.push_back(v);
            const std::int64_t got = contingency_from_counts(fc, a);
            const auto it = empirical.find(a);
            CHECK(got == (it == empirical.end() ? 0 : it->second));
            total += got;
        }
        CHECK(total == bm.n_obs);
    }
}

TEST_CASE("log-linear anchors from the toy fixtures") {
    auto iv = toy_fixture(ToyFixture::IV);
    CHECK(loglinear_interaction(iv, {0, 1, 2, 3}) == doctest::Approx(-0.27).epsilon(0.02));
    for (Simplex triple : {Simplex{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}})
        CHECK(loglinear_interaction(iv, triple) == doctest::Approx(-0.14).epsilon(0.03));
    auto v = toy_fixture(ToyFixture::V);
    CHECK(loglinear_interaction(v, {1, 2, 3}) == doctest::Approx(-0.41).epsilon(0.01));
}

TEST_CASE("log-linear interaction is invariant under permutations") {
    std::mt19937_64 rng(53);
    for (int rep = 0; rep < 10; ++rep) {
        auto bm = random_matrix(rng, 12, 5);
        const Simplex s = {0, 2, 4};
        const double base = [&] {
            try {
                return loglinear_interaction(bm, s);
            } catch (const DataError&) {
                return std::nan("");
            }
        }();
        if (std::isnan(base)) continue;  // constant column in this draw

        // permute observations
        BinaryMatrix shuffled = bm;
        std::vector<int> perm(bm.n_obs);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int i = 0; i < bm.n_obs; ++i)
            for (int c = 0; c < bm.n_vars; ++c) shuffled.at(i, c) = bm.at(perm[i], c);
        CHECK(loglinear_interaction(shuffled, s) == doctest::Approx(base));

        // swap two variables inside S
        BinaryMatrix swapped = bm;
        for (int i = 0; i < bm.n_obs; ++i) std::swap(swapped.at(i, 0), swapped.at(i, 4));
        CHECK(loglinear_interaction(swapped, s) == doctest::Approx(base));
    }
}
