#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "influmax/cascade.hpp"

using namespace influmax;

namespace {

std::vector<NodeId> seeds(std::initializer_list<NodeId> ids) { return {ids}; }

// All non-empty subsets of {0..n-1} as sorted vectors.
std::vector<std::vector<NodeId>> all_subsets(NodeId n) {
    std::vector<std::vector<NodeId>> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<NodeId> s;
        for (NodeId v = 0; v < n; ++v) {
            if (mask & (1u << v)) s.push_back(v);
        }
        out.push_back(std::move(s));
    }
    return out;
}

bool subset_of(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TEST_CASE("exact_sigma on pinned instances") {
    // 0 -> 1 with p = 0.5: 0.5*2 + 0.5*1
    Graph g = testutil::path_graph({0.5});
    CHECK(exact_sigma(g, seeds({0})) == doctest::Approx(1.5).epsilon(1e-12));

    // diamond, all p = 0.5: 1 + 0.5 + 0.5 + (1 - (1 - 0.25)^2)
    Graph d = testutil::diamond_graph(0.5);
    CHECK(exact_sigma(d, seeds({0})) == doctest::Approx(2.4375).epsilon(1e-12));

    // seeding everything is exactly n
    CHECK(exact_sigma(d, seeds({0, 1, 2, 3})) == doctest::Approx(4.0));

    SUBCASE("size guard") {
        EdgeList edges;
        for (NodeId i = 0; i < 26; ++i) edges.push_back({i, i + 1, 0.5});
        Graph big = build_graph(edges, true);
        CHECK_THROWS_AS(exact_sigma(big, seeds({0})), SizeError);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(exact_sigma(g, std::vector<NodeId>{}), ValidationError);
        CHECK_THROWS_AS(exact_sigma(g, seeds({9})), ValidationError);
    }
}

TEST_CASE("exact_sigma is monotone and submodular on tiny graphs") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = testutil::random_digraph(5, 0.4, rng, 18);
        auto subsets = all_subsets(5);
        std::vector<double> sigma(subsets.size());
        for (std::size_t i = 0; i < subsets.size(); ++i) sigma[i] = exact_sigma(g, subsets[i]);

        for (std::size_t i = 0; i < subsets.size(); ++i) {
            for (std::size_t j = 0; j < subsets.size(); ++j) {
                if (!subset_of(subsets[i], subsets[j])) continue;
                CHECK(sigma[i] <= sigma[j] + 1e-9);  // monotone
                for (NodeId u = 0; u < 5; ++u) {
                    if (std::binary_search(subsets[j].begin(), subsets[j].end(), u)) continue;
                    auto with_u = [&](const std::vector<NodeId>& s) {
                        std::vector<NodeId> t = s;
                        t.insert(std::lower_bound(t.begin(), t.end(), u), u);
                        return exact_sigma(g, t);
                    };
                    const double gain_small = with_u(subsets[i]) - sigma[i];
                    const double gain_large = with_u(subsets[j]) - sigma[j];
                    CHECK(gain_small >= gain_large - 1e-9);  // diminishing returns
                }
            }
        }
    }
}

TEST_CASE("exact_sigma_icn on pinned instances") {
    Graph g = testutil::path_graph({1.0});  // 0 -> 1, p = 1

    // by case enumeration: E[pos] = q + q^2, E[neg] = 2(1-q) + q(1-q)
    auto [pos, neg] = exact_sigma_icn(g, seeds({0}), 0.9);
    CHECK(pos == doctest::Approx(1.71).epsilon(1e-12));
    CHECK(neg == doctest::Approx(0.29).epsilon(1e-12));

    SUBCASE("q = 1 reduces to plain IC") {
        auto [p1, n1] = exact_sigma_icn(g, seeds({0}), 1.0);
        CHECK(p1 == doctest::Approx(exact_sigma(g, seeds({0}))));
        CHECK(n1 == doctest::Approx(0.0));
    }
    SUBCASE("pos + neg equals total activation expectation") {
        std::mt19937_64 rng(17);
        for (int t = 0; t < 8; ++t) {
            Graph r = testutil::random_digraph(4, 0.5, rng, 10);
            auto [p, ng] = exact_sigma_icn(r, seeds({0}), 0.6);
            CHECK(p + ng == doctest::Approx(exact_sigma(r, seeds({0}))).epsilon(1e-9));
        }
    }
}

TEST_CASE("simulate_ic basics") {
    Graph lone = build_graph({}, true, 1);
    CascadeOutcome out = simulate_ic(lone, seeds({0}), RunStream::for_run(1, 0));
    CHECK(out.activated == std::vector<NodeId>{0});

    Graph certain = testutil::path_graph({1.0});
    out = simulate_ic(certain, seeds({0}), RunStream::for_run(1, 0));
    CHECK(out.activated == std::vector<NodeId>{0, 1});

    SUBCASE("deterministic given the stream; seeds always activate") {
        Graph d = testutil::diamond_graph(0.5);
        for (int j = 0; j < 20; ++j) {
            auto a = simulate_ic(d, seeds({0}), RunStream::for_run(5, j));
            auto b = simulate_ic(d, seeds({0}), RunStream::for_run(5, j));
            CHECK(a.activated == b.activated);
            CHECK(subset_of(seeds({0}), a.activated));
            CHECK(a.activated.size() <= d.node_count());
        }
    }
    SUBCASE("seed out of range") {
        CHECK_THROWS_AS(simulate_ic(certain, seeds({7}), RunStream::for_run(1, 0)),
                        ValidationError);
    }
}

TEST_CASE("estimate_spread matches enumeration") {
    Graph lone = build_graph({}, true, 1);
    SpreadEstimate e = estimate_spread(lone, seeds({0}), DiffusionModel::ic(), 100, 3);
    CHECK(e.mean == 1.0);
    CHECK(e.std_error == 0.0);

    Graph g = testutil::path_graph({0.5});
    e = estimate_spread(g, seeds({0}), DiffusionModel::ic(), 10000, 11);
    CHECK(std::fabs(e.mean - 1.5) <= 3.0 * e.std_error);

    Graph d = testutil::diamond_graph(0.5);
    e = estimate_spread(d, seeds({0}), DiffusionModel::ic(), 10000, 12);
    CHECK(std::fabs(e.mean - 2.4375) <= 3.0 * e.std_error);

    SUBCASE("mean within 4 std errors of exact on random oracle instances") {
        std::mt19937_64 rng(23);
        for (int t = 0; t < 6; ++t) {
            Graph r = testutil::random_digraph(6, 0.35, rng, 20);
            const double exact = exact_sigma(r, seeds({0, 1}));
            SpreadEstimate est =
                estimate_spread(r, seeds({0, 1}), DiffusionModel::ic(), 10000, 100 + t);
            CHECK(std::fabs(est.mean - exact) <= std::max(4.0 * est.std_error, 1e-9));
        }
    }

    SUBCASE("reproducible") {
        SpreadEstimate a = estimate_spread(d, seeds({0}), DiffusionModel::ic(), 5000, 7);
        SpreadEstimate b = estimate_spread(d, seeds({0}), DiffusionModel::ic(), 5000, 7);
        CHECK(a.mean == b.mean);
        CHECK(a.std_error == b.std_error);
    }
}

TEST_CASE("simulate_icn semantics") {
    Graph lone = build_graph({}, true, 1);
    SpreadEstimate e = estimate_spread(lone, seeds({0}), DiffusionModel::icn(0.9), 10000, 19);
    CHECK(std::fabs(e.mean_positive - 0.9) <= 3.0 * e.std_error_positive);
    CHECK(std::fabs(e.mean_negative - 0.1) <= 3.0 * e.std_error_negative);

    Graph g = testutil::path_graph({1.0});
    e = estimate_spread(g, seeds({0}), DiffusionModel::icn(0.9), 10000, 20);
    CHECK(std::fabs(e.mean_positive - 1.71) <= 3.0 * e.std_error_positive);
    CHECK(std::fabs(e.mean_negative - 0.29) <= 3.0 * e.std_error_negative);
    CHECK(e.mean == doctest::Approx(2.0));  // p = 1 activates both always

    SUBCASE("q = 1 never yields negatives") {
        std::mt19937_64 rng(31);
        Graph r = testutil::random_digraph(8, 0.3, rng, 25);
        for (int j = 0; j < 200; ++j) {
            CascadeOutcome out = simulate_icn(r, seeds({0, 3}), 1.0, RunStream::for_run(44, j));
            CHECK(out.negative.empty());
            CHECK(out.positive == out.activated);
        }
    }

    SUBCASE("positive and negative partition activated") {
        std::mt19937_64 rng(37);
        Graph r = testutil::random_digraph(8, 0.3, rng, 25);
        for (int j = 0; j < 100; ++j) {
            CascadeOutcome out = simulate_icn(r, seeds({0}), 0.6, RunStream::for_run(45, j));
            std::vector<NodeId> merged = out.positive;
            merged.insert(merged.end(), out.negative.begin(), out.negative.end());
            std::sort(merged.begin(), merged.end());
            CHECK(merged == out.activated);
            CHECK(subset_of(seeds({0}), out.activated));
        }
    }

    SUBCASE("q validated") {
        CHECK_THROWS_AS(simulate_icn(g, seeds({0}), 1.5, RunStream::for_run(1, 0)),
                        ValidationError);
    }

    SUBCASE("icn estimate matches exact oracle") {
        std::mt19937_64 rng(41);
        for (int t = 0; t < 4; ++t) {
            Graph r = testutil::random_digraph(5, 0.4, rng, 12);
            auto [pos, neg] = exact_sigma_icn(r, seeds({0}), 0.7);
            SpreadEstimate est =
                estimate_spread(r, seeds({0}), DiffusionModel::icn(0.7), 10000, 200 + t);
            CHECK(std::fabs(est.mean_positive - pos) <=
                  std::max(4.0 * est.std_error_positive, 1e-9));
            CHECK(std::fabs(est.mean_negative - neg) <=
                  std::max(4.0 * est.std_error_negative, 1e-9));
        }
    }
}

TEST_CASE("icn with q=1 couples to ic run by run") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 10; ++t) {
        Graph r = testutil::random_digraph(10, 0.25, rng, 60);
        for (std::uint64_t j = 0; j < 100; ++j) {
            const RunStream stream = RunStream::for_run(900 + t, j);
            CascadeOutcome ic = simulate_ic(r, seeds({0, 4}), stream);
            CascadeOutcome icn = simulate_icn(r, seeds({0, 4}), 1.0, stream);
            CHECK(icn.positive == ic.activated);
        }
    }
}
