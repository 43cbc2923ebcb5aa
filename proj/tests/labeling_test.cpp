#include <gtest/gtest.h>

#include <random>

#include "diffcolor/diffcolor.hpp"
#include "support/brute_force.hpp"

using namespace diffcolor;

namespace {

Labeling random_labeling(std::mt19937_64& rng, int n) {
    Labeling c;
    c.labels.resize(n);
    std::iota(c.labels.begin(), c.labels.end(), 1);
    std::shuffle(c.labels.begin(), c.labels.end(), rng);
    return c;
}

}  // namespace

TEST(Labeling, ValueOfKnownLabelings) {
    EXPECT_EQ(differential_value(gen_path(4), Labeling{{2, 4, 1, 3}}), 2);

    Graph star(4);
    for (int v = 1; v < 4; ++v) star.add_edge(0, v);
    EXPECT_EQ(differential_value(star, Labeling{{2, 1, 3, 4}}), 1);

    EXPECT_EQ(differential_value(gen_path(1), Labeling{{1}}), 1);
    EXPECT_EQ(differential_value(Graph(3), Labeling{{3, 1, 2}}), 3);
}

TEST(Labeling, ValidityChecks) {
    auto p3 = gen_path(3);
    EXPECT_TRUE(is_valid_labeling(p3, Labeling{{1, 3, 2}}));
    EXPECT_FALSE(is_valid_labeling(p3, Labeling{{1, 2}}));
    EXPECT_FALSE(is_valid_labeling(p3, Labeling{{1, 1, 2}}));
    EXPECT_FALSE(is_valid_labeling(p3, Labeling{{0, 1, 2}}));
    EXPECT_FALSE(is_valid_labeling(p3, Labeling{{1, 2, 4}}));
    EXPECT_FALSE(is_valid_labeling(p3, Labeling{{1, 2, 4}}).violation.empty());
    EXPECT_THROW(differential_value(p3, Labeling{{1, 1, 2}}), ValidationError);
}

TEST(Labeling, EvaluateKeepsLabels) {
    auto e = evaluate(gen_path(4), Labeling{{2, 4, 1, 3}});
    EXPECT_EQ(e.value, 2);
    EXPECT_EQ(e.labeling.labels, (std::vector<int>{2, 4, 1, 3}));
}

TEST(Labeling, ComplementPreservesValue) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 500; ++trial) {
        auto g = naive::random_tree(rng, 2 + trial % 30);
        auto c = random_labeling(rng, g.order());
        auto comp = c.complement();
        EXPECT_TRUE(is_valid_labeling(g, comp));
        EXPECT_EQ(differential_value(g, comp), differential_value(g, c));
        EXPECT_EQ(comp.complement(), c);
    }
}

TEST(Labeling, VertexRenamingPreservesValue) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + trial % 30;
        auto g = naive::random_tree(rng, n);
        auto c = random_labeling(rng, n);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Labeling moved;
        moved.labels.resize(n);
        for (int v = 0; v < n; ++v) moved.labels[perm[v]] = c.labels[v];
        EXPECT_EQ(differential_value(naive::relabel_vertices(g, perm), moved),
                  differential_value(g, c));
    }
}

TEST(Labeling, ValueNeverExceedsHalfOrderOnConnectedGraphs) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + trial % 25;
        auto g = naive::random_tree(rng, n);
        auto c = random_labeling(rng, n);
        int value = differential_value(g, c);
        EXPECT_GE(value, 1);
        EXPECT_LE(value, n / 2);
        EXPECT_EQ(value, naive::naive_value(g, c.labels));
    }
}
