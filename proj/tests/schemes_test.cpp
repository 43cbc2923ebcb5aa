#include <gtest/gtest.h>

#include <random>
#include <set>

#include "diffcolor/diffcolor.hpp"
#include "support/brute_force.hpp"

using namespace diffcolor;

namespace {

std::set<int> labels_of(const SchemeResult& r, const std::vector<Vertex>& vs) {
    std::set<int> out;
    for (Vertex v : vs) out.insert(r.labeling.labeling[v]);
    return out;
}

void expect_bijection(const Graph& g, const SchemeResult& r) {
    EXPECT_TRUE(is_valid_labeling(g, r.labeling.labeling));
    EXPECT_EQ(r.value(), naive::naive_value(g, r.labeling.labeling.labels));
    EXPECT_GE(r.value(), r.guarantee);
}

}  // namespace

TEST(RegularScheme, EvenSpineExample) {
    auto gen = gen_regular_caterpillar(2, 2);
    auto r = label_regular_caterpillar(gen.shape);
    const auto& c = r.labeling.labeling;
    EXPECT_EQ(c[gen.shape.spine[0]], 1);
    EXPECT_EQ(c[gen.shape.spine[1]], 6);
    EXPECT_EQ(labels_of(r, gen.shape.legs[0]), (std::set<int>{4, 5}));
    EXPECT_EQ(labels_of(r, gen.shape.legs[1]), (std::set<int>{2, 3}));
    EXPECT_EQ(r.value(), 3);
    EXPECT_EQ(r.optimal, Optimality::proved);
    EXPECT_EQ(r.scheme, "regular-cat");
}

TEST(RegularScheme, MatchesBoundOnAllSmallInstances) {
    for (int s = 1; s <= 6; ++s) {
        for (int delta = 1; delta <= 4; ++delta) {
            auto gen = gen_regular_caterpillar(s, delta);
            auto r = label_regular_caterpillar(gen.shape);
            expect_bijection(gen.graph, r);
            EXPECT_EQ(r.value(), regular_caterpillar_bound(s, delta)) << s << ' ' << delta;
        }
    }
}

TEST(RegularScheme, MatchesBoundOnLargerInstances) {
    for (int s = 1; s <= 30; ++s)
        for (int delta = 1; delta <= 12; ++delta) {
            auto gen = gen_regular_caterpillar(s, delta);
            EXPECT_EQ(label_regular_caterpillar(gen.shape).value(),
                      regular_caterpillar_bound(s, delta));
        }
}

TEST(RegularScheme, RejectsIrregularShape) {
    auto gen = gen_caterpillar(std::vector<int>{1, 2, 1});
    EXPECT_THROW(label_regular_caterpillar(gen.shape), ValidationError);
}

TEST(SpiderScheme, AllEvenExamples) {
    auto two = gen_spider(std::vector<int>{2, 2});
    auto r = label_spider_all_even(two.shape);
    EXPECT_EQ(r.labeling.labeling[two.shape.center], 1);
    EXPECT_EQ(labels_of(r, {two.shape.paths[0][1], two.shape.paths[1][1]}), (std::set<int>{2, 3}));
    EXPECT_EQ(labels_of(r, {two.shape.paths[0][0], two.shape.paths[1][0]}), (std::set<int>{4, 5}));
    EXPECT_EQ(r.value(), 2);

    auto three = gen_spider(std::vector<int>{2, 2, 2});
    auto r3 = label_spider_all_even(three.shape);
    std::vector<Vertex> level1, level2;
    for (const auto& p : three.shape.paths) {
        level1.push_back(p[0]);
        level2.push_back(p[1]);
    }
    EXPECT_EQ(r3.labeling.labeling[three.shape.center], 1);
    EXPECT_EQ(labels_of(r3, level2), (std::set<int>{2, 3, 4}));
    EXPECT_EQ(labels_of(r3, level1), (std::set<int>{5, 6, 7}));
    EXPECT_EQ(r3.value(), 3);

    auto p3 = gen_spider(std::vector<int>{2});
    auto r1 = label_spider_all_even(p3.shape);
    EXPECT_EQ(r1.labeling.labeling.labels, (std::vector<int>{1, 3, 2}));
    EXPECT_EQ(r1.value(), 1);
}

TEST(SpiderScheme, AllOddExamples) {
    auto k13 = gen_spider(std::vector<int>{1, 1, 1});
    auto r = label_spider_all_odd(k13.shape);
    EXPECT_EQ(r.labeling.labeling[k13.shape.center], 2);
    EXPECT_EQ(r.value(), 1);

    auto gen = gen_spider(std::vector<int>{3, 3});
    auto r2 = label_spider_all_odd(gen.shape);
    const auto& c = r2.labeling.labeling;
    EXPECT_EQ(c[gen.shape.center], 4);
    auto along = [&](int path) {
        std::vector<int> out;
        for (Vertex v : gen.shape.paths[path]) out.push_back(c[v]);
        return out;
    };
    EXPECT_EQ(along(0), (std::vector<int>{7, 3, 6}));
    EXPECT_EQ(along(1), (std::vector<int>{1, 5, 2}));
    EXPECT_EQ(r2.value(), 3);
    EXPECT_EQ(r2.optimal, Optimality::proved);
}

TEST(SpiderScheme, ParityPreconditions) {
    auto mixed = gen_spider(std::vector<int>{2, 3});
    EXPECT_THROW(label_spider_all_even(mixed.shape), ValidationError);
    EXPECT_THROW(label_spider_all_odd(mixed.shape), ValidationError);
}

TEST(SpiderScheme, ExhaustiveSmallFamilies) {
    int checked = 0;
    for (int p = 1; p <= 4; ++p) {
        for (int parity = 0; parity < 2; ++parity) {
            std::vector<int> prefix;
            naive::multisets(p, 1, 5, prefix, [&](const std::vector<int>& sorted_lengths) {
                for (int len : sorted_lengths)
                    if (len % 2 != parity) return;
                // Scheme must not depend on input order.
                auto lengths = sorted_lengths;
                std::reverse(lengths.begin(), lengths.end());
                auto gen = gen_spider(lengths);
                const int n_even = gen.shape.even_level_count();
                auto r = parity == 0 ? label_spider_all_even(gen.shape)
                                     : label_spider_all_odd(gen.shape);
                expect_bijection(gen.graph, r);
                EXPECT_EQ(r.value(), parity == 0 ? n_even : n_even + 1);
                EXPECT_EQ(r.guarantee, r.value());
                ++checked;
            });
        }
    }
    EXPECT_EQ(checked, 48);
}

TEST(GeneralScheme, WorkedExamples) {
    auto four = gen_caterpillar(std::vector<int>{1, 1, 1, 1});
    auto r4 = label_general_caterpillar(four.shape);
    EXPECT_EQ(r4.labeling.labeling.labels, (std::vector<int>{2, 7, 1, 4, 6, 3, 5, 8}));
    EXPECT_EQ(r4.value(), 3);
    EXPECT_EQ(r4.guarantee, 1);

    auto p5 = gen_caterpillar(std::vector<int>{1, 0, 1});
    auto r5 = label_general_caterpillar(p5.shape);
    EXPECT_EQ(r5.labeling.labeling.labels, (std::vector<int>{2, 5, 3, 4, 1}));
    EXPECT_EQ(r5.value(), 2);

    auto two = gen_caterpillar(std::vector<int>{2, 1});
    auto r2 = label_general_caterpillar(two.shape);
    const auto& c = r2.labeling.labeling;
    EXPECT_EQ(c[two.shape.spine[0]], 2);
    EXPECT_EQ(c[two.shape.spine[1]], 3);
    EXPECT_EQ(labels_of(r2, two.shape.legs[0]), (std::set<int>{4, 5}));
    EXPECT_EQ(labels_of(r2, two.shape.legs[1]), (std::set<int>{1}));
    EXPECT_EQ(r2.value(), 1);
    EXPECT_EQ(r2.optimal, Optimality::not_proved);
    EXPECT_EQ(std::string(to_string(r2.optimal)), "unknown");
}

TEST(GeneralScheme, MarkingWorkedExample) {
    auto four = gen_caterpillar(std::vector<int>{1, 1, 1, 1});
    auto st = mark_general_caterpillar(four.shape);
    EXPECT_EQ(st.middle, four.shape.spine[3]);
    EXPECT_EQ(st.middle_position, 3);

    auto p5 = gen_caterpillar(std::vector<int>{1, 0, 1});
    auto st5 = mark_general_caterpillar(p5.shape);
    EXPECT_NE(st5.pseudo_leg_owner[p5.shape.spine[1]], -1);
}

TEST(GeneralScheme, MarkingInvariantsOnAllSmallCaterpillars) {
    int checked = 0;
    for (int s = 1; s <= 6; ++s) {
        std::vector<int> legs(s, 0);
        while (true) {
            if (s == 1 || (legs.front() >= 1 && legs.back() >= 1)) {
                auto gen = gen_caterpillar(legs);
                const int n = gen.graph.order();
                if (n >= 2) {
                    auto st = mark_general_caterpillar(gen.shape);
                    ASSERT_EQ(static_cast<int>(st.role.size()), n);
                    EXPECT_EQ(st.count(Role::middle), 1);
                    int total = 0;
                    for (int r = 0; r < role_count; ++r) total += st.count(static_cast<Role>(r));
                    EXPECT_EQ(total, n);
                    EXPECT_LT(2 * st.low_total(), n);
                    EXPECT_LE(2 * st.high_total(), n);
                    EXPECT_EQ(st.low_total() + st.count(Role::middle_low_leg) + 1, (n + 1) / 2);
                    EXPECT_EQ(st.high_total() + st.count(Role::middle_high_leg), n / 2);
                    auto r = label_general_caterpillar(gen.shape);
                    expect_bijection(gen.graph, r);
                    EXPECT_EQ(r.guarantee, (n + 1) / 2 - gen.shape.max_legs() - 2);
                    ++checked;
                }
            }
            int i = 0;
            while (i < s && ++legs[i] == 5) legs[i++] = 0;
            if (i == s) break;
        }
    }
    EXPECT_GT(checked, 1000);
}

TEST(GeneralScheme, RandomCaterpillarsMeetGuarantee) {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 1000; ++trial) {
        auto gen = gen_random_caterpillar(rng, 30, 8);
        auto r = label_general_caterpillar(gen.shape);
        expect_bijection(gen.graph, r);
        const int n = gen.graph.order();
        EXPECT_GE(r.value(), (n + 1) / 2 - gen.shape.max_legs() - 2);
        EXPECT_LE(r.value(), n / 2);
    }
}

TEST(GeneralScheme, Deterministic) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        auto gen = gen_random_caterpillar(rng, 20, 6);
        EXPECT_EQ(label_general_caterpillar(gen.shape).labeling.labeling,
                  label_general_caterpillar(gen.shape).labeling.labeling);
    }
}

TEST(GeneralScheme, RejectsNonCanonicalShape) {
    CaterpillarShape shape;
    shape.leg_counts = {0, 1};
    shape.spine = {0, 1};
    shape.legs = {{}, {2}};
    EXPECT_THROW(label_general_caterpillar(shape), ValidationError);
}

TEST(MillerPritikin, KnownValues) {
    EXPECT_EQ(mp_value(gen_path(5)), 2);
    EXPECT_EQ(mp_value(gen_regular_caterpillar(3, 2).graph), 4);
    EXPECT_EQ(mp_value(gen_spider(std::vector<int>{3, 3}).graph), 3);
    EXPECT_EQ(mp_value(gen_alternating_caterpillar(10, 10).graph), 21);

    Graph c4(4);
    for (int i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
    EXPECT_THROW(mp_value(c4), ValidationError);
}

TEST(MillerPritikin, EqualsRegularCaterpillarBound) {
    for (int s = 1; s <= 100; ++s)
        for (int delta = 1; delta <= 50; ++delta)
            ASSERT_EQ(mp_value(gen_regular_caterpillar(s, delta).graph),
                      regular_caterpillar_bound(s, delta))
                << s << ' ' << delta;
}
