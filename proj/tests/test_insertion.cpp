#include <gtest/gtest.h>

#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "slr/slr.hpp"

using namespace slr;

namespace {

Word digits(const std::string& s) {
    Word w;
    for (char c : s) w.push_back(c - '0');
    return w;
}

}  // namespace

TEST(MixedInsertion, GoldenDisplays) {
    std::ifstream in(SLR_GOLDEN_DIR "/insertion.txt");
    ASSERT_TRUE(in) << "missing golden/insertion.txt";
    std::string line;
    int checked = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        ASSERT_NE(tab, std::string::npos);
        std::string key = line.substr(0, tab), want = line.substr(tab + 1);
        Tableau got = key.rfind("Y ", 0) == 0 ? barely_yamanouchi_tableau(parse_partition(key.substr(2))) : p_mix(digits(key));
        EXPECT_EQ(to_text(got), want) << key;
        ++checked;
    }
    EXPECT_EQ(checked, 6);
}

TEST(MixedInsertion, SingleLetters) {
    EXPECT_EQ(to_text(p_mix({5})), "5");
    EXPECT_TRUE(p_mix({}).empty());
    EXPECT_EQ(to_text(p_mix({2, 1})), "1 2'");
    EXPECT_EQ(to_text(p_mix({1, 2})), "1 2");
}

TEST(MixedInsertion, RecordingTableau) {
    auto r = mixed_insertion(digits("3121432111"));
    EXPECT_EQ(r.p.shape(), r.q.shape());
    EXPECT_TRUE(is_valid(r.p));
    EXPECT_TRUE(is_valid(r.q, true));
    std::vector<int> seen;
    for (const auto& row : r.q.rows)
        for (Letter x : row) {
            EXPECT_FALSE(x.p);
            seen.push_back(x.v);
        }
    std::sort(seen.begin(), seen.end());
    std::vector<int> want(10);
    std::iota(want.begin(), want.end(), 1);
    EXPECT_EQ(seen, want);
}

TEST(MixedInsertion, NewCellGrowsShape) {
    std::mt19937 rng(7);
    for (int it = 0; it < 300; ++it) {
        Tableau t;
        int n = 1 + rng() % 10;
        for (int i = 0; i < n; ++i) {
            auto before = t.row_lengths();
            Cell c = mixed_insert_letter(t, 1 + rng() % 5);
            ASSERT_TRUE(t.has(c));
            auto after = t.row_lengths();
            before.resize(after.size(), 0);
            EXPECT_EQ(after[c.row - 1], before[c.row - 1] + 1);
            EXPECT_EQ(c.col, c.row + after[c.row - 1] - 1);
            EXPECT_TRUE(is_valid(t));
        }
    }
}

TEST(SaganWorley, ReadingWordReinserts) {
    for (int s = 1; s <= 6; ++s)
        for (const auto& lambda : strict_partitions_of(s))
            for (const auto& t : enumerate_tableaux(lambda, TableauConstraint::bound(3))) EXPECT_EQ(p_sw(reading_word(t)), t) << to_text(t);
}

TEST(SaganWorley, InversePermutationShapeMatchesMixed) {
    std::mt19937 rng(3);
    for (int it = 0; it < 500; ++it) {
        int n = 1 + rng() % 9;
        Word perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        LetterWord inv(n);
        for (int i = 0; i < n; ++i) inv[perm[i] - 1] = unprimed(i + 1);
        EXPECT_EQ(p_sw(inv).shape(), p_mix(perm).shape());
    }
}

TEST(SaganWorley, ColumnInsertionIsRecordedPrimed) {
    auto r = sw_insertion(LetterWord{unprimed(2), unprimed(1)});
    EXPECT_EQ(to_text(r.p), "1 2");
    EXPECT_EQ(to_text(r.q), "1 2'");
}

TEST(Duality, MixedAgainstSaganWorley) {
    std::mt19937 rng(11);
    for (int it = 0; it < 1000; ++it) {
        int n = 1 + rng() % 9;
        Word tops(n);
        std::iota(tops.begin(), tops.end(), 1);
        std::shuffle(tops.begin(), tops.end(), rng);
        Biword b;
        for (int i = 0; i < n; ++i) b.push_back({tops[i], unprimed(1 + static_cast<int>(rng() % 5))});
        auto m = mixed_insertion(sorted_by_top(b));
        auto s = sw_insertion(swap_rows(sorted_by_bottom(b)));
        ASSERT_EQ(m.p, s.q);
        ASSERT_EQ(m.q, s.p);
    }
}

TEST(Plactic, RelationsSample) {
    // (a, b, c, d) ranges and the two sides of each relation
    struct Rel {
        bool (*ok)(int, int, int, int);
        Word (*lhs)(int, int, int, int);
        Word (*rhs)(int, int, int, int);
    };
    const Rel rels[] = {
        {[](int a, int b, int c, int d) { return a <= b && b <= c && c < d; }, [](int a, int b, int c, int d) { return Word{a, b, d, c}; }, [](int a, int b, int c, int d) { return Word{a, d, b, c}; }},
        {[](int a, int b, int c, int d) { return a <= b && b < c && c <= d; }, [](int a, int b, int c, int d) { return Word{a, c, d, b}; }, [](int a, int b, int c, int d) { return Word{a, c, b, d}; }},
        {[](int a, int b, int c, int d) { return a <= b && b < c && c < d; }, [](int a, int b, int c, int d) { return Word{d, a, c, b}; }, [](int a, int b, int c, int d) { return Word{a, d, c, b}; }},
        {[](int a, int b, int c, int d) { return a < b && b <= c && c < d; }, [](int a, int b, int c, int d) { return Word{b, a, d, c}; }, [](int a, int b, int c, int d) { return Word{b, d, a, c}; }},
    };
    std::mt19937 rng(5);
    for (const auto& rel : rels)
        for (int a = 1; a <= 4; ++a)
            for (int b = 1; b <= 4; ++b)
                for (int c = 1; c <= 4; ++c)
                    for (int d = 1; d <= 4; ++d) {
                        if (!rel.ok(a, b, c, d)) continue;
                        EXPECT_EQ(p_mix(rel.lhs(a, b, c, d)), p_mix(rel.rhs(a, b, c, d)));
                        Word u, v;
                        for (int i = rng() % 3; i > 0; --i) u.push_back(1 + rng() % 4);
                        for (int i = rng() % 3; i > 0; --i) v.push_back(1 + rng() % 4);
                        Word l = u, r = u;
                        for (int x : rel.lhs(a, b, c, d)) l.push_back(x);
                        for (int x : rel.rhs(a, b, c, d)) r.push_back(x);
                        l.insert(l.end(), v.begin(), v.end());
                        r.insert(r.end(), v.begin(), v.end());
                        EXPECT_EQ(p_mix(l), p_mix(r));
                    }
}

TEST(Rectify, StraightShapeIsIdentity) {
    for (const auto& f : enumerate_standard_skew({4, 2}, {})) {
        Tableau t;
        for (const auto& row : f.rows) {
            t.rows.emplace_back();
            for (int v : row) t.rows.back().push_back(unprimed(v));
        }
        EXPECT_EQ(rectify(f), t);
    }
}

TEST(Rectify, ShapeHasRightSize) {
    for (const auto& f : enumerate_standard_skew({5, 3, 1}, {3, 1})) {
        Tableau r = rectify(f);
        EXPECT_EQ(r.size(), 5);
        EXPECT_TRUE(is_valid(r, true));
    }
}

TEST(Biword, Sorting) {
    Biword b = {{2, unprimed(1)}, {1, unprimed(3)}, {3, unprimed(2)}};
    auto t = sorted_by_top(b);
    EXPECT_EQ(t[0].top, 1);
    auto s = sorted_by_bottom(b);
    EXPECT_EQ(s[0].bottom, unprimed(1));
    auto w = swap_rows(b);
    EXPECT_EQ(w[1].top, 3);
    EXPECT_EQ(w[1].bottom, unprimed(1));
}
