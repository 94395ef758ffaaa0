#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "slr/slr.hpp"

using namespace slr;

namespace {

Word digits(const std::string& s) {
    Word w;
    for (char c : s) w.push_back(c - '0');
    return w;
}

void for_each_word(int len, int maxv, const std::function<void(const Word&)>& f) {
    Word w(len, 1);
    while (true) {
        f(w);
        int i = len - 1;
        while (i >= 0 && w[i] == maxv) w[i--] = 1;
        if (i < 0) return;
        ++w[i];
    }
}

}  // namespace

TEST(Lattice, Predicates) {
    EXPECT_TRUE(is_yamanouchi(digits("214321")));
    EXPECT_TRUE(is_shifted_lattice(digits("214321")));
    EXPECT_FALSE(is_yamanouchi(digits("121324")));
    EXPECT_FALSE(is_shifted_lattice(digits("121324")));
    // Yamanouchi but the 1s outrun the 2s by two
    EXPECT_TRUE(is_yamanouchi(digits("211")));
    EXPECT_FALSE(is_shifted_lattice(digits("211")));
    EXPECT_TRUE(is_shifted_lattice({}));
    EXPECT_EQ(word_content(digits("3121432111")), (ContentVector{5, 2, 2, 1}));
}

TEST(Lattice, ShiftedLatticeImpliesYamanouchi) {
    for (int len = 1; len <= 7; ++len)
        for_each_word(len, 4, [](const Word& w) {
            if (is_shifted_lattice(w)) {
                EXPECT_TRUE(is_yamanouchi(w));
            }
        });
}

TEST(Shrinking, DecomposesIntoDescendingRuns) {
    auto runs = shrinking_decomposition(digits("8321547632154321"));
    ASSERT_EQ(runs.size(), 3u);
    EXPECT_EQ(runs[0].top, 8);
    EXPECT_EQ(runs[0].bottom, 1);
    EXPECT_EQ(runs[1].top, 5);
    EXPECT_EQ(runs[2].top, 3);
    EXPECT_EQ(runs[2].bottom, 1);
    std::size_t total = 0;
    for (const auto& r : runs) total += r.positions.size();
    EXPECT_EQ(total, 16u);
}

TEST(Shrinking, RunsPartitionPositions) {
    for (int len = 1; len <= 6; ++len)
        for_each_word(len, 4, [](const Word& w) {
            std::vector<int> seen;
            for (const auto& r : shrinking_decomposition(w)) {
                EXPECT_EQ(static_cast<int>(r.positions.size()), r.top - r.bottom + 1);
                for (std::size_t i = 0; i < r.positions.size(); ++i) {
                    EXPECT_EQ(w[r.positions[i]], r.top - static_cast<int>(i));
                    seen.push_back(r.positions[i]);
                }
            }
            std::sort(seen.begin(), seen.end());
            EXPECT_EQ(seen.size(), w.size());
            EXPECT_TRUE(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
        });
}

TEST(Content, RecoversPartition) {
    EXPECT_EQ(partition_from_content({2, 2, 1, 1}), (StrictPartition{4, 2}));
    EXPECT_EQ(partition_from_content({1}), (StrictPartition{1}));
    EXPECT_FALSE(partition_from_content({1, 2}).has_value());
    EXPECT_FALSE(partition_from_content({2, 2}).has_value());  // would need ν = (2,2)
    for (int s = 0; s <= 9; ++s)
        for (const auto& nu : strict_partitions_of(s))
            EXPECT_EQ(partition_from_content(word_content(barely_yamanouchi_sequence(nu))), nu);
}

TEST(BarelyYamanouchi, Sequence) {
    EXPECT_EQ(barely_yamanouchi_sequence({4, 2}), digits("214321"));
    EXPECT_EQ(barely_yamanouchi_sequence({6, 3}), digits("321654321"));
    EXPECT_TRUE(barely_yamanouchi_sequence({}).empty());
    EXPECT_EQ(to_text(barely_yamanouchi_tableau({4, 2})), "1 1 2' 4' / 2 3'");
}

TEST(BarelyYamanouchi, FastMatchesInsertion) {
    for (int len = 1; len <= 7; ++len)
        for_each_word(len, 4, [](const Word& w) { EXPECT_EQ(is_barely_yamanouchi(w), is_barely_yamanouchi_slow(w)) << ::testing::PrintToString(w); });
    EXPECT_TRUE(is_barely_yamanouchi(digits("214321")));
    EXPECT_FALSE(is_barely_yamanouchi(digits("121324")));
}

TEST(Interlacing, Examples) {
    EXPECT_TRUE(is_interlacing(digits("214321")));
    EXPECT_TRUE(is_interlacing(digits("1")));
    EXPECT_FALSE(is_interlacing(digits("11")));   // the two 1s have no 2 between them
    EXPECT_FALSE(is_interlacing(digits("1212")));  // second 2 has no 3 before it
}

TEST(Hooks, HookWords) {
    EXPECT_TRUE(is_hook_word(digits("432111")));
    EXPECT_TRUE(is_hook_word(digits("1234")));
    EXPECT_TRUE(is_hook_word(digits("4321")));
    EXPECT_FALSE(is_hook_word(digits("2132")));
    EXPECT_FALSE(is_hook_word(digits("3312")));
}

TEST(Hooks, WorkedExamples) {
    Word w = digits("3121432111");
    EXPECT_EQ(hook_length_bruteforce(w, 1), 6);
    EXPECT_EQ(hook_length_bruteforce(w, 2), 10);
    EXPECT_EQ(hook_length_bruteforce(w, 3), 13);
    EXPECT_EQ(hook_lengths_by_shape(w), (std::vector<int>{6, 10, 13}));
    Word v = digits("121324");
    EXPECT_EQ(hook_length_bruteforce(v, 1), 4);
    EXPECT_EQ(hook_length_bruteforce(v, 2), 7);
    EXPECT_EQ(hook_lengths_by_shape(v), (std::vector<int>{4, 7}));
}

TEST(Hooks, LiteralDefinitionExceedsShapeFormula) {
    // Two hooks sharing one letter cover 8 positions, the shape (4,2,1) gives 7.
    Word w = digits("4123121");
    EXPECT_EQ(p_mix(w).shape(), (StrictPartition{4, 2, 1}));
    EXPECT_EQ(hook_lengths_by_shape(w), (std::vector<int>{4, 7, 10}));
    EXPECT_EQ(hook_length_bruteforce(w, 2), 8);
}

TEST(Hooks, SingleHookAlwaysMatches) {
    for (int len = 1; len <= 7; ++len)
        for_each_word(len, 4, [](const Word& w) { EXPECT_EQ(hook_length_bruteforce(w, 1), p_mix(w).shape().part(1)); });
}

TEST(Hooks, CapEnforced) {
    Word w(kHookBruteforceCap + 1, 1);
    EXPECT_THROW(hook_length_bruteforce(w, 1), CapExceeded);
}
