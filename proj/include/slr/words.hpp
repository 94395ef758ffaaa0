#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "slr/insertion.hpp"

namespace slr {

inline ContentVector word_content(const Word& w) {
    ContentVector c;
    for (int x : w) {
        if (static_cast<int>(c.size()) < x) c.resize(x, 0);
        ++c[x - 1];
    }
    normalize_content(c);
    return c;
}

// Every suffix has at least as many i as i+1.
inline bool is_yamanouchi(const Word& w) {
    std::vector<int> count;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        int x = *it;
        if (static_cast<int>(count.size()) <= x) count.resize(x + 1, 0);
        ++count[x];
        if (x > 1 && count[x] > count[x - 1]) return false;
    }
    return true;
}

// Every suffix has #i equal to #(i+1) or exceeding it by one.
inline bool is_shifted_lattice(const Word& w) {
    int maxv = 0;
    for (int x : w) maxv = std::max(maxv, x);
    std::vector<int> count(maxv + 2, 0);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        int x = *it;
        ++count[x];
        // only the pairs (x-1, x) and (x, x+1) change
        if (x > 1) {
            int d = count[x - 1] - count[x];
            if (d != 0 && d != 1) return false;
        }
        int d = count[x] - count[x + 1];
        if (d != 0 && d != 1) return false;
    }
    return true;
}

struct Run {
    int top = 0;
    int bottom = 0;
    std::vector<int> positions;  // 0-indexed, increasing
    bool operator==(const Run&) const = default;
};

// Greedy extraction: the rightmost maximum, then the nearest value one less
// to its right, and so on; remove and repeat.
inline std::vector<Run> shrinking_decomposition(const Word& w) {
    std::vector<Run> runs;
    std::vector<bool> used(w.size(), false);
    std::size_t left = w.size();
    while (left > 0) {
        int m = 0;
        std::size_t pos = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (!used[i] && w[i] >= m) {
                m = w[i];
                pos = i;
            }
        Run run{m, m, {static_cast<int>(pos)}};
        used[pos] = true;
        --left;
        int want = m - 1;
        for (std::size_t i = pos + 1; i < w.size() && want >= 1; ++i) {
            if (!used[i] && w[i] == want) {
                used[i] = true;
                --left;
                run.positions.push_back(static_cast<int>(i));
                run.bottom = want;
                --want;
            }
        }
        runs.push_back(std::move(run));
    }
    return runs;
}

// Recovers ν with c_i = #{j : ν_j >= i}, if such a strict ν exists.
inline std::optional<StrictPartition> partition_from_content(const ContentVector& c) {
    std::vector<int> nu;
    int maxc = c.empty() ? 0 : *std::max_element(c.begin(), c.end());
    for (int j = 1; j <= maxc; ++j) {
        int n = 0;
        for (int ci : c) n += ci >= j ? 1 : 0;
        nu.push_back(n);
    }
    for (std::size_t j = 1; j < nu.size(); ++j)
        if (nu[j] >= nu[j - 1]) return std::nullopt;
    for (std::size_t i = 0; i < c.size(); ++i) {
        int n = 0;
        for (int nj : nu) n += nj >= static_cast<int>(i) + 1 ? 1 : 0;
        if (n != c[i]) return std::nullopt;
    }
    return StrictPartition(nu);
}

inline bool is_interlacing(const Word& w) {
    int maxv = 0;
    for (int x : w) maxv = std::max(maxv, x);
    for (int i = 1; i <= maxv; ++i) {
        int last = -1;
        for (std::size_t p = 0; p < w.size(); ++p) {
            if (w[p] != i) continue;
            if (last >= 0) {
                bool below = i == 1, above = false;
                for (std::size_t q = last + 1; q < p; ++q) {
                    if (w[q] == i - 1) below = true;
                    if (w[q] == i + 1) above = true;
                }
                if (!below || !above) return false;
            }
            last = static_cast<int>(p);
        }
    }
    // runs must be intervals (μ_j, ν_j] with μ, ν strict
    auto runs = shrinking_decomposition(w);
    for (std::size_t j = 1; j < runs.size(); ++j) {
        if (runs[j].top >= runs[j - 1].top) return false;
        int lo_prev = runs[j - 1].bottom - 1, lo = runs[j].bottom - 1;
        if (lo_prev == 0 ? lo != 0 : lo >= lo_prev) return false;
    }
    return true;
}

// seq(ν_ℓ) ... seq(ν_1), seq(n) = n, n-1, ..., 1.
inline Word barely_yamanouchi_sequence(const StrictPartition& nu) {
    Word w;
    for (int j = nu.length(); j >= 1; --j)
        for (int v = nu.part(j); v >= 1; --v) w.push_back(v);
    return w;
}

inline Tableau barely_yamanouchi_tableau(const StrictPartition& nu) { return p_mix(barely_yamanouchi_sequence(nu)); }

inline bool is_barely_yamanouchi(const Word& w) {
    return partition_from_content(word_content(w)).has_value() && is_shifted_lattice(w);
}

// Definition by insertion.
inline bool is_barely_yamanouchi_slow(const Word& w) {
    auto nu = partition_from_content(word_content(w));
    return nu && p_mix(w) == barely_yamanouchi_tableau(*nu);
}

// ---- hook subwords ----

inline constexpr int kHookBruteforceCap = 12;

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Strictly decreasing, then weakly increasing.
inline bool is_hook_word(const Word& s) {
    std::size_t i = 0;
    while (i + 1 < s.size() && s[i] > s[i + 1]) ++i;
    for (; i + 1 < s.size(); ++i)
        if (s[i] > s[i + 1]) return false;
    return true;
}

namespace detail {
struct HookSearch {
    std::vector<std::uint32_t> masks;  // by size, descending
    std::vector<int> sizes;
    int k = 0;
    int best = 0;
    std::vector<std::uint32_t> chosen;

    void rec(int depth, std::size_t start, std::uint32_t once, std::uint32_t twice, int total) {
        if (depth == k) {
            best = std::max(best, total);
            return;
        }
        for (std::size_t j = start; j < masks.size(); ++j) {
            if (total + (k - depth) * sizes[j] <= best) return;
            std::uint32_t m = masks[j];
            if (m & twice) continue;
            bool ok = true;
            for (std::uint32_t c : chosen)
                if (std::popcount(c & m) > 1) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(m);
            rec(depth + 1, j, once | m, twice | (once & m), total + sizes[j]);
            chosen.pop_back();
        }
    }
};
}  // namespace detail

// Longest k-hook subword: k hook subwords pairwise sharing at most one
// position, no position in more than two, sizes summed.
inline int hook_length_bruteforce(const Word& w, int k) {
    const int n = static_cast<int>(w.size());
    if (n > kHookBruteforceCap) throw CapExceeded("word too long for brute-force hook search");
    detail::HookSearch s;
    s.k = k;
    Word sub;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        sub.clear();
        for (int i = 0; i < n; ++i)
            if (m >> i & 1u) sub.push_back(w[i]);
        if (is_hook_word(sub)) s.masks.push_back(m);
    }
    std::stable_sort(s.masks.begin(), s.masks.end(),
                     [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) > std::popcount(b); });
    for (auto m : s.masks) s.sizes.push_back(std::popcount(m));
    s.rec(0, 0, 0, 0, 0);
    return s.best;
}

// I_k = λ_1 + ... + λ_k + k(k-1)/2 for λ the mixed insertion shape.
inline std::vector<int> hook_lengths_by_shape(const Word& w) {
    auto lambda = p_mix(w).row_lengths();
    std::vector<int> out;
    int acc = 0;
    for (std::size_t k = 1; k <= lambda.size(); ++k) {
        acc += lambda[k - 1];
        out.push_back(acc + static_cast<int>(k * (k - 1) / 2));
    }
    return out;
}

}  // namespace slr
