#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "slr/words.hpp"

namespace slr {

// (low, high] for partition row k; label 1 is the outermost interval.
struct Interval {
    int label = 0;
    int low = 0;
    int high = 0;
    bool empty() const { return low == high; }
};

class ZeroByContainment : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::vector<Interval> interval_system(const StrictPartition& mu, const StrictPartition& nu) {
    if (!nu.contains(mu)) throw ZeroByContainment("μ is not contained in ν");
    std::vector<Interval> out;
    for (int k = 1; k <= nu.length(); ++k) out.push_back({k, mu.part(k), nu.part(k)});
    return out;
}

inline ContentVector interval_content(const std::vector<Interval>& iv) {
    ContentVector c;
    for (const auto& in : iv)
        for (int v = in.low + 1; v <= in.high; ++v) {
            if (static_cast<int>(c.size()) < v) c.resize(v, 0);
            ++c[v - 1];
        }
    normalize_content(c);
    return c;
}

struct LabeledTableau {
    Tableau tableau;
    std::vector<std::vector<int>> labels;  // same layout as tableau.rows
    std::vector<int> splits;               // m_k for k = 1..ℓ(ν)

    int label(Cell c) const { return labels[c.row - 1][c.col - c.row]; }

    // "v[k]" annotations, rows joined by " / ".
    std::string label_text() const {
        std::string out;
        for (std::size_t r = 0; r < labels.size(); ++r) {
            if (r) out += " / ";
            for (std::size_t i = 0; i < labels[r].size(); ++i) {
                if (i) out += ' ';
                out += tableau.rows[r][i].str() + "[" + std::to_string(labels[r][i]) + "]";
            }
        }
        return out;
    }
};

struct EnumerationStats {
    std::uint64_t nodes = 0;       // successful placements, plus the root
    std::uint64_t terminals = 0;   // complete fillings reached
    std::uint64_t duplicates = 0;  // complete fillings equal to an earlier one as unlabeled tableaux
};

namespace detail {

struct Slot {
    bool filled = false;
    Letter x;
    int label = 0;
};

class ConstructedEnumerator {
public:
    ConstructedEnumerator(const StrictPartition& lambda, const StrictPartition& mu, const StrictPartition& nu)
        : lambda_(lambda), nu_len_(nu.length()) {
        for (const auto& in : interval_system(mu, nu))
            if (!in.empty()) intervals_.push_back(in);
        inner_.assign(nu_len_ + 2, 0);
        for (std::size_t a = 0; a < intervals_.size(); ++a)
            inner_[intervals_[a].label] = a + 1 < intervals_.size() ? intervals_[a + 1].label : 0;
        for (int v = 1;; ++v) {
            bool any = false;
            for (auto it = intervals_.rbegin(); it != intervals_.rend(); ++it)
                if (it->low < v && v <= it->high) {
                    order_.push_back({v, it->label});
                    any = true;
                }
            bool more = false;
            for (const auto& in : intervals_) more |= in.high > v;
            if (!any && !more) break;
        }
        grid_.assign(lambda.length() + 2, std::vector<Slot>(lambda.part(1) + lambda.length() + 2));
        pos_.assign(nu_len_ + 2, std::vector<Cell>(nu.part(1) + 2, Cell{0, 0}));
        last_unprimed_.assign(nu_len_ + 2, Cell{0, 0});
        last_primed_.assign(nu_len_ + 2, Cell{0, 0});
        split_.assign(nu_len_ + 1, 0);
        for (int k = 1; k <= nu_len_; ++k) split_[k] = nu.part(k);
        cells_ = shifted_cells(lambda);
    }

    std::vector<LabeledTableau> run(EnumerationStats& stats) {
        stats = {};
        results_.clear();
        seen_.clear();
        stats_ = &stats;
        if (static_cast<int>(order_.size()) != lambda_.size()) return {};
        ++stats.nodes;
        rec(0);
        std::stable_sort(results_.begin(), results_.end(), [&](const LabeledTableau& a, const LabeledTableau& b) {
            return std::vector<int>(a.splits.rbegin(), a.splits.rend()) <
                   std::vector<int>(b.splits.rbegin(), b.splits.rend());
        });
        return results_;
    }

private:
    struct Step {
        int value;
        int label;
    };

    bool in_shape(Cell c) const { return in_shifted(lambda_, c); }
    Slot& slot(Cell c) { return grid_[c.row][c.col]; }
    const Slot* filled(Cell c) const {
        if (!in_shape(c)) return nullptr;
        const Slot& s = grid_[c.row][c.col];
        return s.filled ? &s : nullptr;
    }

    bool semistandard_ok(Cell c, Letter x) const {
        if (x.p && c.diagonal()) return false;
        if (auto s = filled({c.row, c.col - 1}); s && (s->x > x || (s->x == x && x.p))) return false;
        if (auto s = filled({c.row - 1, c.col}); s && (s->x > x || (s->x == x && !x.p))) return false;
        if (auto s = filled({c.row, c.col + 1}); s && (x > s->x || (s->x == x && x.p))) return false;
        if (auto s = filled({c.row + 1, c.col}); s && (x > s->x || (s->x == x && !x.p))) return false;
        return true;
    }

    // Inner intervals come first along rows (unprimed) and columns (primed).
    bool precedence_ok(Cell c, Letter x, int label) const {
        if (!x.p) {
            for (int col = c.row; col <= lambda_.part(c.row) + c.row - 1; ++col) {
                auto s = filled({c.row, col});
                if (!s || s->x.p || s->label == label) continue;
                if (s->label > label && col > c.col) return false;
                if (s->label < label && col < c.col) return false;
            }
        } else {
            for (int row = 1; row <= lambda_.length(); ++row) {
                auto s = filled({row, c.col});
                if (!s || !s->x.p || s->label == label) continue;
                if (s->label > label && row > c.row) return false;
                if (s->label < label && row < c.row) return false;
            }
        }
        return true;
    }

    // Placement conditions against the letter one less in the adjacent inner interval.
    bool placement_ok(Cell c, Letter x, int value, int label) const {
        int inner = inner_[label];
        if (inner == 0 || value - 1 < 1) return true;
        Cell q = pos_[inner].size() > static_cast<std::size_t>(value - 1) ? pos_[inner][value - 1] : Cell{0, 0};
        if (q.row == 0) return true;
        const Slot& prev = grid_[q.row][q.col];
        if (!x.p && !prev.x.p && c.row <= q.row) return true;
        if (!x.p && !prev.x.p && c.row == value && q.row == value - 1) return true;
        if (x.p && prev.x.p && c.col <= q.col) return true;
        if (!x.p && prev.x.p) return true;
        return false;
    }

    bool strip_ok(Cell c, Letter x, int label) const {
        if (!x.p) {
            if (last_primed_[label].row != 0) return false;
            Cell prev = last_unprimed_[label];
            return prev.row == 0 || c.row > prev.row;
        }
        Cell prev = last_primed_[label];
        return prev.row == 0 || c.col > prev.col;
    }

    // Cells holding one value never contain both (r-1, c-1) and (r, c).
    bool band_ok(Cell c, int value) const {
        if (c.row == 1) return true;
        auto s = filled({c.row - 1, c.col - 1});
        return s && s->x.v < value;
    }

    bool ideal_after_value(int value) const {
        for (Cell c : cells_) {
            const Slot& s = grid_[c.row][c.col];
            if (!s.filled || s.x.v != value) continue;
            if (in_shape({c.row - 1, c.col}) && !grid_[c.row - 1][c.col].filled) return false;
            if (in_shape({c.row, c.col - 1}) && !grid_[c.row][c.col - 1].filled) return false;
        }
        return true;
    }

    void emit() {
        ++stats_->terminals;
        LabeledTableau lt;
        lt.tableau.rows.resize(lambda_.length());
        lt.labels.resize(lambda_.length());
        for (Cell c : cells_) {
            lt.tableau.rows[c.row - 1].push_back(grid_[c.row][c.col].x);
            lt.labels[c.row - 1].push_back(grid_[c.row][c.col].label);
        }
        lt.splits.assign(split_.begin() + 1, split_.end());
        std::string key = to_text(lt.tableau);
        if (!seen_.insert(key).second) {
            ++stats_->duplicates;
            return;
        }
        results_.push_back(std::move(lt));
    }

    void rec(std::size_t idx) {
        if (idx == order_.size()) {
            emit();
            return;
        }
        const Step st = order_[idx];
        const bool value_ends = idx + 1 == order_.size() || order_[idx + 1].value != st.value;
        for (Cell c : cells_) {
            if (grid_[c.row][c.col].filled || !band_ok(c, st.value)) continue;
            for (bool p : {false, true}) {
                Letter x{st.value, p};
                if (!semistandard_ok(c, x) || !strip_ok(c, x, st.label) || !precedence_ok(c, x, st.label) ||
                    !placement_ok(c, x, st.value, st.label))
                    continue;
                place(c, x, st.label);
                if (!value_ends || ideal_after_value(st.value)) {
                    ++stats_->nodes;
                    rec(idx + 1);
                }
                unplace(c, x, st.label);
            }
        }
    }

    struct Saved {
        Cell last_unprimed, last_primed;
        int split;
    };
    std::vector<Saved> saved_;

    void place(Cell c, Letter x, int label) {
        saved_.push_back({last_unprimed_[label], last_primed_[label], split_[label]});
        grid_[c.row][c.col] = {true, x, label};
        pos_[label][x.v] = c;
        if (x.p) {
            if (last_primed_[label].row == 0) split_[label] = x.v - 1;
            last_primed_[label] = c;
        } else {
            last_unprimed_[label] = c;
        }
    }

    void unplace(Cell c, Letter x, int label) {
        Saved s = saved_.back();
        saved_.pop_back();
        grid_[c.row][c.col] = {};
        pos_[label][x.v] = {0, 0};
        last_unprimed_[label] = s.last_unprimed;
        last_primed_[label] = s.last_primed;
        split_[label] = s.split;
    }

    StrictPartition lambda_;
    int nu_len_;
    std::vector<Interval> intervals_;
    std::vector<int> inner_;
    std::vector<Step> order_;
    std::vector<std::vector<Slot>> grid_;
    std::vector<std::vector<Cell>> pos_;
    std::vector<Cell> last_unprimed_, last_primed_;
    std::vector<int> split_;
    std::vector<Cell> cells_;
    std::vector<LabeledTableau> results_;
    std::set<std::string> seen_;
    EnumerationStats* stats_ = nullptr;
};

}  // namespace detail

// Tableaux of shape λ constructed from μ < ν, one per distinct tableau.
inline std::vector<LabeledTableau> enumerate_constructed(const StrictPartition& lambda, const StrictPartition& mu,
                                                         const StrictPartition& nu, EnumerationStats* stats = nullptr) {
    EnumerationStats local;
    if (lambda.size() + mu.size() != nu.size() || !nu.contains(mu) || !nu.contains(lambda)) {
        if (stats) *stats = local;
        return {};
    }
    detail::ConstructedEnumerator e(lambda, mu, nu);
    auto out = e.run(local);
    if (stats) *stats = local;
    return out;
}

inline std::uint64_t coefficient_uncached(const StrictPartition& lambda, const StrictPartition& mu,
                                          const StrictPartition& nu) {
    return enumerate_constructed(lambda, mu, nu).size();
}

// ---- Pieri rule ----

// 0 unless ν/μ is a rim (no 2x2 square, at most one new row). Otherwise
// 2^e where e counts the nonempty rows other than the lowest whose leftmost
// cell has no cell of ν/μ directly below it.
inline std::uint64_t pieri_coefficient(int p, const StrictPartition& mu, const StrictPartition& nu) {
    if (p <= 0 || nu.size() != mu.size() + p || !nu.contains(mu)) return 0;
    if (nu.length() > mu.length() + 1) return 0;
    auto cells = skew_cells(nu, mu);
    std::set<Cell> in(cells.begin(), cells.end());
    for (Cell c : cells)
        if (in.count({c.row, c.col + 1}) && in.count({c.row + 1, c.col}) && in.count({c.row + 1, c.col + 1}))
            return 0;
    std::map<int, int> leftmost;  // row -> first column
    for (Cell c : cells)
        if (!leftmost.count(c.row)) leftmost[c.row] = c.col;
    int e = 0;
    int lowest = leftmost.empty() ? 0 : leftmost.rbegin()->first;
    for (auto [row, col] : leftmost)
        if (row != lowest && !in.count({row + 1, col})) ++e;
    return std::uint64_t{1} << e;
}

inline std::map<StrictPartition, std::uint64_t, std::greater<>> pieri(int p, const StrictPartition& mu) {
    std::map<StrictPartition, std::uint64_t, std::greater<>> out;
    for (const auto& nu : strict_partitions_of(mu.size() + p))
        if (auto b = pieri_coefficient(p, mu, nu)) out[nu] = b;
    return out;
}

// ---- scalings ----

inline long long scale_to_q(const StrictPartition& lambda, const StrictPartition& mu, const StrictPartition& nu,
                            long long b) {
    int e = lambda.length() + mu.length() - nu.length();
    if (b == 0) return 0;
    if (e < 0) throw ValidationError("negative exponent for a nonzero coefficient");
    return b << e;
}

inline long long scale_to_lagrangian(const StrictPartition& lambda, const StrictPartition& mu,
                                     const StrictPartition& nu, long long b) {
    return scale_to_q(lambda, mu, nu, b);
}

// ---- standard shifted tableaux ----

// |λ|! Π_{i<j} (λ_i - λ_j)/(λ_i + λ_j) / Π λ_i!
inline boost::multiprecision::cpp_int count_standard_shifted(const StrictPartition& lambda) {
    using boost::multiprecision::cpp_int;
    cpp_int num = 1, den = 1;
    for (int k = 2; k <= lambda.size(); ++k) num *= k;
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int k = 2; k <= lambda.part(i); ++k) den *= k;
        for (int j = i + 1; j <= lambda.length(); ++j) {
            num *= lambda.part(i) - lambda.part(j);
            den *= lambda.part(i) + lambda.part(j);
        }
    }
    if (num % den != 0) throw std::logic_error("non-integral standard tableau count");
    return num / den;
}

}  // namespace slr
