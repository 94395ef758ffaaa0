#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "slr/tableau.hpp"

namespace slr {

struct InsertionResult {
    Tableau p;
    Tableau q;
    std::vector<Cell> trace;  // cell created by each letter
};

// A top letter paired with a bottom letter.
struct BiLetter {
    int top = 0;
    Letter bottom;
    auto operator<=>(const BiLetter&) const = default;
};
using Biword = std::vector<BiLetter>;

namespace detail {

enum class Mode { Row, Column };

struct Bump {
    bool done = false;
    Cell cell;         // created cell when done, else position of the displaced entry
    Letter displaced;  // valid when !done
    Mode mode = Mode::Row;
};

inline Cell append_to_row(Tableau& t, int r, Letter x) {
    if (r == t.num_rows() + 1) t.rows.emplace_back();
    t.rows[r - 1].push_back(x);
    return {r, r + t.row_length(r) - 1};
}

// Replace the leftmost entry of row r satisfying pred, or append.
template <class Pred>
Bump row_step(Tableau& t, int r, Letter x, Pred pred) {
    for (int c = r; c < r + t.row_length(r); ++c) {
        Letter y = t.at({r, c});
        if (pred(y)) {
            t.at({r, c}) = x;
            return {false, {r, c}, y, Mode::Row};
        }
    }
    return {true, append_to_row(t, r, x), {}, Mode::Row};
}

// Replace the topmost entry of column c satisfying pred, or add a box at the
// bottom of the column.
template <class Pred>
Bump column_step(Tableau& t, int c, Letter x, Pred pred) {
    int h = t.column_height(c);
    for (int r = 1; r <= h; ++r) {
        if (!t.has({r, c})) continue;
        Letter y = t.at({r, c});
        if (pred(y)) {
            t.at({r, c}) = x;
            return {false, {r, c}, y, Mode::Column};
        }
    }
    return {true, append_to_row(t, h + 1, x), {}, Mode::Column};
}

}  // namespace detail

// Mixed insertion of an unprimed letter into the first row. Returns the new cell.
inline Cell mixed_insert_letter(Tableau& t, int x) {
    using namespace detail;
    Letter cur = unprimed(x);
    Mode mode = Mode::Row;
    int idx = 1;
    while (true) {
        Bump b = mode == Mode::Row ? row_step(t, idx, cur, [&](Letter y) { return y > cur; })
                                   : column_step(t, idx, cur, [&](Letter y) { return y > cur; });
        if (b.done) return b.cell;
        Letter y = b.displaced;
        if (y.p) {
            mode = Mode::Column;
            idx = b.cell.col + 1;
            cur = y;
        } else if (b.cell.diagonal()) {
            mode = Mode::Column;
            idx = b.cell.col + 1;
            cur = primed(y.v);
        } else {
            mode = Mode::Row;
            idx = b.cell.row + 1;
            cur = y;
        }
    }
}

inline Tableau mixed_insert_word_into(Tableau t, const Word& w) {
    for (int x : w) mixed_insert_letter(t, x);
    return t;
}

// Recording tableau holds the top letters (positions 1..n for plain words).
inline InsertionResult mixed_insertion(const Biword& b) {
    InsertionResult res;
    for (const auto& bl : b) {
        Cell c = mixed_insert_letter(res.p, bl.bottom.v);
        detail::append_to_row(res.q, c.row, unprimed(bl.top));
        res.trace.push_back(c);
    }
    return res;
}

inline InsertionResult mixed_insertion(const Word& w) {
    Biword b;
    for (std::size_t i = 0; i < w.size(); ++i) b.push_back({static_cast<int>(i) + 1, unprimed(w[i])});
    return mixed_insertion(b);
}

inline Tableau p_mix(const Word& w) { return mixed_insert_word_into({}, w); }

// Sagan–Worley insertion of one letter (possibly primed). Returns the new
// cell and whether it was created by a column insertion.
inline std::pair<Cell, bool> sw_insert_letter(Tableau& t, Letter x) {
    using namespace detail;
    Letter cur = x;
    Mode mode = Mode::Row;
    int idx = 1;
    while (true) {
        Bump b;
        if (mode == Mode::Row) {
            if (!cur.p) {
                b = row_step(t, idx, cur, [&](Letter y) { return y > cur; });
            } else {
                b = row_step(t, idx, cur, [&](Letter y) { return y >= cur; });
                if (!b.done && b.cell.diagonal() && b.displaced == unprimed(cur.v)) t.at(b.cell) = unprimed(cur.v);
            }
        } else {
            if (!cur.p)
                b = column_step(t, idx, cur, [&](Letter y) { return y >= cur; });
            else
                b = column_step(t, idx, cur, [&](Letter y) { return y > cur; });
        }
        if (b.done) return {b.cell, mode == Mode::Column};
        Letter y = b.displaced;
        if (b.cell.diagonal()) {
            // A primed diagonal entry displaced by the same primed letter
            // continues unprimed.
            if (y.p && cur == y) y = unprimed(y.v);
            mode = Mode::Column;
            idx = b.cell.col + 1;
        } else if (mode == Mode::Column) {
            idx = b.cell.col + 1;
        } else {
            idx = b.cell.row + 1;
        }
        cur = y;
    }
}

inline InsertionResult sw_insertion(const Biword& b) {
    InsertionResult res;
    for (const auto& bl : b) {
        auto [c, by_column] = sw_insert_letter(res.p, bl.bottom);
        detail::append_to_row(res.q, c.row, Letter{bl.top, by_column});
        res.trace.push_back(c);
    }
    return res;
}

inline InsertionResult sw_insertion(const LetterWord& w) {
    Biword b;
    for (std::size_t i = 0; i < w.size(); ++i) b.push_back({static_cast<int>(i) + 1, w[i]});
    return sw_insertion(b);
}

inline Tableau p_sw(const LetterWord& w) {
    Tableau t;
    for (Letter x : w) sw_insert_letter(t, x);
    return t;
}

// Rectification of a standard skew filling.
inline Tableau rectify(const SkewFilling& f) { return p_sw(reading_word(f)); }

// σ swaps the rows of a biword whose bottoms are unprimed.
inline Biword swap_rows(const Biword& b) {
    Biword out;
    for (const auto& bl : b) out.push_back({bl.bottom.v, unprimed(bl.top)});
    return out;
}

inline Biword sorted_by_top(Biword b) {
    std::stable_sort(b.begin(), b.end(), [](const BiLetter& x, const BiLetter& y) {
        return std::pair(x.top, x.bottom.key()) < std::pair(y.top, y.bottom.key());
    });
    return b;
}

inline Biword sorted_by_bottom(Biword b) {
    std::stable_sort(b.begin(), b.end(), [](const BiLetter& x, const BiLetter& y) {
        return std::pair(x.bottom.key(), x.top) < std::pair(y.bottom.key(), y.top);
    });
    return b;
}

}  // namespace slr
