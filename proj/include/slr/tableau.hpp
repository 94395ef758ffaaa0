#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "slr/partition.hpp"

namespace slr {

// Element of the doubled alphabet 1' < 1 < 2' < 2 < ...
struct Letter {
    int v = 0;
    bool p = false;

    constexpr int key() const { return 2 * v - (p ? 1 : 0); }
    static constexpr Letter from_key(int k) { return Letter{(k + 1) / 2, (k % 2) != 0}; }

    constexpr bool operator==(const Letter&) const = default;
    constexpr auto operator<=>(const Letter& o) const { return key() <=> o.key(); }

    std::string str() const { return std::to_string(v) + (p ? "'" : ""); }
};

constexpr Letter unprimed(int v) { return Letter{v, false}; }
constexpr Letter primed(int v) { return Letter{v, true}; }

using Word = std::vector<int>;
using LetterWord = std::vector<Letter>;

// Shifted filling stored by rows; row r (1-indexed) starts at column r.
// Used for both insertion tableaux and recording tableaux; validate()
// decides which invariants apply.
struct Tableau {
    std::vector<std::vector<Letter>> rows;

    bool empty() const { return rows.empty(); }
    int num_rows() const { return static_cast<int>(rows.size()); }
    int row_length(int r) const { return r >= 1 && r <= num_rows() ? static_cast<int>(rows[r - 1].size()) : 0; }
    int size() const {
        int s = 0;
        for (const auto& row : rows) s += static_cast<int>(row.size());
        return s;
    }
    bool has(Cell c) const { return c.row >= 1 && c.row <= num_rows() && c.col >= c.row && c.col < c.row + row_length(c.row); }
    const Letter& at(Cell c) const { return rows[c.row - 1][c.col - c.row]; }
    Letter& at(Cell c) { return rows[c.row - 1][c.col - c.row]; }

    // Row lengths; not checked for strictness.
    std::vector<int> row_lengths() const {
        std::vector<int> out;
        for (const auto& row : rows) out.push_back(static_cast<int>(row.size()));
        return out;
    }
    StrictPartition shape() const { return StrictPartition(row_lengths()); }

    // Last row of column c that is occupied, 0 if none.
    int column_height(int c) const {
        int h = 0;
        for (int r = 1; r <= num_rows() && r <= c; ++r)
            if (has({r, c})) h = r;
        return h;
    }

    bool operator==(const Tableau&) const = default;
};

enum class Violation { RowOrder, ColumnOrder, PrimedTwiceInRow, UnprimedTwiceInColumn, PrimedDiagonal, BadShape };

struct Diagnostic {
    Violation kind;
    Cell cell;
};

inline const char* violation_name(Violation v) {
    switch (v) {
        case Violation::RowOrder: return "row order";
        case Violation::ColumnOrder: return "column order";
        case Violation::PrimedTwiceInRow: return "primed value repeated in row";
        case Violation::UnprimedTwiceInColumn: return "unprimed value repeated in column";
        case Violation::PrimedDiagonal: return "primed entry on diagonal";
        case Violation::BadShape: return "row lengths not strictly decreasing";
    }
    return "?";
}

// Empty result means valid. Recording tableaux skip the diagonal check.
inline std::vector<Diagnostic> validate(const Tableau& t, bool recording = false) {
    std::vector<Diagnostic> out;
    for (int r = 1; r <= t.num_rows(); ++r) {
        if (t.row_length(r) == 0 || (r > 1 && t.row_length(r) >= t.row_length(r - 1)))
            out.push_back({Violation::BadShape, {r, r}});
    }
    if (!out.empty()) return out;
    for (int r = 1; r <= t.num_rows(); ++r) {
        for (int c = r; c < r + t.row_length(r); ++c) {
            Letter x = t.at({r, c});
            if (x.v <= 0) out.push_back({Violation::RowOrder, {r, c}});
            if (!recording && c == r && x.p) out.push_back({Violation::PrimedDiagonal, {r, c}});
            if (t.has({r, c - 1})) {
                Letter left = t.at({r, c - 1});
                if (left > x) out.push_back({Violation::RowOrder, {r, c}});
                else if (left == x && x.p) out.push_back({Violation::PrimedTwiceInRow, {r, c}});
            }
            if (t.has({r - 1, c})) {
                Letter up = t.at({r - 1, c});
                if (up > x) out.push_back({Violation::ColumnOrder, {r, c}});
                else if (up == x && !x.p) out.push_back({Violation::UnprimedTwiceInColumn, {r, c}});
            }
        }
    }
    return out;
}

inline bool is_valid(const Tableau& t, bool recording = false) { return validate(t, recording).empty(); }

// counts[i-1] = number of cells holding i or i'; trailing zeros dropped.
using ContentVector = std::vector<int>;

inline void normalize_content(ContentVector& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

inline ContentVector content(const Tableau& t) {
    ContentVector c;
    for (const auto& row : t.rows)
        for (Letter x : row) {
            if (static_cast<int>(c.size()) < x.v) c.resize(x.v, 0);
            ++c[x.v - 1];
        }
    normalize_content(c);
    return c;
}

// ---- enumeration of shTab(λ) ----

struct TableauConstraint {
    int max_value = 0;              // used when exact is empty
    std::optional<ContentVector> exact;

    static TableauConstraint bound(int n) { return {n, std::nullopt}; }
    static TableauConstraint content(ContentVector c) {
        normalize_content(c);
        return {static_cast<int>(c.size()), std::move(c)};
    }
};

namespace detail {
struct TableauEnumerator {
    const StrictPartition& lambda;
    const TableauConstraint& cons;
    std::vector<Cell> cells;
    ContentVector remaining;
    Tableau t;
    const std::function<bool(const Tableau&)>& visit;
    bool stop = false;

    void run(std::size_t idx) {
        if (stop) return;
        if (idx == cells.size()) {
            if (!visit(t)) stop = true;
            return;
        }
        Cell cell = cells[idx];
        int lo = 1;
        if (cell.col > cell.row) lo = t.at({cell.row, cell.col - 1}).key();
        if (cell.row > 1) lo = std::max(lo, t.at({cell.row - 1, cell.col}).key());
        int hi = 2 * cons.max_value;
        for (int k = lo; k <= hi && !stop; ++k) {
            Letter x = Letter::from_key(k);
            if (x.p && cell.diagonal()) continue;
            if (cell.col > cell.row) {
                Letter left = t.at({cell.row, cell.col - 1});
                if (left == x && x.p) continue;
            }
            if (cell.row > 1) {
                Letter up = t.at({cell.row - 1, cell.col});
                if (up == x && !x.p) continue;
            }
            if (cons.exact) {
                if (remaining[x.v - 1] == 0) continue;
                --remaining[x.v - 1];
            }
            t.rows[cell.row - 1].push_back(x);
            run(idx + 1);
            t.rows[cell.row - 1].pop_back();
            if (cons.exact) ++remaining[x.v - 1];
        }
    }
};
}  // namespace detail

// Visits every tableau of shape λ satisfying the constraint once, in
// row-major lexicographic order. The visitor returns false to stop early.
inline void for_each_tableau(const StrictPartition& lambda, const TableauConstraint& cons,
                             const std::function<bool(const Tableau&)>& visit) {
    if (cons.exact) {
        int total = 0;
        for (int c : *cons.exact) total += c;
        if (total != lambda.size()) return;
    }
    detail::TableauEnumerator e{lambda, cons, shifted_cells(lambda), cons.exact.value_or(ContentVector{}), {}, visit};
    e.t.rows.resize(lambda.length());
    e.run(0);
}

inline std::vector<Tableau> enumerate_tableaux(const StrictPartition& lambda, const TableauConstraint& cons) {
    std::vector<Tableau> out;
    for_each_tableau(lambda, cons, [&](const Tableau& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

// ---- standard skew fillings ----

// Values 1..n on the cells of outer/inner; 0 marks cells of inner.
struct SkewFilling {
    StrictPartition outer;
    StrictPartition inner;
    std::vector<std::vector<int>> rows;  // rows[r-1][c-r], full outer rows

    int at(Cell c) const { return rows[c.row - 1][c.col - c.row]; }
};

// Fills values 1..n in order into cells whose upper and left neighbours are
// already filled. Returns the number of search nodes visited.
inline std::uint64_t for_each_standard_skew(const StrictPartition& outer, const StrictPartition& inner,
                                            const std::function<bool(const SkewFilling&)>& visit) {
    auto cells = skew_cells(outer, inner);
    SkewFilling f{outer, inner, {}};
    for (int r = 1; r <= outer.length(); ++r) f.rows.emplace_back(outer.part(r), 0);
    const int n = static_cast<int>(cells.size());
    std::uint64_t nodes = 0;
    bool stop = false;
    auto ready = [&](Cell c) {
        if (f.at(c) != 0) return false;
        Cell up{c.row - 1, c.col}, left{c.row, c.col - 1};
        if (in_shifted(outer, up) && !in_shifted(inner, up) && f.at(up) == 0) return false;
        if (in_shifted(outer, left) && !in_shifted(inner, left) && f.at(left) == 0) return false;
        return true;
    };
    std::function<void(int)> rec = [&](int value) {
        ++nodes;
        if (value > n) {
            if (!visit(f)) stop = true;
            return;
        }
        for (Cell c : cells) {
            if (stop) return;
            if (!ready(c)) continue;
            f.rows[c.row - 1][c.col - c.row] = value;
            rec(value + 1);
            f.rows[c.row - 1][c.col - c.row] = 0;
        }
    };
    rec(1);
    return nodes;
}

inline std::vector<SkewFilling> enumerate_standard_skew(const StrictPartition& outer, const StrictPartition& inner) {
    std::vector<SkewFilling> out;
    for_each_standard_skew(outer, inner, [&](const SkewFilling& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

// ---- reading words ----

// Rows bottom to top, each left to right.
inline LetterWord reading_word(const Tableau& t) {
    LetterWord w;
    for (int r = t.num_rows(); r >= 1; --r)
        for (Letter x : t.rows[r - 1]) w.push_back(x);
    return w;
}

inline LetterWord reading_word(const SkewFilling& f) {
    LetterWord w;
    for (int r = f.outer.length(); r >= 1; --r)
        for (int v : f.rows[r - 1])
            if (v != 0) w.push_back(unprimed(v));
    return w;
}

// ---- codecs ----

inline std::string to_text(const Tableau& t) {
    std::string out;
    for (int r = 0; r < t.num_rows(); ++r) {
        if (r) out += " / ";
        for (std::size_t i = 0; i < t.rows[r].size(); ++i) {
            if (i) out += ' ';
            out += t.rows[r][i].str();
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Tableau& t) { return os << "[" << to_text(t) << "]"; }

class DecodeError : public std::runtime_error {
public:
    DecodeError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

// Inverse of to_text. Shape validity is checked, semistandardness is not.
inline Tableau from_text(std::string_view text) {
    Tableau t;
    std::vector<Letter> row;
    std::size_t i = 0;
    bool row_started = false;
    auto finish_row = [&](std::size_t pos) {
        if (row.empty()) throw DecodeError("empty row", pos);
        t.rows.push_back(std::move(row));
        row.clear();
    };
    while (i < text.size()) {
        char ch = text[i];
        if (ch == ' ' || ch == '\t') {
            ++i;
        } else if (ch == '/') {
            finish_row(i);
            row_started = false;
            ++i;
        } else if (ch >= '0' && ch <= '9') {
            std::size_t start = i;
            int v = 0;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') v = v * 10 + (text[i++] - '0');
            bool p = false;
            if (i < text.size() && text[i] == '\'') {
                p = true;
                ++i;
            }
            if (v == 0) throw DecodeError("entry must be positive", start);
            if (i < text.size() && text[i] != ' ' && text[i] != '/' && text[i] != '\t')
                throw DecodeError("unexpected character", i);
            row.push_back({v, p});
            row_started = true;
        } else {
            throw DecodeError("unexpected character", i);
        }
    }
    if (row_started || !t.rows.empty()) finish_row(text.size());
    for (int r = 2; r <= t.num_rows(); ++r)
        if (t.row_length(r) >= t.row_length(r - 1)) throw DecodeError("row lengths not strictly decreasing", 0);
    return t;
}

inline nlohmann::json to_structured(const Tableau& t) {
    nlohmann::json shape = nlohmann::json::array();
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        shape.push_back(row.size());
        nlohmann::json jr = nlohmann::json::array();
        for (Letter x : row) jr.push_back({{"v", x.v}, {"p", x.p}});
        rows.push_back(std::move(jr));
    }
    return {{"shape", shape}, {"rows", rows}};
}

inline Tableau from_structured(const nlohmann::json& j) {
    Tableau t;
    const auto& shape = j.at("shape");
    const auto& rows = j.at("rows");
    if (shape.size() != rows.size()) throw DecodeError("shape and rows disagree", 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::vector<Letter> row;
        for (const auto& e : rows[r]) {
            int v = e.at("v").get<int>();
            if (v <= 0) throw DecodeError("entry must be positive", r);
            row.push_back({v, e.at("p").get<bool>()});
        }
        if (row.size() != shape[r].get<std::size_t>()) throw DecodeError("row length disagrees with shape", r);
        t.rows.push_back(std::move(row));
    }
    for (int r = 2; r <= t.num_rows(); ++r)
        if (t.row_length(r) >= t.row_length(r - 1)) throw DecodeError("row lengths not strictly decreasing", 0);
    return t;
}

inline std::string to_text(const LetterWord& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += w[i].str();
    }
    return out;
}

}  // namespace slr
