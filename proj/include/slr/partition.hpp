#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace slr {

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Strictly decreasing positive parts. The empty partition is valid.
class StrictPartition {
public:
    StrictPartition() = default;
    StrictPartition(std::initializer_list<int> parts) : StrictPartition(std::vector<int>(parts)) {}
    explicit StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw ValidationError("partition parts must be positive");
            if (i > 0 && parts_[i] >= parts_[i - 1])
                throw ValidationError("partition parts must be strictly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    // 1-indexed part, zero past the end.
    int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

    bool contains(const StrictPartition& inner) const {
        if (inner.length() > length()) return false;
        for (int i = 1; i <= inner.length(); ++i)
            if (inner.part(i) > part(i)) return false;
        return true;
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    auto operator<=>(const StrictPartition&) const = default;

private:
    std::vector<int> parts_;
};

// "8,7,4"; "" and "-" denote the empty partition.
inline std::ostream& operator<<(std::ostream& os, const StrictPartition& p) { return os << "(" << p.str() << ")"; }

inline StrictPartition parse_partition(std::string_view text) {
    std::vector<int> parts;
    if (text.empty() || text == "-") return StrictPartition{};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string_view::npos) next = text.size();
        std::string_view tok = text.substr(pos, next - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos)
            throw ValidationError("malformed partition token '" + std::string(tok) + "'");
        parts.push_back(std::stoi(std::string(tok)));
        pos = next + 1;
    }
    return StrictPartition(std::move(parts));
}

namespace detail {
inline void strict_partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                                  std::vector<StrictPartition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        strict_partitions_rec(remaining - p, p - 1, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

// Lexicographically descending.
inline std::vector<StrictPartition> strict_partitions_of(int n) {
    std::vector<StrictPartition> out;
    std::vector<int> cur;
    detail::strict_partitions_rec(n, n, cur, out);
    return out;
}

inline std::vector<StrictPartition> strict_partitions_up_to(int n) {
    std::vector<StrictPartition> out;
    for (int k = 0; k <= n; ++k) {
        auto part = strict_partitions_of(k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// 1-indexed cell of a shifted diagram.
struct Cell {
    int row = 0;
    int col = 0;
    bool diagonal() const { return row == col; }
    auto operator<=>(const Cell&) const = default;
};

// Row r holds columns r .. λ_r + r - 1.
inline std::vector<Cell> shifted_cells(const StrictPartition& lambda) {
    std::vector<Cell> cells;
    for (int r = 1; r <= lambda.length(); ++r)
        for (int c = r; c <= lambda.part(r) + r - 1; ++c) cells.push_back({r, c});
    return cells;
}

inline bool in_shifted(const StrictPartition& lambda, Cell cell) {
    return cell.row >= 1 && cell.row <= lambda.length() && cell.col >= cell.row &&
           cell.col <= lambda.part(cell.row) + cell.row - 1;
}

// Cells of outer minus cells of inner, row-major.
inline std::vector<Cell> skew_cells(const StrictPartition& outer, const StrictPartition& inner) {
    if (!outer.contains(inner)) throw ValidationError("inner partition not contained in outer");
    std::vector<Cell> cells;
    for (Cell cell : shifted_cells(outer))
        if (!in_shifted(inner, cell)) cells.push_back(cell);
    return cells;
}

}  // namespace slr
