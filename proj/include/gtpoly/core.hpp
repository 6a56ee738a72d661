#pragma once

// Partitions, compositions, skew shapes, GT-patterns and skew tableaux.
//
// Pattern rows are stored bottom first: row 0 is the bottom row (mu) and
// row m-1 is the top row (lambda). Entry (i, j) is adjacent to (i+1, j) and
// (i+1, j+1); the defining inequalities are
//     x[i+1][j] >= x[i][j] >= x[i+1][j+1].

#include "gtpoly/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gtpoly {

// ---------------------------------------------------------------------------
// Partition / Composition
// ---------------------------------------------------------------------------

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw MalformedInput("partition has a negative part");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw MalformedInput("partition parts must be weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }
    Partition(std::initializer_list<std::int64_t> parts) : Partition(std::vector<std::int64_t>(parts)) {}

    /// Parts with trailing zeros stripped.
    const std::vector<std::int64_t>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    std::int64_t operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    std::int64_t size() const { return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0}); }
    bool empty() const { return parts_.empty(); }

    /// Parts padded with zeros to exactly n entries (n >= length()).
    std::vector<std::int64_t> padded(std::size_t n) const {
        std::vector<std::int64_t> out(parts_);
        out.resize(std::max(n, out.size()), 0);
        return out;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<std::int64_t> parts_;
};

/// All partitions of n, in reverse lexicographic order ((n) first).
inline std::vector<Partition> partitions_of(std::int64_t n) {
    std::vector<Partition> out;
    std::vector<std::int64_t> cur;
    auto rec = [&](auto&& self, std::int64_t remaining, std::int64_t max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (std::int64_t p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// A weight: non-negative integer entries, not necessarily sorted.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
        for (auto p : parts_)
            if (p < 0) throw MalformedInput("composition has a negative entry");
    }
    Composition(std::initializer_list<std::int64_t> parts) : Composition(std::vector<std::int64_t>(parts)) {}

    const std::vector<std::int64_t>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    std::int64_t operator[](std::size_t i) const { return parts_.at(i); }
    std::int64_t sum() const { return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0}); }

    /// Index of the last non-zero entry (0 for the all-zero composition).
    std::size_t length() const {
        std::size_t len = 0;
        for (std::size_t i = 0; i < parts_.size(); ++i)
            if (parts_[i] != 0) len = i + 1;
        return len;
    }

    Composition scaled(std::int64_t k) const {
        std::vector<std::int64_t> out(parts_);
        for (auto& p : out) p *= k;
        return Composition(std::move(out));
    }

    static Composition ones(std::size_t n) { return Composition(std::vector<std::int64_t>(n, 1)); }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<std::int64_t> parts_;
};

// ---------------------------------------------------------------------------
// SkewShape
// ---------------------------------------------------------------------------

struct Cell {
    int row = 0;  // 0-based diagram row
    int col = 0;  // 0-based diagram column
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

class SkewShape {
public:
    SkewShape() = default;
    SkewShape(const Partition& lambda, const Partition& mu) {
        std::size_t n = std::max(lambda.length(), mu.length());
        lambda_ = lambda.padded(n);
        mu_ = mu.padded(n);
        for (std::size_t i = 0; i < n; ++i)
            if (lambda_[i] < mu_[i]) throw MalformedInput("skew shape requires lambda_i >= mu_i");
    }
    /// Straight shape lambda / empty.
    explicit SkewShape(const Partition& lambda) : SkewShape(lambda, Partition{}) {}

    /// lambda and mu padded to the common length rows().
    const std::vector<std::int64_t>& lambda() const { return lambda_; }
    const std::vector<std::int64_t>& mu() const { return mu_; }
    Partition lambda_partition() const { return Partition(lambda_); }
    Partition mu_partition() const { return Partition(mu_); }

    std::size_t rows() const { return lambda_.size(); }
    std::int64_t row_length(std::size_t i) const { return lambda_[i] - mu_[i]; }
    std::int64_t boxes() const {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < rows(); ++i) s += row_length(i);
        return s;
    }
    std::int64_t columns() const { return lambda_.empty() ? 0 : lambda_[0]; }

    /// Cells in reading order (top row first, left to right).
    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::int64_t c = mu_[i]; c < lambda_[i]; ++c) out.push_back({static_cast<int>(i), static_cast<int>(c)});
        return out;
    }
    bool contains_cell(int row, int col) const {
        return row >= 0 && static_cast<std::size_t>(row) < rows() && col >= mu_[row] && col < lambda_[row];
    }

    SkewShape scaled(std::int64_t k) const {
        SkewShape s = *this;
        for (auto& v : s.lambda_) v *= k;
        for (auto& v : s.mu_) v *= k;
        return s;
    }

    /// Same shape with both partitions padded to n rows (n >= rows()).
    SkewShape padded(std::size_t n) const {
        SkewShape s = *this;
        s.lambda_.resize(std::max(n, rows()), 0);
        s.mu_.resize(std::max(n, rows()), 0);
        return s;
    }

    /// Equality ignores zero padding.
    friend bool operator==(const SkewShape& a, const SkewShape& b) {
        std::size_t n = std::max(a.rows(), b.rows());
        return a.padded(n).lambda_ == b.padded(n).lambda_ && a.padded(n).mu_ == b.padded(n).mu_;
    }

private:
    std::vector<std::int64_t> lambda_;
    std::vector<std::int64_t> mu_;
};

// ---------------------------------------------------------------------------
// GTPattern
// ---------------------------------------------------------------------------

class GTPattern {
public:
    GTPattern() = default;
    explicit GTPattern(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
        if (rows_.empty()) throw MalformedInput("pattern needs at least one row");
        for (const auto& r : rows_)
            if (r.size() != rows_[0].size()) throw MalformedInput("ragged pattern rows");
    }
    GTPattern(std::size_t m, std::size_t n) : rows_(m, std::vector<Rational>(n)) {
        if (m == 0) throw MalformedInput("pattern needs at least one row");
    }
    static GTPattern from_integers(const std::vector<std::vector<std::int64_t>>& rows) {
        std::vector<std::vector<Rational>> r;
        for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
        return GTPattern(std::move(r));
    }

    std::size_t m() const { return rows_.size(); }
    std::size_t n() const { return rows_.empty() ? 0 : rows_[0].size(); }
    const Rational& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    Rational& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
    const std::vector<Rational>& row(std::size_t i) const { return rows_[i]; }
    std::vector<Rational>& row(std::size_t i) { return rows_[i]; }
    const std::vector<std::vector<Rational>>& rows() const { return rows_; }

    const std::vector<Rational>& bottom() const { return rows_.front(); }
    const std::vector<Rational>& top() const { return rows_.back(); }

    Rational row_sum(std::size_t i) const {
        Rational s = 0;
        for (const auto& v : rows_[i]) s += v;
        return s;
    }

    bool is_integral() const {
        for (const auto& r : rows_)
            for (const auto& v : r)
                if (!is_integer(v)) return false;
        return true;
    }

    /// Same pattern with k zero columns appended on the right.
    GTPattern padded_columns(std::size_t k) const {
        GTPattern p = *this;
        for (auto& r : p.rows_) r.resize(r.size() + k, Rational(0));
        return p;
    }

    std::vector<std::vector<std::int64_t>> to_integers() const {
        std::vector<std::vector<std::int64_t>> out;
        for (const auto& r : rows_) {
            std::vector<std::int64_t> row;
            for (const auto& v : r) row.push_back(to_int64(v));
            out.push_back(std::move(row));
        }
        return out;
    }

    friend bool operator==(const GTPattern&, const GTPattern&) = default;
    /// Canonical order: lexicographic by rows, bottom row first.
    friend bool operator<(const GTPattern& a, const GTPattern& b) { return a.rows_ < b.rows_; }

private:
    std::vector<std::vector<Rational>> rows_;
};

/// A failed GT inequality: entry (row, col) should be >= entry (other_row,
/// other_col). Indices are 1-based as in x^row_col.
struct Violation {
    int row = 0, col = 0;
    int other_row = 0, other_col = 0;
    std::string describe() const {
        return "x^" + std::to_string(row) + "_" + std::to_string(col) + " >= x^" + std::to_string(other_row) + "_" +
               std::to_string(other_col) + " fails";
    }
};

struct ValidationResult {
    std::optional<Violation> violation;
    bool ok() const { return !violation.has_value(); }
    explicit operator bool() const { return ok(); }
};

/// Checks x^{i+1}_j >= x^i_j and x^i_j >= x^{i+1}_{j+1} everywhere.
inline ValidationResult validate_pattern(const GTPattern& p) {
    for (std::size_t i = 0; i + 1 < p.m(); ++i) {
        for (std::size_t j = 0; j < p.n(); ++j) {
            int ii = static_cast<int>(i) + 1, jj = static_cast<int>(j) + 1;
            if (p(i + 1, j) < p(i, j)) return {Violation{ii + 1, jj, ii, jj}};
            if (j + 1 < p.n() && p(i, j) < p(i + 1, j + 1)) return {Violation{ii, jj, ii + 1, jj + 1}};
        }
    }
    return {};
}

/// w_i = |x^{i+1}| - |x^i|, i = 1..m-1.
inline std::vector<Rational> weight_of(const GTPattern& p) {
    std::vector<Rational> w;
    for (std::size_t i = 0; i + 1 < p.m(); ++i) w.push_back(p.row_sum(i + 1) - p.row_sum(i));
    return w;
}

inline Composition integral_weight(const GTPattern& p) {
    std::vector<std::int64_t> w;
    for (const auto& v : weight_of(p)) w.push_back(to_int64(v));
    return Composition(std::move(w));
}

/// The skew shape top/bottom of an integral pattern.
inline SkewShape shape_of(const GTPattern& p) {
    std::vector<std::int64_t> top, bottom;
    for (const auto& v : p.top()) top.push_back(to_int64(v));
    for (const auto& v : p.bottom()) bottom.push_back(to_int64(v));
    return SkewShape(Partition(top), Partition(bottom));
}

/// Element-wise sum (the plus operation on patterns).
inline GTPattern add_patterns(const GTPattern& a, const GTPattern& b) {
    if (a.m() != b.m() || a.n() != b.n()) throw MalformedInput("pattern dimension mismatch in add_patterns");
    GTPattern out = a;
    for (std::size_t i = 0; i < a.m(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j) out(i, j) += b(i, j);
    return out;
}

inline GTPattern scale_pattern(const GTPattern& a, const Rational& k) {
    GTPattern out = a;
    for (std::size_t i = 0; i < a.m(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j) out(i, j) *= k;
    return out;
}

// ---------------------------------------------------------------------------
// SkewTableau
// ---------------------------------------------------------------------------

class SkewTableau {
public:
    SkewTableau() = default;
    /// rows[i] lists the contents of row i's cells left to right.
    SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows) : shape_(std::move(shape)), rows_(std::move(rows)) {
        rows_.resize(std::max(rows_.size(), shape_.rows()));
        if (rows_.size() > shape_.rows()) shape_ = shape_.padded(rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (static_cast<std::int64_t>(rows_[i].size()) != shape_.row_length(i))
                throw MalformedInput("tableau row " + std::to_string(i + 1) + " does not match its shape");
            for (int c : rows_[i])
                if (c < 1) throw MalformedInput("tableau contents must be positive");
        }
    }

    const SkewShape& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }

    /// Content at absolute diagram position, if the cell exists.
    std::optional<int> at(int row, int col) const {
        if (!shape_.contains_cell(row, col)) return std::nullopt;
        return rows_[row][col - shape_.mu()[row]];
    }

    int max_content() const {
        int mx = 0;
        for (const auto& r : rows_)
            for (int c : r) mx = std::max(mx, c);
        return mx;
    }

    /// Number of cells with each content 1..max_content().
    std::vector<std::int64_t> content_counts() const {
        std::vector<std::int64_t> counts(max_content(), 0);
        for (const auto& r : rows_)
            for (int c : r) ++counts[c - 1];
        return counts;
    }

    /// Rows weakly increasing, columns strictly increasing.
    bool is_semistandard() const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            for (std::size_t k = 1; k < rows_[i].size(); ++k)
                if (rows_[i][k - 1] > rows_[i][k]) return false;
            if (i + 1 < rows_.size()) {
                for (std::int64_t c = shape_.mu()[i + 1]; c < shape_.lambda()[i + 1]; ++c) {
                    auto above = at(static_cast<int>(i), static_cast<int>(c));
                    if (above && *above >= rows_[i + 1][c - shape_.mu()[i + 1]]) return false;
                }
            }
        }
        return true;
    }

    bool is_standard() const {
        std::vector<int> all;
        for (const auto& r : rows_) all.insert(all.end(), r.begin(), r.end());
        std::sort(all.begin(), all.end());
        for (std::size_t i = 0; i < all.size(); ++i)
            if (all[i] != static_cast<int>(i) + 1) return false;
        return is_semistandard();
    }

    friend bool operator==(const SkewTableau& a, const SkewTableau& b) {
        if (!(a.shape_ == b.shape_)) return false;
        std::size_t n = std::max(a.rows_.size(), b.rows_.size());
        for (std::size_t i = 0; i < n; ++i) {
            static const std::vector<int> empty;
            const auto& ra = i < a.rows_.size() ? a.rows_[i] : empty;
            const auto& rb = i < b.rows_.size() ? b.rows_[i] : empty;
            if (ra != rb) return false;
        }
        return true;
    }

private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;
};

/// Row j of the tableau receives x^{i+1}_j - x^i_j cells of content i.
inline SkewTableau pattern_to_tableau(const GTPattern& p) {
    if (!p.is_integral()) throw DomainError("pattern_to_tableau requires an integral pattern");
    if (auto v = validate_pattern(p); !v) throw DomainError("pattern is not a GT-pattern: " + v.violation->describe());
    SkewShape shape = shape_of(p).padded(p.n());
    std::vector<std::vector<int>> rows(p.n());
    for (std::size_t j = 0; j < p.n(); ++j)
        for (std::size_t i = 0; i + 1 < p.m(); ++i) {
            std::int64_t cnt = to_int64(p(i + 1, j) - p(i, j));
            rows[j].insert(rows[j].end(), static_cast<std::size_t>(cnt), static_cast<int>(i) + 1);
        }
    return SkewTableau(shape, std::move(rows));
}

/// Inverse of pattern_to_tableau; m is the number of pattern rows.
inline GTPattern tableau_to_pattern(const SkewTableau& t, std::size_t m) {
    if (m == 0) throw MalformedInput("pattern needs at least one row");
    if (t.max_content() > static_cast<int>(m) - 1)
        throw DomainError("tableau content exceeds m-1 = " + std::to_string(m - 1));
    if (!t.is_semistandard()) throw DomainError("tableau is not semistandard");
    std::size_t n = std::max<std::size_t>(t.shape().rows(), 1);
    GTPattern p(m, n);
    for (std::size_t j = 0; j < t.shape().rows(); ++j) {
        p(0, j) = t.shape().mu()[j];
        std::vector<std::int64_t> counts(m, 0);
        for (int c : t.rows()[j]) ++counts[c];
        for (std::size_t i = 1; i < m; ++i) p(i, j) = p(i - 1, j) + counts[i];
    }
    return p;
}

namespace detail {
inline bool proportional_shapes(const SkewShape& a, const SkewShape& b) {
    std::size_t n = std::max(a.rows(), b.rows());
    auto pa = a.padded(n), pb = b.padded(n);
    std::vector<std::int64_t> va(pa.lambda()), vb(pb.lambda());
    va.insert(va.end(), pa.mu().begin(), pa.mu().end());
    vb.insert(vb.end(), pb.mu().begin(), pb.mu().end());
    std::int64_t sa = std::accumulate(va.begin(), va.end(), std::int64_t{0});
    std::int64_t sb = std::accumulate(vb.begin(), vb.end(), std::int64_t{0});
    if (sa == 0 || sb == 0) return true;
    for (std::size_t i = 0; i < va.size(); ++i)
        if (va[i] * sb != vb[i] * sa) return false;
    return true;
}
}  // namespace detail

/// Row-wise concatenation followed by sorting each row (tableau side of
/// add_patterns). Shapes must be multiples of a common skew shape.
inline SkewTableau concat_tableaux(const SkewTableau& a, const SkewTableau& b) {
    if (!detail::proportional_shapes(a.shape(), b.shape()))
        throw DomainError("concat_tableaux: shapes are not multiples of a common skew shape");
    std::size_t n = std::max(a.shape().rows(), b.shape().rows());
    SkewShape sa = a.shape().padded(n), sb = b.shape().padded(n);
    std::vector<std::int64_t> lam(n), mu(n);
    for (std::size_t i = 0; i < n; ++i) {
        lam[i] = sa.lambda()[i] + sb.lambda()[i];
        mu[i] = sa.mu()[i] + sb.mu()[i];
    }
    std::vector<std::vector<int>> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < a.rows().size()) rows[i].insert(rows[i].end(), a.rows()[i].begin(), a.rows()[i].end());
        if (i < b.rows().size()) rows[i].insert(rows[i].end(), b.rows()[i].begin(), b.rows()[i].end());
        std::sort(rows[i].begin(), rows[i].end());
    }
    return SkewTableau(SkewShape(Partition(lam), Partition(mu)).padded(n), std::move(rows));
}

}  // namespace gtpoly
