#pragma once

// Slow, independent reference computations used to check the library.

#include "gtpoly/core.hpp"
#include "gtpoly/spec.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using gtpoly::GTPattern;
using gtpoly::Rational;
using QRows = std::vector<std::vector<Rational>>;

/// Rank by plain Gaussian elimination over Q.
inline std::size_t rank(QRows a) {
    if (a.empty()) return 0;
    std::size_t cols = a[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

/// Unique solution of a square-or-tall consistent system, if any.
inline std::optional<std::vector<Rational>> solve(QRows a, std::vector<Rational> b) {
    std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::size_t r = 0;
    std::vector<std::size_t> piv;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) return std::nullopt;
        std::swap(a[p], a[r]);
        Rational inv = 1 / a[r][c];
        for (auto& v : a[r]) v *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = 0; j <= cols; ++j) a[i][j] -= f * a[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    if (r < cols) return std::nullopt;
    for (std::size_t i = r; i < rows; ++i)
        if (a[i][cols] != 0) return std::nullopt;
    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < cols; ++i) x[piv[i]] = a[i][cols];
    return x;
}

/// Leibniz-formula determinant.
inline Rational det(const QRows& a) {
    std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        int inv = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        Rational prod = 1;
        for (std::size_t i = 0; i < n; ++i) prod *= a[i][perm[i]];
        total += (inv % 2 ? -prod : prod);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == k) {
            f(idx);
            return;
        }
        for (std::size_t i = start; i + (k - pos) <= n; ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
}

/// Vertices of a weighted GT-polytope by brute force over tight subsets of
/// the raw GT inequalities. Variables are all interior entries.
inline std::set<GTPattern> brute_force_vertices(const gtpoly::PolytopeSpec& spec) {
    std::size_t m = spec.m(), n = spec.n();
    auto top = spec.top(), bottom = spec.bottom();
    auto sums = spec.row_sums();
    std::size_t V = (m - 2) * n;
    auto var = [&](std::size_t i, std::size_t j) { return (i - 1) * n + j; };
    // Each linear form is coeffs over V plus a constant: value = coeffs.x + c.
    struct Form {
        std::vector<Rational> a;
        Rational c;
    };
    auto entry = [&](std::size_t i, std::size_t j) {
        Form f{std::vector<Rational>(V, 0), 0};
        if (i == 0) f.c = bottom[j];
        else if (i == m - 1) f.c = top[j];
        else f.a[var(i, j)] = 1;
        return f;
    };
    auto diff = [](Form x, const Form& y) {
        for (std::size_t t = 0; t < x.a.size(); ++t) x.a[t] -= y.a[t];
        x.c -= y.c;
        return x;
    };
    std::vector<Form> ineq;  // form >= 0
    for (std::size_t i = 0; i + 1 < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ineq.push_back(diff(entry(i + 1, j), entry(i, j)));
            if (j + 1 < n) ineq.push_back(diff(entry(i, j), entry(i + 1, j + 1)));
        }
    std::vector<Form> eq;
    for (std::size_t i = 1; i + 1 < m; ++i) {
        Form f{std::vector<Rational>(V, 0), -Rational(sums[i])};
        for (std::size_t j = 0; j < n; ++j) f.a[var(i, j)] = 1;
        eq.push_back(f);
    }
    std::set<GTPattern> out;
    auto to_pattern = [&](const std::vector<Rational>& x) {
        GTPattern p(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto f = entry(i, j);
                Rational v = f.c;
                for (std::size_t t = 0; t < V; ++t) v += f.a[t] * x[t];
                p(i, j) = v;
            }
        return p;
    };
    if (V == 0) {
        GTPattern p = to_pattern({});
        if (gtpoly::contains(spec, p)) out.insert(p);
        return out;
    }
    std::size_t need = V > eq.size() ? V - eq.size() : 0;
    for_each_subset(ineq.size(), need, [&](const std::vector<std::size_t>& sub) {
        QRows a;
        std::vector<Rational> b;
        for (const auto& e : eq) {
            a.push_back(e.a);
            b.push_back(-e.c);
        }
        for (auto s : sub) {
            a.push_back(ineq[s].a);
            b.push_back(-ineq[s].c);
        }
        auto x = solve(a, b);
        if (!x) return;
        auto p = to_pattern(*x);
        if (gtpoly::contains(spec, p)) out.insert(p);
    });
    return out;
}

}  // namespace oracle
