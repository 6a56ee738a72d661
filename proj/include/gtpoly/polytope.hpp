#pragma once

// Lattice points, vertices (double description), integrality, IDP and
// pulling triangulations of GT-polytopes.

#include "gtpoly/core.hpp"
#include "gtpoly/linalg.hpp"
#include "gtpoly/spec.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <numeric>
#include <set>
#include <type_traits>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace gtpoly {

using IntRows = std::vector<std::vector<std::int64_t>>;

namespace detail {

constexpr std::int64_t kNoBound = INT64_MAX / 4;

// Per-cell bounds implied by the boundary rows alone.
struct CellBounds {
    std::vector<std::vector<std::int64_t>> lo, hi;
    bool ok = true;
};

inline CellBounds cell_bounds(const std::vector<std::int64_t>& top, const std::vector<std::int64_t>& bottom,
                              std::size_t m) {
    std::size_t n = top.size();
    CellBounds b;
    b.lo.assign(m, std::vector<std::int64_t>(n));
    b.hi.assign(m, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t up = j + (m - 1 - i);
            std::int64_t lo = std::max(bottom[j], up < n ? top[up] : 0);
            std::int64_t hi = std::min(top[j], j >= i ? bottom[j - i] : kNoBound);
            if (i == 0) lo = hi = bottom[j];
            if (i + 1 == m) lo = hi = top[j];
            b.lo[i][j] = lo;
            b.hi[i][j] = hi;
            if (lo > hi) b.ok = false;
        }
    if (m == 1 && top != bottom) b.ok = false;
    return b;
}

inline bool interlaces(const std::vector<std::int64_t>& upper, const std::vector<std::int64_t>& lower) {
    for (std::size_t j = 0; j < upper.size(); ++j) {
        if (upper[j] < lower[j]) return false;
        if (j + 1 < upper.size() && lower[j] < upper[j + 1]) return false;
    }
    return true;
}

}  // namespace detail

/// Calls f(rows) for every integral point in canonical order (rows compared
/// lexicographically, bottom row first). f returns false to stop early.
template <typename F>
void for_each_lattice_point(const PolytopeSpec& spec, F&& f) {
    if (!spec.balanced()) return;
    std::size_t m = spec.m(), n = spec.n();
    auto top = spec.top(), bottom = spec.bottom();
    auto b = detail::cell_bounds(top, bottom, m);
    if (!b.ok) return;
    std::vector<std::int64_t> sums;
    if (spec.weight) sums = spec.row_sums();
    IntRows x(m, std::vector<std::int64_t>(n, 0));
    x[0] = bottom;
    x[m - 1] = top;
    if (m == 1) {
        f(static_cast<const IntRows&>(x));
        return;
    }
    bool stop = false;

    std::function<void(std::size_t)> row_rec;
    std::function<void(std::size_t, std::size_t, std::int64_t)> cell_rec;

    auto finish = [&]() {
        if (!detail::interlaces(x[m - 1], x[m - 2])) return;
        if (spec.weight) {
            std::int64_t s = 0;
            for (auto v : x[m - 1]) s += v;
            if (s != sums[m - 1]) return;
        }
        if (!f(static_cast<const IntRows&>(x))) stop = true;
    };

    // Per-row bounds depend only on the row below, so they are computed
    // once per row and reused while filling its cells.
    std::vector<std::vector<std::int64_t>> row_lo(m, std::vector<std::int64_t>(n)), row_hi = row_lo,
                                                     row_slo(m, std::vector<std::int64_t>(n + 1)), row_shi = row_slo;
    row_rec = [&](std::size_t i) {
        if (stop) return;
        if (i == m - 1) {
            finish();
            return;
        }
        auto& rl = row_lo[i];
        auto& rh = row_hi[i];
        for (std::size_t j = 0; j < n; ++j) {
            rl[j] = std::max(b.lo[i][j], x[i - 1][j]);
            rh[j] = std::min(b.hi[i][j], j > 0 ? x[i - 1][j - 1] : detail::kNoBound);
            if (rl[j] > rh[j]) return;
        }
        auto& sl = row_slo[i];
        auto& sh = row_shi[i];
        sl[n] = sh[n] = 0;
        for (std::size_t j = n; j-- > 0;) {
            sl[j] = sl[j + 1] + rl[j];
            sh[j] = sh[j + 1] + rh[j];
        }
        cell_rec(i, 0, 0);
    };
    cell_rec = [&](std::size_t i, std::size_t j, std::int64_t partial) {
        if (stop) return;
        if (j == n) {
            row_rec(i + 1);
            return;
        }
        std::int64_t lo_v = row_lo[i][j], hi_v = row_hi[i][j];
        if (spec.weight) {
            std::int64_t need = sums[i] - partial;
            lo_v = std::max(lo_v, need - row_shi[i][j + 1]);
            hi_v = std::min(hi_v, need - row_slo[i][j + 1]);
        }
        for (std::int64_t v = lo_v; v <= hi_v && !stop; ++v) {
            x[i][j] = v;
            cell_rec(i, j + 1, partial + v);
        }
    };
    row_rec(1);
}

inline std::vector<GTPattern> enumerate_lattice_points(const PolytopeSpec& spec) {
    std::vector<GTPattern> out;
    for_each_lattice_point(spec, [&](const IntRows& x) {
        out.push_back(GTPattern::from_integers(x));
        return true;
    });
    return out;
}

inline std::size_t count_lattice_points(const PolytopeSpec& spec) {
    std::size_t c = 0;
    for_each_lattice_point(spec, [&](const IntRows&) {
        ++c;
        return true;
    });
    return c;
}

/// Integral patterns of the weightless polytope with m rows, entries capped
/// at bound.
inline std::vector<GTPattern> weightless_points(const SkewShape& shape, std::size_t m, std::int64_t bound) {
    if (bound < shape.columns()) throw DomainError("bound must be at least lambda_1");
    return enumerate_lattice_points(PolytopeSpec::weightless(shape, m));
}

// ---------------------------------------------------------------------------
// H-description in reduced coordinates
// ---------------------------------------------------------------------------

/// The polytope as {z : a0 + a.z >= 0} with every pattern entry an integral
/// affine function of z. z is a subset of the entries, so integrality of z
/// and of the pattern coincide.
struct HRep {
    bool feasible = true;
    std::size_t m = 0, n = 0, dim = 0;
    std::vector<std::pair<std::size_t, std::size_t>> vars;   // entry of each z coordinate
    std::vector<std::vector<Integer>> expr;                   // m*n entries, [const, coeffs...]
    std::vector<std::vector<Integer>> ineq;                   // [a0, a...]
    std::vector<std::int64_t> var_lo;                         // lower bound of each z coordinate

    GTPattern point(const std::vector<Rational>& z) const {
        GTPattern p(m, n);
        for (std::size_t c = 0; c < m * n; ++c) {
            Rational v = Rational(expr[c][0]);
            for (std::size_t t = 0; t < dim; ++t)
                if (expr[c][t + 1] != 0) v += Rational(expr[c][t + 1]) * z[t];
            p(c / n, c % n) = v;
        }
        return p;
    }
};

inline HRep build_hrep(const PolytopeSpec& spec) {
    HRep h;
    h.m = spec.m();
    h.n = spec.n();
    std::size_t m = h.m, n = h.n;
    auto b = detail::cell_bounds(spec.top(), spec.bottom(), m);
    if (!b.ok || !spec.balanced()) {
        h.feasible = false;
        return h;
    }
    std::vector<std::int64_t> sums;
    if (spec.weight) sums = spec.row_sums();

    // Which entries are z coordinates, which are solved from a row sum.
    std::vector<int> var_of(m * n, -1);
    std::vector<int> dependent(m, -1);
    for (std::size_t i = 1; i + 1 < m; ++i) {
        std::vector<std::size_t> free;
        for (std::size_t j = 0; j < n; ++j)
            if (b.lo[i][j] < b.hi[i][j]) free.push_back(j);
        if (spec.weight && !free.empty()) {
            dependent[i] = static_cast<int>(free.back());
            free.pop_back();
        }
        for (auto j : free) {
            var_of[i * n + j] = static_cast<int>(h.vars.size());
            h.vars.emplace_back(i, j);
        }
    }
    h.dim = h.vars.size();
    for (auto [i, j] : h.vars) h.var_lo.push_back(b.lo[i][j]);
    std::size_t D = h.dim + 1;
    h.expr.assign(m * n, std::vector<Integer>(D, 0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            auto& e = h.expr[i * n + j];
            if (var_of[i * n + j] >= 0) e[var_of[i * n + j] + 1] = 1;
            else if (static_cast<int>(j) != dependent[i]) e[0] = b.lo[i][j];
        }
        if (dependent[i] >= 0) {
            auto& e = h.expr[i * n + dependent[i]];
            e[0] = sums[i];
            for (std::size_t j = 0; j < n; ++j) {
                if (static_cast<int>(j) == dependent[i]) continue;
                for (std::size_t t = 0; t < D; ++t) e[t] -= h.expr[i * n + j][t];
            }
        }
        if (spec.weight) {
            std::vector<Integer> total(D, 0);
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t t = 0; t < D; ++t) total[t] += h.expr[i * n + j][t];
            bool constant = std::all_of(total.begin() + 1, total.end(), [](const Integer& v) { return v == 0; });
            if (constant && total[0] != sums[i]) {
                h.feasible = false;
                return h;
            }
        }
    }

    std::set<std::vector<Integer>> seen;
    // a - c >= 0 is dropped when the cell bounds already imply it.
    auto add = [&](std::size_t a, std::size_t c) {
        if (b.lo[a / n][a % n] >= b.hi[c / n][c % n]) return;
        std::vector<Integer> row(D);
        for (std::size_t t = 0; t < D; ++t) row[t] = h.expr[a][t] - h.expr[c][t];
        bool constant = std::all_of(row.begin() + 1, row.end(), [](const Integer& v) { return v == 0; });
        if (constant) {
            if (row[0] < 0) h.feasible = false;
            return;
        }
        if (seen.insert(row).second) h.ineq.push_back(std::move(row));
    };
    // Explicit cell bounds, so that the dropped links stay implied.
    for (std::size_t c = 0; c < m * n; ++c) {
        bool constant = std::all_of(h.expr[c].begin() + 1, h.expr[c].end(), [](const Integer& v) { return v == 0; });
        if (constant) continue;
        for (int side : {1, -1}) {
            std::vector<Integer> row(D);
            for (std::size_t t = 0; t < D; ++t) row[t] = side * h.expr[c][t];
            row[0] -= side * (side > 0 ? b.lo[c / n][c % n] : b.hi[c / n][c % n]);
            if (seen.insert(row).second) h.ineq.push_back(std::move(row));
        }
    }
    for (std::size_t i = 0; i + 1 < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            add((i + 1) * n + j, i * n + j);
            if (j + 1 < n) add(i * n + j, (i + 1) * n + j + 1);
        }
    return h;
}

// ---------------------------------------------------------------------------
// Double description
// ---------------------------------------------------------------------------

namespace detail {

struct Bits {
    std::vector<std::uint64_t> w;
    Bits() = default;
    explicit Bits(std::size_t nbits) : w((nbits + 63) / 64, 0) {}
    void set(std::size_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return (w[i / 64] >> (i % 64)) & 1; }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
    Bits operator&(const Bits& o) const {
        Bits r = *this;
        for (std::size_t i = 0; i < w.size(); ++i) r.w[i] &= o.w[i];
        return r;
    }
    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    friend bool operator==(const Bits&, const Bits&) = default;
    friend bool operator<(const Bits& a, const Bits& b) { return a.w < b.w; }
};

struct BitsHash {
    std::size_t operator()(const Bits& b) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : b.w) h = (h ^ x) * 1099511628211ull;
        return h;
    }
};

struct Overflow {};

// Checked int64 arithmetic for the fast path; Integer for the fallback.
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline Integer mul(const Integer& a, const Integer& b) { return a * b; }
inline Integer add(const Integer& a, const Integer& b) { return a + b; }
inline std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline Integer gcd_of(const Integer& a, const Integer& b) { return gcd(a, b); }
inline int sign_of(std::int64_t a) { return (a > 0) - (a < 0); }
inline int sign_of(const Integer& a) { return a.sign(); }

template <typename T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
    T s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s = add(s, mul(a[i], b[i]));
    return s;
}

template <typename T>
void make_primitive(std::vector<T>& v) {
    T g = 0;
    for (const auto& x : v) g = gcd_of(g, x < 0 ? T(-x) : x);
    if (g > 1)
        for (auto& x : v) x /= g;
}

// Extreme rays of the pointed cone {y : A y >= 0}.
template <typename T>
std::vector<std::vector<T>> extreme_rays_t(const std::vector<std::vector<T>>& A, std::size_t D) {
    std::size_t K = A.size();
    // Pick D independent rows by incremental fraction-free elimination,
    // then take the columns of the inverse of that block as the first rays.
    auto combine = [](std::vector<T>& v, const std::vector<T>& e, std::size_t l) {
        T a = e[l], b = v[l];
        for (std::size_t t = 0; t < v.size(); ++t) v[t] = add(mul(a, v[t]), mul(T(-b), e[t]));
        make_primitive(v);
    };
    std::vector<std::size_t> basis;
    {
        std::vector<std::vector<T>> echelon;
        std::vector<std::size_t> lead;
        for (std::size_t r = 0; r < K && basis.size() < D; ++r) {
            std::vector<T> v = A[r];
            for (std::size_t e = 0; e < echelon.size(); ++e)
                if (v[lead[e]] != 0) combine(v, echelon[e], lead[e]);
            std::size_t l = 0;
            while (l < D && v[l] == 0) ++l;
            if (l == D) continue;
            echelon.push_back(std::move(v));
            lead.push_back(l);
            basis.push_back(r);
        }
        if (basis.size() < D) throw DomainError("constraint cone is not pointed");
    }
    std::vector<std::vector<T>> M(D, std::vector<T>(2 * D, T(0)));
    for (std::size_t i = 0; i < D; ++i) {
        for (std::size_t t = 0; t < D; ++t) M[i][t] = A[basis[i]][t];
        M[i][D + i] = 1;
    }
    for (std::size_t c = 0; c < D; ++c) {
        std::size_t piv = c;
        while (M[piv][c] == 0) ++piv;
        std::swap(M[piv], M[c]);
        for (std::size_t i = 0; i < D; ++i)
            if (i != c && M[i][c] != 0) combine(M[i], M[c], c);
    }
    T L = 1;
    for (std::size_t i = 0; i < D; ++i) {
        if (sign_of(M[i][i]) < 0)
            for (auto& v : M[i]) v = -v;
        L = mul(L / gcd_of(L, M[i][i]), M[i][i]);
    }
    std::vector<std::vector<T>> rays;
    std::vector<Bits> zeros;
    for (std::size_t i = 0; i < D; ++i) {
        std::vector<T> z(D);
        for (std::size_t t = 0; t < D; ++t) z[t] = mul(M[t][D + i], T(L / M[t][t]));
        make_primitive(z);
        Bits zs(K);
        for (std::size_t k = 0; k < D; ++k)
            if (k != i) zs.set(basis[k]);
        rays.push_back(std::move(z));
        zeros.push_back(std::move(zs));
    }
    std::vector<bool> done(K, false);
    for (auto r : basis) done[r] = true;

    // Each round adds the pending row that creates the fewest candidate
    // pairs; the order barely matters for correctness but a lot for size.
    for (std::size_t round = D; round < K; ++round) {
        std::size_t r = K, best_cost = SIZE_MAX;
        for (std::size_t c = 0; c < K; ++c) {
            if (done[c]) continue;
            std::size_t np = 0, nn = 0;
            for (const auto& ray : rays) {
                int sg = sign_of(dot(A[c], ray));
                np += sg > 0;
                nn += sg < 0;
            }
            if (np * nn < best_cost) {
                best_cost = np * nn;
                r = c;
                if (best_cost == 0) break;
            }
        }
        done[r] = true;
        std::vector<T> val(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t q = 0; q < rays.size(); ++q) {
            val[q] = dot(A[r], rays[q]);
            int sg = sign_of(val[q]);
            if (sg > 0) pos.push_back(q);
            else if (sg < 0) neg.push_back(q);
            else zeros[q].set(r);
        }
        if (neg.empty()) continue;

        std::vector<std::vector<T>> new_rays;
        std::vector<Bits> new_zeros;
        for (auto p : pos)
            for (auto q : neg) {
                Bits common = zeros[p] & zeros[q];
                if (common.count() + 2 < D) continue;
                bool adjacent = true;
                for (std::size_t o = 0; o < rays.size() && adjacent; ++o)
                    if (o != p && o != q && common.subset_of(zeros[o])) adjacent = false;
                if (!adjacent) continue;
                std::vector<T> nr(D);
                for (std::size_t t = 0; t < D; ++t) nr[t] = add(mul(val[p], rays[q][t]), mul(T(-val[q]), rays[p][t]));
                make_primitive(nr);
                common.set(r);
                new_rays.push_back(std::move(nr));
                new_zeros.push_back(std::move(common));
            }
        std::vector<std::vector<T>> kept;
        std::vector<Bits> kept_zeros;
        for (std::size_t q = 0; q < rays.size(); ++q)
            if (sign_of(val[q]) >= 0) {
                kept.push_back(std::move(rays[q]));
                kept_zeros.push_back(std::move(zeros[q]));
            }
        for (std::size_t q = 0; q < new_rays.size(); ++q) {
            kept.push_back(std::move(new_rays[q]));
            kept_zeros.push_back(std::move(new_zeros[q]));
        }
        rays = std::move(kept);
        zeros = std::move(kept_zeros);
    }
    return rays;
}

/// Exact extreme rays; tries 64-bit arithmetic first.
inline std::vector<std::vector<Integer>> extreme_rays(const std::vector<std::vector<Integer>>& A, std::size_t D) {
    try {
        std::vector<std::vector<std::int64_t>> small;
        for (const auto& row : A) {
            std::vector<std::int64_t> r;
            for (const auto& v : row) {
                if (v > INT64_MAX / 4 || v < -(INT64_MAX / 4)) throw Overflow{};
                r.push_back(v.convert_to<std::int64_t>());
            }
            small.push_back(std::move(r));
        }
        std::vector<std::vector<Integer>> out;
        for (const auto& ray : extreme_rays_t(small, D)) out.emplace_back(ray.begin(), ray.end());
        return out;
    } catch (const Overflow&) {
        return extreme_rays_t(A, D);
    }
}

}  // namespace detail

struct VertexSet {
    HRep h;
    std::vector<GTPattern> vertices;          // canonical order
    std::vector<std::vector<Rational>> z;     // reduced coordinates, same order

    bool empty() const { return vertices.empty(); }
    bool integral() const {
        if (vertices.empty()) return false;
        return std::all_of(vertices.begin(), vertices.end(), [](const GTPattern& p) { return p.is_integral(); });
    }
};

namespace detail {

inline Rational eval_row(const std::vector<Integer>& row, const std::vector<Rational>& z) {
    Rational s = Rational(row[0]);
    for (std::size_t t = 0; t < z.size(); ++t)
        if (row[t + 1] != 0) s += Rational(row[t + 1]) * z[t];
    return s;
}

// Phase one of the simplex method (Bland's rule) on u = z - lo >= 0.
// Returns a vertex of {z : a0 + A z >= 0}, or nothing if it is empty.
inline std::optional<std::vector<Rational>> initial_vertex(const HRep& h) {
    std::size_t K = h.ineq.size(), d = h.dim;
    std::vector<Rational> b(K);
    for (std::size_t i = 0; i < K; ++i) {
        Integer shift = h.ineq[i][0];
        for (std::size_t t = 0; t < d; ++t) shift += h.ineq[i][t + 1] * h.var_lo[t];
        b[i] = Rational(-shift);
    }
    // Columns: u (d), slack (K), artificial (one per row with b >= 0).
    std::vector<int> art_of(K, -1);
    std::size_t cols = d + K;
    for (std::size_t i = 0; i < K; ++i)
        if (b[i] >= 0) art_of[i] = static_cast<int>(cols++);
    QMatrix tab(K, std::vector<Rational>(cols + 1));
    std::vector<std::size_t> basis(K);
    for (std::size_t i = 0; i < K; ++i) {
        Rational sg = b[i] >= 0 ? 1 : -1;
        for (std::size_t t = 0; t < d; ++t) tab[i][t] = sg * Rational(h.ineq[i][t + 1]);
        tab[i][d + i] = -sg;
        tab[i][cols] = sg * b[i];
        if (art_of[i] >= 0) {
            tab[i][art_of[i]] = 1;
            basis[i] = art_of[i];
        } else {
            basis[i] = d + i;
        }
    }
    std::vector<Rational> cost(cols + 1);
    for (std::size_t i = 0; i < K; ++i)
        if (art_of[i] >= 0)
            for (std::size_t c = 0; c <= cols; ++c) cost[c] -= tab[i][c];
    for (std::size_t i = 0; i < K; ++i)
        if (art_of[i] >= 0) cost[art_of[i]] = 0;
    while (true) {
        std::size_t enter = cols;
        for (std::size_t c = 0; c < cols; ++c)
            if (cost[c] < 0) {
                enter = c;
                break;
            }
        if (enter == cols) break;
        std::size_t leave = K;
        Rational best;
        for (std::size_t i = 0; i < K; ++i) {
            if (tab[i][enter] <= 0) continue;
            Rational ratio = tab[i][cols] / tab[i][enter];
            if (leave == K || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == K) throw DomainError("phase one is unbounded");
        Rational inv = 1 / tab[leave][enter];
        for (auto& v : tab[leave]) v *= inv;
        for (std::size_t i = 0; i < K; ++i) {
            if (i == leave || tab[i][enter] == 0) continue;
            Rational f = tab[i][enter];
            for (std::size_t c = 0; c <= cols; ++c)
                if (tab[leave][c] != 0) tab[i][c] -= f * tab[leave][c];
        }
        if (cost[enter] != 0) {
            Rational f = cost[enter];
            for (std::size_t c = 0; c <= cols; ++c)
                if (tab[leave][c] != 0) cost[c] -= f * tab[leave][c];
        }
        basis[leave] = enter;
    }
    if (cost[cols] != 0) return std::nullopt;
    std::vector<Rational> z(d);
    for (std::size_t t = 0; t < d; ++t) z[t] = h.var_lo[t];
    for (std::size_t i = 0; i < K; ++i)
        if (basis[i] < d) z[basis[i]] += tab[i][cols];
    return z;
}

// Same walk with each vertex stored as an int64 vector over a common
// denominator; throws Overflow when the numbers get too large.
inline std::vector<std::vector<Rational>> walk_vertices_small(const HRep& h, const std::vector<Rational>& start) {
    std::size_t K = h.ineq.size(), d = h.dim;
    std::vector<std::vector<std::int64_t>> A(K);
    for (std::size_t i = 0; i < K; ++i)
        for (const auto& v : h.ineq[i]) {
            if (v > INT64_MAX / 4 || v < -(INT64_MAX / 4)) throw Overflow{};
            A[i].push_back(v.convert_to<std::int64_t>());
        }
    // v = num / den with num[0] = den (homogeneous coordinates), primitive.
    auto canon = [](std::vector<std::int64_t>& v) { make_primitive(v); };
    std::vector<std::int64_t> first(d + 1);
    {
        Integer den = 1;
        for (const auto& q : start) den = lcm(den, Integer(denominator(q)));
        if (den > INT64_MAX / 4) throw Overflow{};
        first[0] = den.convert_to<std::int64_t>();
        for (std::size_t t = 0; t < d; ++t) {
            Integer v = Integer(numerator(start[t])) * (den / Integer(denominator(start[t])));
            if (v > INT64_MAX / 4 || v < -(INT64_MAX / 4)) throw Overflow{};
            first[t + 1] = v.convert_to<std::int64_t>();
        }
        canon(first);
    }
    struct VecHash64 {
        std::size_t operator()(const std::vector<std::int64_t>& v) const {
            std::size_t x = 1469598103934665603ull;
            for (auto e : v) x = (x ^ static_cast<std::size_t>(e)) * 1099511628211ull;
            return x;
        }
    };
    std::unordered_set<std::vector<std::int64_t>, VecHash64> seen{first};
    std::vector<std::vector<std::int64_t>> queue{first};
    std::vector<std::int64_t> slack(K);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const auto v = queue[qi];
        std::vector<std::vector<std::int64_t>> tight;
        for (std::size_t i = 0; i < K; ++i) {
            slack[i] = dot(A[i], v);  // slack times den
            if (slack[i] == 0) tight.emplace_back(A[i].begin() + 1, A[i].end());
        }
        for (const auto& ray : extreme_rays_t(tight, d)) {
            // step = slack_i / (den * -rate_i), minimized over falling rows.
            std::int64_t best_p = -1, best_q = 1;
            for (std::size_t i = 0; i < K; ++i) {
                if (slack[i] == 0) continue;
                std::int64_t rate = 0;
                for (std::size_t t = 0; t < d; ++t)
                    if (ray[t] != 0 && A[i][t + 1] != 0) rate = add(rate, mul(A[i][t + 1], ray[t]));
                if (rate >= 0) continue;
                std::int64_t p = slack[i], q = -rate;
                if (best_p < 0 || mul(p, best_q) < mul(best_p, q)) {
                    best_p = p;
                    best_q = q;
                }
            }
            if (best_p < 0) throw DomainError("polytope is unbounded");
            // new = v + (best_p / (den * best_q)) * ray, homogeneous:
            // (v * best_q + best_p * (0, ray)) over den * best_q.
            std::vector<std::int64_t> nb(d + 1);
            nb[0] = mul(v[0], best_q);
            for (std::size_t t = 0; t < d; ++t) nb[t + 1] = add(mul(v[t + 1], best_q), mul(best_p, ray[t]));
            canon(nb);
            if (seen.insert(nb).second) queue.push_back(std::move(nb));
        }
    }
    std::vector<std::vector<Rational>> out;
    for (const auto& v : queue) {
        std::vector<Rational> z(d);
        for (std::size_t t = 0; t < d; ++t) z[t] = Rational(v[t + 1], v[0]);
        out.push_back(std::move(z));
    }
    return out;
}

// Vertices of a bounded polyhedron by walking its edge graph. The edges
// at each vertex are the extreme rays of its tangent cone, found by double
// description on the tight rows.
inline std::vector<std::vector<Rational>> walk_vertices(const HRep& h, std::vector<Rational> start) {
    std::set<std::vector<Rational>> seen{start};
    std::vector<std::vector<Rational>> queue{std::move(start)};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const auto v = queue[qi];
        std::vector<Rational> slack(h.ineq.size());
        std::vector<std::vector<Integer>> tight;
        for (std::size_t i = 0; i < h.ineq.size(); ++i) {
            slack[i] = eval_row(h.ineq[i], v);
            if (slack[i] == 0) {
                std::vector<Integer> row(h.ineq[i].begin() + 1, h.ineq[i].end());
                tight.push_back(std::move(row));
            }
        }
        for (const auto& ray : extreme_rays(tight, h.dim)) {
            std::optional<Rational> step;
            for (std::size_t i = 0; i < h.ineq.size(); ++i) {
                if (slack[i] == 0) continue;
                Integer rate = 0;
                for (std::size_t t = 0; t < h.dim; ++t)
                    if (ray[t] != 0 && h.ineq[i][t + 1] != 0) rate += h.ineq[i][t + 1] * ray[t];
                if (rate >= 0) continue;
                Rational s = slack[i] / Rational(-rate);
                if (!step || s < *step) step = s;
            }
            if (!step) throw DomainError("polytope is unbounded");
            std::vector<Rational> nb(v);
            for (std::size_t t = 0; t < h.dim; ++t) nb[t] += *step * Rational(ray[t]);
            if (seen.insert(nb).second) queue.push_back(std::move(nb));
        }
    }
    return queue;
}

inline VertexSet finish_vertex_set(HRep h, std::vector<std::vector<Rational>> zs) {
    VertexSet out;
    std::vector<std::pair<GTPattern, std::vector<Rational>>> pairs;
    for (auto& z : zs) pairs.emplace_back(h.point(z), std::move(z));
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [p, z] : pairs) {
        out.vertices.push_back(std::move(p));
        out.z.push_back(std::move(z));
    }
    out.h = std::move(h);
    return out;
}

}  // namespace detail

/// Vertices by one global double-description run on the homogenized cone.
/// Exact but prone to large intermediate ray sets; compute_vertices is the
/// default.
inline VertexSet compute_vertices_global(const PolytopeSpec& spec) {
    HRep h = build_hrep(spec);
    std::vector<std::vector<Rational>> zs;
    if (!h.feasible) return detail::finish_vertex_set(std::move(h), {});
    if (h.dim == 0) {
        zs.emplace_back();
    } else {
        std::vector<std::vector<Integer>> A = h.ineq;
        std::vector<Integer> t_row(h.dim + 1, 0);
        t_row[0] = 1;
        A.push_back(t_row);
        for (const auto& ray : detail::extreme_rays(A, h.dim + 1)) {
            if (ray[0] <= 0) continue;
            std::vector<Rational> z(h.dim);
            for (std::size_t t = 0; t < h.dim; ++t) z[t] = Rational(ray[t + 1], ray[0]);
            zs.push_back(std::move(z));
        }
    }
    return detail::finish_vertex_set(std::move(h), std::move(zs));
}

/// All vertices, in canonical order.
inline VertexSet compute_vertices(const PolytopeSpec& spec) {
    HRep h = build_hrep(spec);
    if (!h.feasible) return detail::finish_vertex_set(std::move(h), {});
    if (h.dim == 0) return detail::finish_vertex_set(std::move(h), {{}});
    auto start = detail::initial_vertex(h);
    if (!start) return detail::finish_vertex_set(std::move(h), {});
    std::vector<std::vector<Rational>> zs;
    try {
        zs = detail::walk_vertices_small(h, *start);
    } catch (const detail::Overflow&) {
        zs = detail::walk_vertices(h, std::move(*start));
    }
    return detail::finish_vertex_set(std::move(h), std::move(zs));
}

inline std::vector<GTPattern> enumerate_vertices(const PolytopeSpec& spec) { return compute_vertices(spec).vertices; }

inline bool is_empty(const PolytopeSpec& spec) { return compute_vertices(spec).empty(); }

inline bool is_integral(const PolytopeSpec& spec) { return compute_vertices(spec).integral(); }

/// Affine dimension of the polytope (-1 when empty).
inline int polytope_dimension(const VertexSet& vs) {
    if (vs.empty()) return -1;
    QMatrix diffs;
    for (std::size_t v = 1; v < vs.z.size(); ++v) {
        std::vector<Rational> d(vs.h.dim);
        for (std::size_t t = 0; t < vs.h.dim; ++t) d[t] = vs.z[v][t] - vs.z[0][t];
        diffs.push_back(std::move(d));
    }
    return static_cast<int>(rank(diffs));
}

namespace detail {
inline ZMatrix edge_matrix(const std::vector<std::vector<Rational>>& z, const std::vector<std::size_t>& idx) {
    ZMatrix e;
    for (std::size_t a = 1; a < idx.size(); ++a) {
        std::vector<Integer> row;
        for (std::size_t t = 0; t < z[idx[0]].size(); ++t) row.push_back(to_int64(z[idx[a]][t] - z[idx[0]][t]));
        e.push_back(std::move(row));
    }
    return e;
}
}  // namespace detail

/// Normalized volume of a simplex with integral vertices (reduced
/// coordinates), measured in the lattice of its own affine hull.
inline Integer normalized_simplex_volume(const std::vector<std::vector<Rational>>& z, const std::vector<std::size_t>& idx) {
    return lattice_index(detail::edge_matrix(z, idx));
}

inline bool is_unimodular_simplex(const PolytopeSpec& spec) {
    auto vs = compute_vertices(spec);
    if (!vs.integral()) return false;
    int d = polytope_dimension(vs);
    if (static_cast<int>(vs.vertices.size()) != d + 1) return false;
    std::vector<std::size_t> idx(vs.vertices.size());
    std::iota(idx.begin(), idx.end(), 0);
    return normalized_simplex_volume(vs.z, idx) == 1;
}

// ---------------------------------------------------------------------------
// Integer decomposition property
// ---------------------------------------------------------------------------

struct IdpVerdict {
    bool holds = true;
    std::int64_t checked_up_to = 1;
    std::optional<GTPattern> counterexample;
    std::int64_t counterexample_k = 0;
};

namespace detail {
inline bool gt_valid(const std::vector<std::int64_t>& flat, std::size_t m, std::size_t n) {
    for (std::size_t i = 0; i + 1 < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (flat[(i + 1) * n + j] < flat[i * n + j]) return false;
            if (j + 1 < n && flat[i * n + j] < flat[(i + 1) * n + j + 1]) return false;
        }
    return true;
}
struct VecHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};
}  // namespace detail

/// Checks that every lattice point of P^k, 2 <= k <= max_k, is a sum of k
/// lattice points of P. Requires an integral polytope.
inline IdpVerdict idp_check(const PolytopeSpec& spec, std::int64_t max_k, bool assume_integral = false) {
    if (spec.k != 1) throw MalformedInput("idp_check expects an undilated spec");
    if (!assume_integral && !is_integral(spec)) throw DomainError("idp_check requires an integral polytope");
    std::size_t m = spec.m(), n = spec.n();
    std::vector<std::vector<std::int64_t>> base;
    for_each_lattice_point(spec, [&](const IntRows& x) {
        std::vector<std::int64_t> flat;
        for (const auto& r : x) flat.insert(flat.end(), r.begin(), r.end());
        base.push_back(std::move(flat));
        return true;
    });
    // known[k] holds remainders already decided for P^k.
    std::vector<std::unordered_map<std::vector<std::int64_t>, bool, detail::VecHash>> known(max_k + 1);
    std::function<bool(const std::vector<std::int64_t>&, std::int64_t)> decomposes =
        [&](const std::vector<std::int64_t>& x, std::int64_t k) -> bool {
        if (k == 1) return detail::gt_valid(x, m, n);
        auto it = known[k].find(x);
        if (it != known[k].end()) return it->second;
        bool ok = false;
        std::vector<std::int64_t> rest(x.size());
        for (const auto& hpt : base) {
            bool nonneg = true;
            for (std::size_t c = 0; c < x.size(); ++c) rest[c] = x[c] - hpt[c];
            for (auto v : rest)
                if (v < 0) nonneg = false;
            if (!nonneg || !detail::gt_valid(rest, m, n)) continue;
            if (decomposes(rest, k - 1)) {
                ok = true;
                break;
            }
        }
        known[k][x] = ok;
        return ok;
    };
    IdpVerdict verdict;
    if (base.empty()) return verdict;
    for (std::int64_t k = 2; k <= max_k; ++k) {
        for_each_lattice_point(spec.dilated(k), [&](const IntRows& x) {
            std::vector<std::int64_t> flat;
            for (const auto& r : x) flat.insert(flat.end(), r.begin(), r.end());
            if (!decomposes(flat, k)) {
                verdict.holds = false;
                verdict.counterexample = GTPattern::from_integers(x);
                verdict.counterexample_k = k;
                return false;
            }
            return true;
        });
        if (!verdict.holds) return verdict;
        verdict.checked_up_to = k;
    }
    return verdict;
}

// ---------------------------------------------------------------------------
// Pulling triangulation
// ---------------------------------------------------------------------------

struct Simplex {
    std::vector<std::size_t> vertices;  // indices into the canonical vertex list
    Integer normalized_volume = 0;
};

struct Triangulation {
    bool complete = true;               // false if the budget ran out
    std::vector<GTPattern> vertices;    // canonical vertex list
    std::vector<Simplex> simplices;
    int dimension = -1;
};

struct TriangulationBudget {
    std::chrono::steady_clock::time_point deadline = std::chrono::steady_clock::time_point::max();
    std::size_t max_simplices = SIZE_MAX;
};

/// Pulling triangulation. order lists vertex indices (into the canonical
/// vertex list); at every face the vertex appearing last in order is pulled.
/// An empty order means canonical order.
inline Triangulation pulling_triangulation(const PolytopeSpec& spec, std::vector<std::size_t> order = {},
                                           const TriangulationBudget& budget = {}) {
    auto vs = compute_vertices(spec);
    if (!vs.integral()) throw DomainError("pulling_triangulation requires an integral polytope");
    Triangulation tri;
    tri.vertices = vs.vertices;
    tri.dimension = polytope_dimension(vs);
    std::size_t V = vs.vertices.size();
    if (order.empty()) {
        order.resize(V);
        std::iota(order.begin(), order.end(), 0);
    }
    if (order.size() != V) throw MalformedInput("vertex order must be a permutation of the vertices");
    std::vector<std::size_t> rank_of(V, SIZE_MAX);
    for (std::size_t r = 0; r < V; ++r) {
        if (order[r] >= V || rank_of[order[r]] != SIZE_MAX) throw MalformedInput("vertex order is not a permutation");
        rank_of[order[r]] = r;
    }

    using detail::Bits;
    const auto& h = vs.h;
    std::vector<Bits> tight;
    for (const auto& row : h.ineq) {
        Bits b(V);
        for (std::size_t v = 0; v < V; ++v) {
            Rational s = Rational(row[0]);
            for (std::size_t t = 0; t < h.dim; ++t)
                if (row[t + 1] != 0) s += Rational(row[t + 1]) * vs.z[v][t];
            if (s == 0) b.set(v);
        }
        tight.push_back(std::move(b));
    }
    auto members = [&](const Bits& f) {
        std::vector<std::size_t> out;
        for (std::size_t v = 0; v < V; ++v)
            if (f.test(v)) out.push_back(v);
        return out;
    };
    std::unordered_map<Bits, int, detail::BitsHash> dim_memo;
    auto face_dim = [&](const Bits& f) {
        auto it = dim_memo.find(f);
        if (it != dim_memo.end()) return it->second;
        auto mem = members(f);
        int d = mem.empty() ? -1 : static_cast<int>(rank(detail::edge_matrix(vs.z, mem)));
        dim_memo.emplace(f, d);
        return d;
    };

    std::unordered_map<Bits, std::vector<Bits>, detail::BitsHash> memo;
    bool out_of_budget = false;
    std::size_t produced = 0;
    std::function<const std::vector<Bits>&(const Bits&)> delta = [&](const Bits& f) -> const std::vector<Bits>& {
        auto it = memo.find(f);
        if (it != memo.end()) return it->second;
        std::vector<Bits> result;
        int d = face_dim(f);
        auto mem = members(f);
        if (static_cast<int>(mem.size()) == d + 1) {
            result.push_back(f);
        } else if (!out_of_budget) {
            std::size_t pulled = *std::max_element(mem.begin(), mem.end(),
                                                   [&](std::size_t a, std::size_t b) { return rank_of[a] < rank_of[b]; });
            std::set<Bits> facets;
            for (const auto& t : tight) {
                Bits g = f & t;
                if (g == f || !g.any() || g.test(pulled)) continue;
                if (facets.count(g)) continue;
                if (face_dim(g) == d - 1) facets.insert(g);
            }
            for (const auto& g : facets) {
                for (const auto& s : delta(g)) {
                    Bits sp = s;
                    sp.set(pulled);
                    result.push_back(std::move(sp));
                    if (++produced > budget.max_simplices || std::chrono::steady_clock::now() > budget.deadline) {
                        out_of_budget = true;
                    }
                }
                if (out_of_budget) break;
            }
        }
        return memo.emplace(f, std::move(result)).first->second;
    };
    Bits all(V);
    for (std::size_t v = 0; v < V; ++v) all.set(v);
    const auto& simplices = delta(all);
    tri.complete = !out_of_budget;
    for (const auto& s : simplices) {
        Simplex sx;
        sx.vertices = members(s);
        sx.normalized_volume = normalized_simplex_volume(vs.z, sx.vertices);
        tri.simplices.push_back(std::move(sx));
    }
    return tri;
}

}  // namespace gtpoly
