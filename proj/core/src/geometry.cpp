#include "fq/geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace fq {

Rational rat_dot(const RatVec& a, const RatVec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

namespace {

// Row echelon form in place; returns pivot column per row.
std::vector<std::size_t> echelon(RatMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t rows = m.size();
    if (rows == 0) return pivots;
    std::size_t cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = m[r][c];
        for (auto& v : m[r]) v /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

int rat_rank(RatMat m) { return static_cast<int>(echelon(m).size()); }

std::optional<RatVec> solve_square(RatMat a, RatVec b) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    auto pivots = echelon(a);
    if (pivots.size() != n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        if (pivots[i] != i) return std::nullopt; // pivot in the rhs column
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

std::vector<RatVec> kernel_basis(RatMat m) {
    if (m.empty()) return {};
    const std::size_t cols = m[0].size();
    auto pivots = echelon(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RatVec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

int affine_rank(const std::vector<RatVec>& points) {
    if (points.size() <= 1) return 0;
    RatMat diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        RatVec d(points[i].size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
        diffs.push_back(std::move(d));
    }
    return rat_rank(std::move(diffs));
}

namespace {

// Positive rescale only: orientation (points on the <= side) is preserved.
void normalize_normal(RatVec& a, Rational& c) {
    BigInt lcm = 1;
    for (const auto& v : a) lcm = boost::multiprecision::lcm(lcm, denominator(v));
    BigInt g = 0;
    for (auto& v : a) {
        v *= lcm;
        g = boost::multiprecision::gcd(g, numerator(v));
    }
    c *= lcm;
    if (g != 0) {
        for (auto& v : a) v /= Rational(g);
        c /= Rational(g);
    }
}

void subsets_rec(std::size_t n, std::size_t k, std::size_t start,
                 std::vector<std::size_t>& cur,
                 const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (cur.size() == k) {
        fn(cur);
        return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
        cur.push_back(i);
        subsets_rec(n, k, i + 1, cur, fn);
        cur.pop_back();
    }
}

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> cur;
    subsets_rec(n, k, 0, cur, fn);
}

} // namespace

std::vector<Facet> enumerate_facets(const std::vector<RatVec>& points) {
    if (points.empty()) throw InvalidInput("facet enumeration of an empty point set");
    const std::size_t dim = points[0].size();
    if (affine_rank(points) != static_cast<int>(dim))
        throw InvalidInput("facet enumeration requires a full-dimensional point set");

    std::map<std::pair<std::vector<std::string>, std::string>, Facet> found;
    for_each_subset(points.size(), dim, [&](const std::vector<std::size_t>& idx) {
        RatMat diffs;
        for (std::size_t i = 1; i < idx.size(); ++i) {
            RatVec d(dim);
            for (std::size_t j = 0; j < dim; ++j)
                d[j] = points[idx[i]][j] - points[idx[0]][j];
            diffs.push_back(std::move(d));
        }
        RatMat diffs_copy = diffs;
        if (!diffs.empty() && static_cast<std::size_t>(rat_rank(std::move(diffs_copy))) !=
                                  dim - 1)
            return;
        auto kern = kernel_basis(std::move(diffs));
        if (dim == 1) kern = {RatVec{Rational(1)}};
        if (kern.size() != 1) return;
        RatVec a = kern[0];
        Rational c = rat_dot(a, points[idx[0]]);
        bool le = true, ge = true;
        for (const auto& p : points) {
            Rational v = rat_dot(a, p);
            if (v > c) le = false;
            if (v < c) ge = false;
        }
        if (!le && !ge) return;
        if (!le) {
            for (auto& v : a) v = -v;
            c = -c;
        }
        normalize_normal(a, c);
        std::vector<std::string> key;
        for (const auto& v : a) key.push_back(rational_to_string(v));
        found.insert({{key, rational_to_string(c)}, Facet{a, c}});
    });

    std::vector<Facet> out;
    for (auto& [k, f] : found) out.push_back(std::move(f));
    return out;
}

bool point_in_hull(const std::vector<RatVec>& points, const RatVec& x) {
    if (points.empty()) return false;
    const std::size_t dim = points[0].size();
    for (std::size_t k = 1; k <= std::min(points.size(), dim + 1); ++k) {
        bool hit = false;
        for_each_subset(points.size(), k, [&](const std::vector<std::size_t>& idx) {
            if (hit) return;
            // Solve sum t_i p_i = x, sum t_i = 1 on the subset's affine basis.
            RatMat sys(dim + 1, RatVec(k));
            RatVec rhs(dim + 1);
            for (std::size_t j = 0; j < k; ++j) {
                for (std::size_t i = 0; i < dim; ++i) sys[i][j] = points[idx[j]][i];
                sys[dim][j] = 1;
            }
            for (std::size_t i = 0; i < dim; ++i) rhs[i] = x[i];
            rhs[dim] = 1;
            // Least-structure exact solve: reduce the (dim+1) x k system.
            RatMat aug = sys;
            for (std::size_t i = 0; i <= dim; ++i) aug[i].push_back(rhs[i]);
            auto pivots = echelon(aug);
            // Consistency: no pivot in the last column. Underdetermined
            // systems proceed with free variables at zero; the explicit
            // verification below keeps that sound.
            for (auto p : pivots)
                if (p == k) return;
            RatVec t(k, Rational(0));
            for (std::size_t r = 0; r < pivots.size(); ++r) t[pivots[r]] = aug[r][k];
            // Verify (echelon may have dropped redundant rows) and check signs.
            for (const auto& ti : t)
                if (ti < 0) return;
            for (std::size_t i = 0; i <= dim; ++i) {
                Rational acc = 0;
                for (std::size_t j = 0; j < k; ++j) acc += sys[i][j] * t[j];
                if (acc != rhs[i]) return;
            }
            hit = true;
        });
        if (hit) return true;
    }
    return false;
}

Rational hull_distance_sq(const std::vector<RatVec>& points) {
    if (points.empty()) throw InvalidInput("hull distance of an empty point set");
    const std::size_t dim = points[0].size();
    std::optional<Rational> best;
    for (std::size_t k = 1; k <= std::min(points.size(), dim + 1); ++k) {
        for_each_subset(points.size(), k, [&](const std::vector<std::size_t>& idx) {
            // min t^T G t with sum t = 1: G t = s*1; the optimum value is s.
            RatMat sys(k + 1, RatVec(k + 1, Rational(0)));
            RatVec rhs(k + 1, Rational(0));
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = 0; j < k; ++j)
                    sys[i][j] = rat_dot(points[idx[i]], points[idx[j]]);
                sys[i][k] = -1;
                sys[k][i] = 1;
            }
            rhs[k] = 1;
            auto sol = solve_square(std::move(sys), std::move(rhs));
            if (!sol) return;
            for (std::size_t i = 0; i < k; ++i)
                if ((*sol)[i] < 0) return;
            Rational dist_sq = (*sol)[k];
            if (dist_sq < 0) return;
            if (!best || dist_sq < *best) best = dist_sq;
        });
    }
    if (!best) throw InvalidInput("hull distance minimization found no feasible face");
    return *best;
}

} // namespace fq
