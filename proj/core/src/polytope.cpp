#include "fq/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace fq {

namespace {

RatVec to_ratvec(const std::vector<std::int64_t>& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    return r;
}

} // namespace

AdaptedPolytope::AdaptedPolytope(std::shared_ptr<const RootSystem> group,
                                 std::vector<Weight> vertices)
    : group_(std::move(group)) {
    if (!group_) throw InvalidInput("polytope with null group");
    std::set<Weight> canon;
    for (const auto& v : vertices) canon.insert(group_->canonical(v));
    vertices_.assign(canon.begin(), canon.end());
    if (vertices_.empty()) throw InvalidInput("polytope has no vertices");

    // The list must be the exact vertex set: no member may be a convex
    // combination of the others.
    std::vector<RatVec> pts;
    for (const auto& v : vertices_) pts.push_back(to_ratvec(v.coords));
    for (std::size_t i = 0; i < pts.size() && pts.size() > 1; ++i) {
        std::vector<RatVec> others;
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (point_in_hull(others, pts[i]))
            throw InvalidInput("listed vertex " + vertices_[i].to_string() +
                               " is not extreme");
    }
}

void AdaptedPolytope::ensure_geometry() const {
    if (geometry_ready_) return;
    const int d = group_->total_rank();

    lattice_vertices_.clear();
    for (const auto& v : vertices_)
        lattice_vertices_.push_back(to_ratvec(group_->to_lattice_coords(v)));

    if (affine_rank(lattice_vertices_) != d)
        throw NotFullDimensional("polytope does not span the dual Cartan algebra");

    facets_ = enumerate_facets(lattice_vertices_);

    gram_.assign(d, RatVec(d, Rational(0)));
    const auto& basis = group_->lattice_basis();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) gram_[i][j] = Rational(basis[i].dot(basis[j]));

    one_faces_.clear();
    if (d == 1) {
        one_faces_.emplace_back(0, 1); // exactly two vertices in dimension one
    } else {
        for (std::size_t i = 0; i < lattice_vertices_.size(); ++i) {
            for (std::size_t j = i + 1; j < lattice_vertices_.size(); ++j) {
                RatMat active;
                for (const auto& f : facets_) {
                    if (rat_dot(f.normal, lattice_vertices_[i]) == f.offset &&
                        rat_dot(f.normal, lattice_vertices_[j]) == f.offset)
                        active.push_back(f.normal);
                }
                if (!active.empty() && rat_rank(std::move(active)) == d - 1)
                    one_faces_.emplace_back(i, j);
            }
        }
    }
    geometry_ready_ = true;
}

const std::vector<Facet>& AdaptedPolytope::facets() const {
    ensure_geometry();
    return facets_;
}

const std::vector<std::pair<std::size_t, std::size_t>>& AdaptedPolytope::one_faces() const {
    ensure_geometry();
    return one_faces_;
}

bool AdaptedPolytope::weight_strictly_inside(const Weight& w, std::int64_t n) const {
    ensure_geometry();
    if (!group_->in_lattice_span(w)) return false;
    RatVec y = to_ratvec(group_->to_lattice_coords(w));
    for (const auto& f : facets_)
        if (rat_dot(f.normal, y) >= f.offset * n) return false;
    return true;
}

Rational AdaptedPolytope::interior_margin_sq(const RatVec& y) const {
    ensure_geometry();
    std::optional<Rational> best;
    for (const auto& f : facets_) {
        Rational gap = f.offset - rat_dot(f.normal, y);
        if (gap < 0) gap = -gap;
        auto ginv_a = solve_square(gram_, f.normal);
        if (!ginv_a) throw InvalidInput("degenerate lattice metric");
        Rational nn = rat_dot(f.normal, *ginv_a);
        Rational d2 = gap * gap / nn;
        if (!best || d2 < *best) best = d2;
    }
    return *best;
}

RatVec AdaptedPolytope::ambient_to_lattice(const std::vector<double>& ambient,
                                           double* residual) const {
    ensure_geometry();
    const int d = group_->total_rank();
    const auto& basis = group_->lattice_basis();
    if (static_cast<int>(ambient.size()) != group_->ambient_dim())
        throw InvalidInput("point has the wrong ambient dimension");

    // Least squares through the integer Gram matrix, then rounded to exact
    // rationals with a fixed denominator for the facet tests.
    std::vector<double> rhs(d, 0.0);
    for (int i = 0; i < d; ++i)
        for (std::size_t k = 0; k < ambient.size(); ++k)
            rhs[i] += static_cast<double>(basis[i].coords[k]) * ambient[k];

    RatVec rb(d);
    for (int i = 0; i < d; ++i) {
        // denominators 2^40: exact double representation
        double scaled = std::ldexp(rhs[i], 40);
        rb[i] = Rational(BigInt(static_cast<long long>(std::llround(scaled))),
                         BigInt(1) << 40);
    }
    auto y = solve_square(gram_, rb);
    if (!y) throw InvalidInput("degenerate lattice metric");

    if (residual) {
        double r2 = 0.0;
        for (std::size_t k = 0; k < ambient.size(); ++k) {
            double back = 0.0;
            for (int i = 0; i < d; ++i)
                back += to_double((*y)[i]) * static_cast<double>(basis[i].coords[k]);
            double diff = ambient[k] - back;
            r2 += diff * diff;
        }
        *residual = std::sqrt(r2);
    }
    return *y;
}

AdaptedReport check_adapted(const AdaptedPolytope& P) {
    const RootSystem& rs = P.group();
    AdaptedReport rep;

    rep.vertices_regular_lattice = true;
    for (const auto& v : P.vertices()) {
        for (const auto& alpha : rs.positive_roots()) {
            if (v.dot(alpha) == 0) {
                rep.vertices_regular_lattice = false;
                break;
            }
        }
        if (!rep.vertices_regular_lattice) break;
    }

    rep.w_invariant = true;
    std::set<Weight> vset(P.vertices().begin(), P.vertices().end());
    for (const auto& v : P.vertices()) {
        for (std::size_t i = 0; i < rs.simple_roots().size(); ++i) {
            if (!vset.count(rs.reflect(v, i))) {
                rep.w_invariant = false;
                break;
            }
        }
        if (!rep.w_invariant) break;
    }

    const int d = rs.total_rank();
    rep.delzant = true;
    const auto& faces = P.one_faces(); // may throw NotFullDimensional
    for (std::size_t vi = 0; vi < P.vertices().size(); ++vi) {
        RatMat dirs;
        for (const auto& [a, b] : faces) {
            if (a != vi && b != vi) continue;
            std::size_t other = (a == vi) ? b : a;
            auto da = rs.to_lattice_coords(P.vertices()[other]);
            auto db = rs.to_lattice_coords(P.vertices()[vi]);
            std::vector<std::int64_t> dir(da.size());
            for (std::size_t k = 0; k < da.size(); ++k) dir[k] = da[k] - db[k];
            std::int64_t g = 0;
            for (auto c : dir) g = std::gcd(g, std::abs(c));
            if (g > 1)
                for (auto& c : dir) c /= g;
            dirs.push_back(to_ratvec(dir));
        }
        if (static_cast<int>(dirs.size()) != d) {
            rep.delzant = false;
            break;
        }
        // |det| of the primitive edge directions must be 1.
        RatMat m = dirs;
        Rational det = 1;
        for (int c = 0; c < d; ++c) {
            int piv = -1;
            for (int r = c; r < d; ++r)
                if (m[r][c] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) {
                det = 0;
                break;
            }
            if (piv != c) {
                std::swap(m[piv], m[c]);
                det = -det;
            }
            det *= m[c][c];
            for (int r = c + 1; r < d; ++r) {
                Rational f = m[r][c] / m[c][c];
                for (int k = c; k < d; ++k) m[r][k] -= f * m[c][k];
            }
        }
        if (det != 1 && det != -1) {
            rep.delzant = false;
            break;
        }
    }
    return rep;
}

AdaptedPolytope dilate(const AdaptedPolytope& P, std::int64_t n) {
    if (n < 1) throw InvalidInput("dilation factor must be a positive integer");
    std::vector<Weight> scaled;
    for (const auto& v : P.vertices()) scaled.push_back(v * n);
    return AdaptedPolytope(P.group_ptr(), std::move(scaled));
}

std::vector<Weight> one_skeleton_lattice_points(const AdaptedPolytope& P) {
    const RootSystem& rs = P.group();
    std::set<Weight> out;
    for (const auto& [ia, ib] : P.one_faces()) {
        const Weight& a = P.vertices()[ia];
        const Weight& b = P.vertices()[ib];
        Weight diff = b - a;
        std::int64_t g = 0;
        for (auto c : diff.coords) g = std::gcd(g, std::abs(c));
        if (g == 0) g = 1;
        Weight step = diff;
        for (auto& c : step.coords) c /= g;
        for (std::int64_t k = 0; k <= g; ++k) {
            Weight p = a + step * k;
            if (rs.in_lattice_span(p) && is_dominant(p, rs)) out.insert(p);
        }
    }
    return {out.begin(), out.end()};
}

WeightMultiset weight_system_of_P(const AdaptedPolytope& P) {
    auto rep = check_adapted(P);
    if (!rep.all())
        throw NotAdapted("polytope fails the adapted checks (regular=" +
                         std::to_string(rep.vertices_regular_lattice) +
                         ", W-invariant=" + std::to_string(rep.w_invariant) +
                         ", Delzant=" + std::to_string(rep.delzant) + ")");
    WeightMultiset ws;
    for (const auto& lam : one_skeleton_lattice_points(P))
        for (const auto& [w, m] : weight_multiplicities(lam, P.group())->counts)
            ws.add(w, m);
    return ws;
}

namespace {

struct ExpWeights {
    std::vector<std::vector<double>> alphas; // with multiplicity
    std::vector<double> counts;
};

ExpWeights exp_weights(const AdaptedPolytope& P) {
    ExpWeights ew;
    for (const auto& [w, m] : weight_system_of_P(P).counts) {
        std::vector<double> a(w.coords.begin(), w.coords.end());
        ew.alphas.push_back(std::move(a));
        ew.counts.push_back(static_cast<double>(m));
    }
    return ew;
}

double dot_d(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace

double potential_F(const AdaptedPolytope& P, const std::vector<double>& X) {
    auto ew = exp_weights(P);
    double mx = -std::numeric_limits<double>::infinity();
    std::vector<double> e(ew.alphas.size());
    for (std::size_t j = 0; j < ew.alphas.size(); ++j) {
        e[j] = dot_d(ew.alphas[j], X);
        mx = std::max(mx, e[j]);
    }
    double s = 0;
    for (std::size_t j = 0; j < e.size(); ++j) s += ew.counts[j] * std::exp(e[j] - mx);
    return mx + std::log(s);
}

std::vector<double> psi_T(const AdaptedPolytope& P, const std::vector<double>& Y) {
    if (static_cast<int>(Y.size()) != P.group().ambient_dim())
        throw InvalidInput("psi argument has the wrong ambient dimension");
    auto ew = exp_weights(P);
    std::vector<double> e(ew.alphas.size());
    double mx = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < ew.alphas.size(); ++j) {
        e[j] = -2.0 * dot_d(ew.alphas[j], Y);
        mx = std::max(mx, e[j]);
    }
    double z = 0;
    std::vector<double> out(Y.size(), 0.0);
    for (std::size_t j = 0; j < e.size(); ++j) {
        double p = ew.counts[j] * std::exp(e[j] - mx);
        z += p;
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += p * ew.alphas[j][k];
    }
    for (auto& v : out) v /= z;
    return out;
}

std::vector<double> legendre_inverse(const AdaptedPolytope& P, const std::vector<double>& xi) {
    const RootSystem& rs = P.group();
    const int d = rs.total_rank();
    const int ambient = rs.ambient_dim();
    if (static_cast<int>(xi.size()) != ambient)
        throw InvalidInput("target has the wrong ambient dimension");

    double span_residual = 0.0;
    RatVec y = P.ambient_to_lattice(xi, &span_residual);
    if (span_residual > 1e-9)
        throw NotInterior("target lies off the dual Cartan algebra (residual " +
                          std::to_string(span_residual) + ")");
    for (const auto& f : P.facets())
        if (rat_dot(f.normal, y) >= f.offset)
            throw NotInterior("target is not strictly inside the polytope");
    Rational margin_sq = P.interior_margin_sq(y);
    if (margin_sq < rat(1, 1'000'000'000'000))  // (1e-6)^2
        throw NotInterior("target is within 1e-6 of the boundary");

    auto ew = exp_weights(P);
    const auto& basis = rs.lattice_basis();
    std::vector<std::vector<double>> B(ambient, std::vector<double>(d, 0.0));
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < ambient; ++k)
            B[k][i] = static_cast<double>(basis[i].coords[k]);

    auto expand = [&](const std::vector<double>& t) {
        std::vector<double> Yv(ambient, 0.0);
        for (int k = 0; k < ambient; ++k)
            for (int i = 0; i < d; ++i) Yv[k] += B[k][i] * t[i];
        return Yv;
    };
    auto psi_at = [&](const std::vector<double>& Yv) {
        std::vector<double> e(ew.alphas.size());
        double mx = -std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < ew.alphas.size(); ++j) {
            e[j] = -2.0 * dot_d(ew.alphas[j], Yv);
            mx = std::max(mx, e[j]);
        }
        double z = 0;
        std::vector<double> mean(ambient, 0.0);
        for (std::size_t j = 0; j < e.size(); ++j) {
            double p = ew.counts[j] * std::exp(e[j] - mx);
            z += p;
            for (int k = 0; k < ambient; ++k) mean[k] += p * ew.alphas[j][k];
        }
        for (auto& v : mean) v /= z;
        return mean;
    };
    auto residual_vec = [&](const std::vector<double>& t) {
        auto val = psi_at(expand(t));
        std::vector<double> r(ambient);
        for (int k = 0; k < ambient; ++k) r[k] = val[k] - xi[k];
        return r;
    };
    auto norm2 = [&](const std::vector<double>& v) {
        return std::sqrt(dot_d(v, v));
    };

    std::vector<double> t(d, 0.0);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<double> Yv = expand(t);
        // softmax probabilities
        std::vector<double> e(ew.alphas.size());
        double mx = -std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < ew.alphas.size(); ++j) {
            e[j] = -2.0 * dot_d(ew.alphas[j], Yv);
            mx = std::max(mx, e[j]);
        }
        double z = 0;
        for (std::size_t j = 0; j < e.size(); ++j) {
            e[j] = ew.counts[j] * std::exp(e[j] - mx);
            z += e[j];
        }
        std::vector<double> mean(ambient, 0.0);
        for (std::size_t j = 0; j < e.size(); ++j)
            for (int k = 0; k < ambient; ++k) mean[k] += e[j] / z * ew.alphas[j][k];

        std::vector<double> g(d, 0.0); // B^T (psi - xi)
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < ambient; ++k) g[i] += B[k][i] * (mean[k] - xi[k]);
        double res = norm2(residual_vec(t));
        if (res <= 1e-12) break;

        // Jacobian of psi in t: -2 B^T Cov B
        std::vector<std::vector<double>> J(d, std::vector<double>(d, 0.0));
        for (std::size_t j = 0; j < e.size(); ++j) {
            double p = e[j] / z;
            std::vector<double> proj(d, 0.0);
            for (int i = 0; i < d; ++i)
                for (int k = 0; k < ambient; ++k) proj[i] += B[k][i] * ew.alphas[j][k];
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) J[a][b] += -2.0 * p * proj[a] * proj[b];
        }
        std::vector<double> mproj(d, 0.0);
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < ambient; ++k) mproj[i] += B[k][i] * mean[k];
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) J[a][b] += 2.0 * mproj[a] * mproj[b];

        // Solve J * step = -g (small dense system, partial pivoting).
        std::vector<std::vector<double>> m = J;
        std::vector<double> rhs(d);
        for (int i = 0; i < d; ++i) rhs[i] = -g[i];
        for (int c = 0; c < d; ++c) {
            int piv = c;
            for (int r = c + 1; r < d; ++r)
                if (std::fabs(m[r][c]) > std::fabs(m[piv][c])) piv = r;
            std::swap(m[piv], m[c]);
            std::swap(rhs[piv], rhs[c]);
            if (std::fabs(m[c][c]) < 1e-300) throw NoConvergence("singular Newton system");
            for (int r = c + 1; r < d; ++r) {
                double f = m[r][c] / m[c][c];
                for (int k = c; k < d; ++k) m[r][k] -= f * m[c][k];
                rhs[r] -= f * rhs[c];
            }
        }
        std::vector<double> step(d, 0.0);
        for (int i = d - 1; i >= 0; --i) {
            double s = rhs[i];
            for (int k = i + 1; k < d; ++k) s -= m[i][k] * step[k];
            step[i] = s / m[i][i];
        }

        // Damping: halve until the residual decreases.
        double base = res;
        double scale = 1.0;
        std::vector<double> cand(d);
        for (int halvings = 0; halvings < 60; ++halvings) {
            for (int i = 0; i < d; ++i) cand[i] = t[i] + scale * step[i];
            if (norm2(residual_vec(cand)) < base) break;
            scale *= 0.5;
        }
        for (int i = 0; i < d; ++i) t[i] = cand[i];
    }

    if (norm2(residual_vec(t)) > 1e-10)
        throw NoConvergence("Newton iteration did not reach the 1e-10 residual");
    return expand(t);
}

bool divergence_criterion(const std::vector<RatVec>& betas) {
    if (betas.empty()) throw InvalidInput("divergence criterion needs at least one vector");
    const std::size_t dim = betas[0].size();
    for (const auto& b : betas)
        if (b.size() != dim) throw InvalidInput("mixed dimensions in beta list");
    if (affine_rank(betas) != static_cast<int>(dim)) {
        // Zero can only be interior if the hull is full-dimensional, which
        // also needs the span (not just affine span) to be everything.
        return false;
    }
    RatVec origin(dim, Rational(0));
    if (!point_in_hull(betas, origin)) return false;
    for (const auto& f : enumerate_facets(betas)) {
        if (f.offset <= 0) return false; // origin on or outside the facet
    }
    return true;
}

Rational biggest_ball_radius_sq(const AdaptedPolytope& P) {
    const int d = P.group().total_rank();
    RatVec origin(d, Rational(0));
    for (const auto& f : P.facets())
        if (f.offset <= 0)
            throw OriginNotInterior("origin is not interior to the polytope");
    return P.interior_margin_sq(origin);
}

double biggest_ball_radius(const AdaptedPolytope& P) {
    return std::sqrt(to_double(biggest_ball_radius_sq(P)));
}

} // namespace fq
