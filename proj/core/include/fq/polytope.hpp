#pragma once

#include <memory>
#include <vector>

#include "fq/char_ring.hpp"
#include "fq/geometry.hpp"

namespace fq {

struct AdaptedReport {
    bool vertices_regular_lattice = false;
    bool w_invariant = false;
    bool delzant = false;
    bool all() const { return vertices_regular_lattice && w_invariant && delzant; }
};

// Candidate adapted polytope: the exact vertex set of a full-dimensional
// lattice polytope in the dual of the Cartan algebra. Construction validates
// that no listed point is a convex combination of the others.
class AdaptedPolytope {
public:
    AdaptedPolytope(std::shared_ptr<const RootSystem> group, std::vector<Weight> vertices);

    const RootSystem& group() const { return *group_; }
    std::shared_ptr<const RootSystem> group_ptr() const { return group_; }
    const std::vector<Weight>& vertices() const { return vertices_; }

    // Facets in lattice coordinates; throws NotFullDimensional.
    const std::vector<Facet>& facets() const;
    // Closed 1-faces as vertex index pairs. In lattice dimension one the
    // polytope is its own 1-face.
    const std::vector<std::pair<std::size_t, std::size_t>>& one_faces() const;

    // Exact interior test of an ambient lattice point against dilation n*P.
    bool weight_strictly_inside(const Weight& w, std::int64_t n = 1) const;

    // Distance from an interior point (lattice coords, exact) to the nearest
    // facet hyperplane, squared, in the ambient metric.
    Rational interior_margin_sq(const RatVec& lattice_point) const;

    RatVec ambient_to_lattice(const std::vector<double>& ambient,
                              double* residual) const;

private:
    void ensure_geometry() const;

    std::shared_ptr<const RootSystem> group_;
    std::vector<Weight> vertices_;
    mutable bool geometry_ready_ = false;
    mutable std::vector<Facet> facets_;
    mutable std::vector<std::pair<std::size_t, std::size_t>> one_faces_;
    mutable RatMat gram_;          // lattice-basis Gram matrix
    mutable std::vector<RatVec> lattice_vertices_;
};

// Definition checks: (i) vertices are lattice points fixed by no reflection,
// (ii) the Weyl group permutes the vertex set, (iii) primitive edge
// directions at every vertex form a basis of the weight lattice.
AdaptedReport check_adapted(const AdaptedPolytope& P);

AdaptedPolytope dilate(const AdaptedPolytope& P, std::int64_t n);

// Dominant lattice points on the closed one-dimensional faces, sorted.
std::vector<Weight> one_skeleton_lattice_points(const AdaptedPolytope& P);

// Weights, with multiplicity, of the direct sum of the irreducibles attached
// to the dominant one-skeleton lattice points. Throws NotAdapted unless
// check_adapted passes.
WeightMultiset weight_system_of_P(const AdaptedPolytope& P);

// log-sum-exp potential of the polytope's weight system at an ambient point.
double potential_F(const AdaptedPolytope& P, const std::vector<double>& X);

// Exponential-weighted average of the weight system; maps the Cartan algebra
// onto the interior of P.
std::vector<double> psi_T(const AdaptedPolytope& P, const std::vector<double>& Y);

// Newton inversion of psi_T at a strictly interior target (margin >= 1e-6).
// Residual at the returned point is <= 1e-10.
std::vector<double> legendre_inverse(const AdaptedPolytope& P, const std::vector<double>& xi);

// Exact test for 0 in the interior of conv(betas).
bool divergence_criterion(const std::vector<RatVec>& betas);

// Radius of the largest ball about the origin contained in P.
double biggest_ball_radius(const AdaptedPolytope& P);
Rational biggest_ball_radius_sq(const AdaptedPolytope& P);

} // namespace fq
