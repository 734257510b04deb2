#pragma once

#include <optional>
#include <vector>

#include "fq/rational.hpp"

namespace fq {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

Rational rat_dot(const RatVec& a, const RatVec& b);

int rat_rank(RatMat m);

// Solution of the square system a*x = b, or nullopt when singular.
std::optional<RatVec> solve_square(RatMat a, RatVec b);

// Basis of { x : m * x = 0 }.
std::vector<RatVec> kernel_basis(RatMat m);

// Supporting hyperplane of a full-dimensional polytope: points satisfy
// dot(normal, x) <= offset, with equality on the facet. Normals are
// normalized to coprime integers with a deterministic sign.
struct Facet {
    RatVec normal;
    Rational offset;
};

// Brute-force facet enumeration over exact rationals; dim = affine dimension
// of the points, which must equal the coordinate dimension.
std::vector<Facet> enumerate_facets(const std::vector<RatVec>& points);

// Affine rank of a point set (dimension of the spanned affine subspace).
int affine_rank(const std::vector<RatVec>& points);

// Exact convex hull membership test, Caratheodory subset enumeration.
bool point_in_hull(const std::vector<RatVec>& points, const RatVec& x);

// Exact squared Euclidean distance from the origin to conv(points).
Rational hull_distance_sq(const std::vector<RatVec>& points);

} // namespace fq
