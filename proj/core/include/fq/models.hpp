#pragma once

#include <optional>

#include "fq/formal.hpp"

namespace fq {

// Coadjoint orbit through a dominant weight; compact, quantizes to the
// single irreducible.
struct CoadjointOrbitModel {
    std::shared_ptr<const RootSystem> group;
    Weight mu;
};

// Hermitian vector space E with a linear action: the torus weights of E,
// listed with multiplicity. The optional certified squared margin is a
// caller-supplied lower bound d^2 for the moment growth
// ||Phi(v)|| >= d/2 ||v||^2, for actions whose properness the torus-hull
// test cannot see. Certificates are audited against every decomposition the
// quantization actually computes.
struct HermitianModel {
    std::shared_ptr<const RootSystem> group;
    std::vector<Weight> weights;
    std::optional<Rational> certified_margin_sq;
};

CharacterElement orbit_quantization(const CoadjointOrbitModel& m);

struct PropernessResult {
    bool proper = false;
    Rational margin_sq = 0; // squared distance from 0 to conv(weights)
};

// Torus-hull properness test: proper iff 0 is outside the convex hull of
// the weights. Sufficient in general, exact for torus actions.
PropernessResult properness_check(const HermitianModel& m);

// Margin used for truncation bounds: the hull margin, improved by the
// certificate when present. Throws NotProper when no positive margin is
// available.
Rational moment_margin_sq(const HermitianModel& m);

// Exponent vector of a nonconstant torus-invariant monomial of total degree
// <= max_degree, if one exists.
std::optional<std::vector<std::int64_t>> find_invariant_monomial(const HermitianModel& m,
                                                                 int max_degree);

// Multiplicity series of the symmetric algebra on the dual space, exact
// inside the requested ball.
FormalSeries hermitian_quantization(const HermitianModel& m, const RadiusSq& radius);

std::int64_t reduced_space_multiplicity(const HermitianModel& m, const Weight& mu);

// The same model viewed through a subgroup embedding: weights pushed through
// the restriction matrix.
HermitianModel restricted_model(const HermitianModel& m, const SubgroupEmbedding& emb,
                                std::optional<Rational> margin_override = std::nullopt);

// Finiteness bound for restriction: every source weight that can contribute
// below the output radius lies inside required_input.
RadiusBound restriction_radius_bound(const HermitianModel& m, const SubgroupEmbedding& emb,
                                     const RadiusSq& c,
                                     std::optional<Rational> h_margin_override = std::nullopt);

// Quantization of the product with the coadjoint orbit through theta,
// computed degree by degree from weight data alone (convolution plus
// highest-weight subtraction), independent of the ring-side tensor route.
FormalSeries product_model_quantization(const HermitianModel& m, const Weight& theta,
                                        const RadiusSq& radius);

// Per-degree weight multisets of the symmetric powers of the dual space,
// degrees 0..max_degree.
std::vector<WeightMultiset> symmetric_power_weights(const HermitianModel& m, int max_degree);

} // namespace fq
