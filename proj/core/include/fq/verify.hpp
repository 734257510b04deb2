#pragma once

#include <map>

#include "fq/models.hpp"

namespace fq {

struct CoeffDiff {
    Weight weight;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
};

// Outcome of one identity verification: exact per-weight comparison inside
// the stated ball, with every mismatch listed.
struct Report {
    std::string identity;
    bool pass = false;
    RadiusSq radius;
    std::vector<CoeffDiff> diffs;
    std::map<std::string, std::string> info;
};

std::vector<CoeffDiff> compare_series(const FormalSeries& lhs, const FormalSeries& rhs,
                                      const RadiusSq& r);

// Restriction identity: the series restricted through the embedding against
// the direct quantization of the restricted model, both truncated at c.
Report verify_restriction_identity(const HermitianModel& m, const SubgroupEmbedding& emb,
                                   const Rational& c,
                                   std::optional<Rational> h_margin_sq = std::nullopt);

// Product identity: multiplication by the orbit character against the
// degreewise quantization of the product model, truncated at c.
Report verify_product_identity(const HermitianModel& m, const Weight& theta,
                               const Rational& c);

// Truncation convergence: the polytope truncations agree with the series on
// balls of radius n * (inball radius) for n = 1..n_max.
Report verify_convergence(const HermitianModel& m, const AdaptedPolytope& P,
                          const Rational& series_radius, std::int64_t n_max);

} // namespace fq
