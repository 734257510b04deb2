#include "fq/verify.hpp"

#include <set>

namespace fq {

std::vector<CoeffDiff> compare_series(const FormalSeries& lhs, const FormalSeries& rhs,
                                      const RadiusSq& r) {
    if (lhs.group_sig != rhs.group_sig)
        throw GroupMismatch("comparing series over different groups");
    if (r > lhs.trusted || r > rhs.trusted)
        throw RadiusExceedsTrust("comparison radius exceeds a trusted radius");
    std::set<Weight> keys;
    for (const auto& [w, v] : lhs.coeffs) keys.insert(w);
    for (const auto& [w, v] : rhs.coeffs) keys.insert(w);
    std::vector<CoeffDiff> diffs;
    for (const auto& w : keys) {
        if (!r.contains_norm_sq(w.norm_sq())) continue;
        std::int64_t a = lhs.coeff(w), b = rhs.coeff(w);
        if (a != b) diffs.push_back(CoeffDiff{w, a, b});
    }
    return diffs;
}

Report verify_restriction_identity(const HermitianModel& m, const SubgroupEmbedding& emb,
                                   const Rational& c,
                                   std::optional<Rational> h_margin_sq) {
    if (c <= 0) throw InvalidInput("radius must be positive");
    RadiusSq ball = RadiusSq::from_value(c);

    Report rep;
    rep.identity = "restriction";
    rep.radius = ball;

    RadiusBound bound = restriction_radius_bound(m, emb, ball, h_margin_sq);
    rep.info["required_input_radius_sq"] = rational_to_string(bound.required_input.sq());

    FormalSeries source = hermitian_quantization(m, bound.required_input);
    FormalSeries lhs = restrict_series(source, emb, bound);

    HermitianModel h = restricted_model(m, emb, h_margin_sq);
    FormalSeries rhs = hermitian_quantization(h, ball);

    rep.diffs = compare_series(lhs, rhs, ball);
    rep.pass = rep.diffs.empty();
    rep.info["lhs_support"] = std::to_string(lhs.coeffs.size());
    rep.info["rhs_support"] = std::to_string(rhs.coeffs.size());
    return rep;
}

Report verify_product_identity(const HermitianModel& m, const Weight& theta,
                               const Rational& c) {
    if (c <= 0) throw InvalidInput("radius must be positive");
    RadiusSq ball = RadiusSq::from_value(c);

    Report rep;
    rep.identity = "product";
    rep.radius = ball;

    Weight th = m.group->canonical(theta);
    CoadjointOrbitModel orbit{m.group, th};
    CharacterElement orbit_char = orbit_quantization(orbit);

    // Source radius c + |theta| + 1: the slack absorbs the conservative
    // rounding in the radius arithmetic.
    Rational r_in = sqrt_lower_bound(ball.sq()) +
                    sqrt_lower_bound(Rational(th.norm_sq())) + 2;
    FormalSeries source = hermitian_quantization(m, RadiusSq::from_value(r_in));
    FormalSeries lhs = multiply_by_character(source, orbit_char, *m.group);

    FormalSeries rhs = product_model_quantization(m, th, ball);

    rep.diffs = compare_series(lhs, rhs, ball);
    rep.pass = rep.diffs.empty();
    rep.info["theta"] = th.to_string();
    rep.info["lhs_trusted_sq"] = rational_to_string(lhs.trusted.sq());
    return rep;
}

Report verify_convergence(const HermitianModel& m, const AdaptedPolytope& P,
                          const Rational& series_radius, std::int64_t n_max) {
    if (n_max < 1) throw InvalidInput("n_max must be >= 1");
    Report rep;
    rep.identity = "convergence";

    FormalSeries s = hermitian_quantization(m, RadiusSq::from_value(series_radius));
    RadiusSq eps = RadiusSq::from_sq(biggest_ball_radius_sq(P));
    rep.radius = eps.scaled(n_max);

    bool all_pass = true;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        FormalSeries t = polytope_truncation(s, P, n);
        RadiusSq target = eps.scaled(n);
        auto diffs = compare_series(t, s, target);
        rep.info["n=" + std::to_string(n)] = diffs.empty() ? "pass" : "fail";
        if (!diffs.empty()) {
            all_pass = false;
            for (auto& d : diffs) rep.diffs.push_back(d);
        }
    }
    rep.pass = all_pass;
    return rep;
}

} // namespace fq
