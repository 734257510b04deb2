#include "fq/models.hpp"

#include <algorithm>

#include "fq/geometry.hpp"
#include "fq/parallel.hpp"

namespace fq {

CharacterElement orbit_quantization(const CoadjointOrbitModel& m) {
    Weight mu = m.group->canonical(m.mu);
    if (!is_dominant(mu, *m.group))
        throw NonDominant("orbit model needs a dominant weight, got " + m.mu.to_string());
    CharacterElement c;
    c.group_sig = m.group->signature();
    c.add(mu, 1);
    return c;
}

namespace {

std::vector<RatVec> weight_points(const HermitianModel& m) {
    std::vector<RatVec> pts;
    for (const auto& w : m.weights) {
        RatVec p(w.coords.size());
        for (std::size_t i = 0; i < w.coords.size(); ++i) p[i] = Rational(w.coords[i]);
        pts.push_back(std::move(p));
    }
    return pts;
}

void validate_model(const HermitianModel& m) {
    if (!m.group) throw InvalidInput("model with null group");
    if (m.weights.empty()) throw InvalidInput("model has no weights");
    for (const auto& w : m.weights) m.group->canonical(w);
    if (m.certified_margin_sq && *m.certified_margin_sq <= 0)
        throw InvalidInput("certified margin must be positive");
}

} // namespace

PropernessResult properness_check(const HermitianModel& m) {
    validate_model(m);
    Rational d2 = hull_distance_sq(weight_points(m));
    return PropernessResult{d2 > 0, d2};
}

Rational moment_margin_sq(const HermitianModel& m) {
    auto pr = properness_check(m);
    Rational margin = pr.margin_sq;
    if (m.certified_margin_sq && *m.certified_margin_sq > margin)
        margin = *m.certified_margin_sq;
    if (margin <= 0)
        throw NotProper("zero moment margin: the weight hull contains the origin "
                        "and no certified margin was supplied");
    return margin;
}

std::optional<std::vector<std::int64_t>> find_invariant_monomial(const HermitianModel& m,
                                                                 int max_degree) {
    validate_model(m);
    const std::size_t k = m.weights.size();
    const std::size_t dim = m.weights[0].coords.size();
    std::vector<std::int64_t> expo(k, 0);
    std::vector<std::int64_t> acc(dim, 0);
    int total = 0;
    // Search exponent vectors of total degree <= max_degree for a nonzero
    // one whose weighted sum vanishes (the monomial is torus-invariant).
    auto rec = [&](auto&& self, std::size_t var) -> bool {
        if (var == k) {
            return total > 0 &&
                   std::all_of(acc.begin(), acc.end(), [](auto v) { return v == 0; });
        }
        for (int e = 0; total + e <= max_degree; ++e) {
            if (e > 0) {
                for (std::size_t i = 0; i < dim; ++i) acc[i] += m.weights[var].coords[i];
                ++total;
            }
            expo[var] = e;
            if (self(self, var + 1)) return true;
        }
        for (std::size_t i = 0; i < dim; ++i)
            acc[i] -= expo[var] * m.weights[var].coords[i];
        total -= static_cast<int>(expo[var]);
        expo[var] = 0;
        return false;
    };
    if (rec(rec, 0)) return expo;
    return std::nullopt;
}

std::vector<WeightMultiset> symmetric_power_weights(const HermitianModel& m, int max_degree) {
    validate_model(m);
    const int dim = m.group->ambient_dim();
    std::vector<WeightMultiset> degrees(max_degree + 1);
    degrees[0].add(Weight(std::vector<std::int64_t>(dim, 0)), 1);
    // One variable per listed weight; the dual space carries the negated
    // weights.
    for (const auto& alpha : m.weights) {
        Weight dual_w = -m.group->canonical(alpha);
        std::vector<WeightMultiset> next(max_degree + 1);
        for (int j = 0; j <= max_degree; ++j) {
            for (int t = 0; t <= j; ++t) {
                Weight shift = dual_w * t;
                for (const auto& [w, c] : degrees[j - t].counts) next[j].add(w + shift, c);
            }
        }
        degrees = std::move(next);
    }
    return degrees;
}

namespace {

// Decomposes each degree slice and accumulates constituents inside the ball,
// auditing the margin bound j^2 * d^2 <= |nu|^2 on everything it sees.
FormalSeries accumulate_series(const HermitianModel& m, const RadiusSq& radius,
                               const std::vector<WeightMultiset>& slices,
                               const WeightMultiset* convolve_with,
                               const Rational& margin_sq) {
    const RootSystem& rs = *m.group;
    std::vector<CharacterElement> parts(slices.size());
    parallel_for(slices.size(), [&](std::size_t j) {
        if (convolve_with)
            parts[j] = decompose_weights(convolve(slices[j], *convolve_with), rs);
        else
            parts[j] = decompose_weights(slices[j], rs);
    });

    Rational theta_shift = 0; // largest orbit-weight norm when convolving
    if (convolve_with) {
        std::int64_t mx = 0;
        for (const auto& [w, c] : convolve_with->counts)
            mx = std::max(mx, w.norm_sq());
        theta_shift = Rational(mx);
    }

    FormalSeries out;
    out.group_sig = rs.signature();
    out.trusted = radius;
    for (std::size_t j = 0; j < parts.size(); ++j) {
        for (const auto& [nu, c] : parts[j].coeffs) {
            if (c < 0)
                throw InvalidInput("negative multiplicity in a quantization slice");
            if (!convolve_with) {
                // ||nu||^2 >= (j*d)^2 must hold for every constituent; a
                // violation refutes the margin data.
                Rational lhs(nu.norm_sq());
                Rational rhs = margin_sq * static_cast<std::int64_t>(j * j);
                if (lhs < rhs)
                    throw InvalidInput(
                        "margin certificate refuted: degree " + std::to_string(j) +
                        " constituent " + nu.to_string() + " is too short");
            }
            out.add_coeff(nu, c);
        }
    }
    return out;
}

} // namespace

FormalSeries hermitian_quantization(const HermitianModel& m, const RadiusSq& radius) {
    validate_model(m);
    if (!radius.positive()) throw InvalidInput("radius must be positive");
    Rational margin = moment_margin_sq(m); // throws NotProper
    int max_degree = static_cast<int>(ceil_sqrt(radius.sq() / margin));
    auto slices = symmetric_power_weights(m, max_degree);
    return accumulate_series(m, radius, slices, nullptr, margin);
}

std::int64_t reduced_space_multiplicity(const HermitianModel& m, const Weight& mu_in) {
    validate_model(m);
    Weight mu = m.group->canonical(mu_in);
    if (!is_dominant(mu, *m.group))
        throw NonDominant("reduced space multiplicity needs a dominant weight");
    RadiusSq r = RadiusSq::from_sq(Rational(mu.norm_sq()) + 1);
    return hermitian_quantization(m, r).coeff(mu);
}

HermitianModel restricted_model(const HermitianModel& m, const SubgroupEmbedding& emb,
                                std::optional<Rational> margin_override) {
    validate_model(m);
    if (m.group->signature() != emb.supergroup->signature())
        throw GroupMismatch("model is not over the embedding's supergroup");
    HermitianModel h;
    h.group = emb.subgroup;
    for (const auto& w : m.weights) {
        try {
            h.weights.push_back(emb.subgroup->canonical(emb.restrict_weight(w)));
        } catch (const InvalidInput& e) {
            throw NotACharacter(std::string("restricted weight leaves the subgroup "
                                            "lattice: ") + e.what());
        }
    }
    h.certified_margin_sq = margin_override;
    return h;
}

RadiusBound restriction_radius_bound(const HermitianModel& m, const SubgroupEmbedding& emb,
                                     const RadiusSq& c,
                                     std::optional<Rational> h_margin_override) {
    HermitianModel h = restricted_model(m, emb, h_margin_override);
    Rational d_sq = moment_margin_sq(h); // throws NotProper for H
    RadiusBound b;
    b.output_radius = c;
    b.required_input = RadiusSq::from_sq(c.sq() / d_sq);
    return b;
}

FormalSeries product_model_quantization(const HermitianModel& m, const Weight& theta_in,
                                        const RadiusSq& radius) {
    validate_model(m);
    if (!radius.positive()) throw InvalidInput("radius must be positive");
    Weight theta = m.group->canonical(theta_in);
    if (!is_dominant(theta, *m.group))
        throw NonDominant("orbit factor needs a dominant weight");
    Rational margin = moment_margin_sq(m);

    // Constituents at degree j sit at norm >= j*d - |theta|; enumerate far
    // enough that everything beyond lies outside the ball.
    Rational need = sqrt_lower_bound(radius.sq()) + sqrt_lower_bound(Rational(theta.norm_sq())) +
                    rat(1, 1000);
    Rational d_lo = sqrt_lower_bound(margin);
    int max_degree = static_cast<int>(ceil_sqrt((need / d_lo) * (need / d_lo)));
    auto slices = symmetric_power_weights(m, max_degree);
    auto orbit_weights = weight_multiplicities(theta, *m.group);
    return accumulate_series(m, radius, slices, orbit_weights.get(), margin);
}

} // namespace fq
