#include "fq/formal.hpp"

#include <cmath>

namespace fq {

RadiusSq RadiusSq::from_value(const Rational& r) {
    if (r < 0) throw InvalidInput("radius must be nonnegative");
    RadiusSq out;
    out.sq_ = r * r;
    return out;
}

RadiusSq RadiusSq::from_sq(const Rational& q) {
    if (q < 0) throw InvalidInput("squared radius must be nonnegative");
    RadiusSq out;
    out.sq_ = q;
    return out;
}

double RadiusSq::value() const { return std::sqrt(to_double(sq_)); }

RadiusSq RadiusSq::minus_norm_sq(const Rational& norm_sq) const {
    if (norm_sq < 0) throw InvalidInput("negative squared norm");
    Rational cross = sq_ * norm_sq;
    Rational root;
    RadiusSq out;
    if (exact_sqrt(cross, &root)) {
        Rational q = sq_ + norm_sq - 2 * root;
        out.sq_ = q > 0 ? q : Rational(0);
        return out;
    }
    Rational r_lo = sqrt_lower_bound(sq_);
    Rational m_hi = sqrt_lower_bound(norm_sq) + rat(1, 1'000'000);
    Rational diff = r_lo - m_hi;
    out.sq_ = diff > 0 ? diff * diff : Rational(0);
    return out;
}

RadiusSq RadiusSq::scaled(std::int64_t n) const {
    if (n < 0) throw InvalidInput("negative radius scale");
    RadiusSq out;
    out.sq_ = sq_ * n * n;
    return out;
}

void FormalSeries::set_coeff(const Weight& w, std::int64_t v) {
    if (v == 0 || !trusted.contains_norm_sq(w.norm_sq())) {
        coeffs.erase(w);
        return;
    }
    coeffs[w] = v;
}

void FormalSeries::add_coeff(const Weight& w, std::int64_t v) {
    auto it = coeffs.find(w);
    std::int64_t next = (it == coeffs.end() ? 0 : it->second) + v;
    set_coeff(w, next);
}

std::int64_t FormalSeries::coeff(const Weight& w) const {
    auto it = coeffs.find(w);
    return it == coeffs.end() ? 0 : it->second;
}

void FormalSeries::prune() {
    for (auto it = coeffs.begin(); it != coeffs.end();) {
        if (it->second == 0 || !trusted.contains_norm_sq(it->first.norm_sq()))
            it = coeffs.erase(it);
        else
            ++it;
    }
}

bool equal_up_to(const FormalSeries& a, const FormalSeries& b, const RadiusSq& r) {
    if (a.group_sig != b.group_sig)
        throw GroupMismatch("comparing series over different groups");
    if (r > a.trusted || r > b.trusted)
        throw RadiusExceedsTrust("comparison radius exceeds a trusted radius");
    auto inside = [&](const Weight& w) { return r.contains_norm_sq(w.norm_sq()); };
    for (const auto& [w, v] : a.coeffs)
        if (inside(w) && b.coeff(w) != v) return false;
    for (const auto& [w, v] : b.coeffs)
        if (inside(w) && a.coeff(w) != v) return false;
    return true;
}

FormalSeries restrict_series(const FormalSeries& s, const SubgroupEmbedding& emb,
                             const RadiusBound& bound) {
    if (s.group_sig != emb.supergroup->signature())
        throw GroupMismatch("series is not over the embedding's supergroup");
    if (s.trusted < bound.required_input)
        throw InsufficientRadius("series trusted radius " +
                                 rational_to_string(s.trusted.sq()) +
                                 " (squared) does not cover the required " +
                                 rational_to_string(bound.required_input.sq()));
    FormalSeries out;
    out.group_sig = emb.subgroup->signature();
    out.trusted = bound.output_radius;
    for (const auto& [mu, v] : s.coeffs) {
        if (!bound.required_input.contains_norm_sq(mu.norm_sq())) continue;
        for (const auto& [nu, n] : branch(mu, emb).coeffs) out.add_coeff(nu, n * v);
    }
    return out;
}

FormalSeries multiply_by_character(const FormalSeries& s, const CharacterElement& c,
                                   const RootSystem& rs) {
    if (s.group_sig != c.group_sig || s.group_sig != rs.signature())
        throw GroupMismatch("series and character live over different groups");
    if (!c.is_genuine())
        throw NegativeCharacter("multiplication requires a genuine character");

    std::int64_t max_theta_sq = 0;
    for (const auto& [th, m] : c.coeffs) max_theta_sq = std::max(max_theta_sq, th.norm_sq());

    FormalSeries out;
    out.group_sig = s.group_sig;
    out.trusted = s.trusted.minus_norm_sq(Rational(max_theta_sq));
    if (!out.trusted.positive())
        throw EmptyTrust("character norm exhausts the trusted radius");

    for (const auto& [lam, v] : s.coeffs)
        for (const auto& [th, m] : c.coeffs)
            for (const auto& [mu, cm] : tensor(lam, th, rs).coeffs)
                out.add_coeff(mu, cm * v * m);
    return out;
}

GroupSpec product_group(const GroupSpec& a, const GroupSpec& b) {
    GroupSpec g = a;
    g.factors.insert(g.factors.end(), b.factors.begin(), b.factors.end());
    return g;
}

FormalSeries external_product(const FormalSeries& s1, const RootSystem& rs1,
                              const FormalSeries& s2, const RootSystem& rs2) {
    if (s1.group_sig != rs1.signature() || s2.group_sig != rs2.signature())
        throw GroupMismatch("series/group mismatch in external product");
    RootSystem prod(product_group(rs1.group(), rs2.group()));
    FormalSeries out;
    out.group_sig = prod.signature();
    out.trusted = std::min(s1.trusted, s2.trusted);
    for (const auto& [a, va] : s1.coeffs) {
        for (const auto& [b, vb] : s2.coeffs) {
            std::vector<std::int64_t> c = a.coords;
            c.insert(c.end(), b.coords.begin(), b.coords.end());
            out.add_coeff(Weight(std::move(c)), va * vb);
        }
    }
    return out;
}

FormalSeries polytope_truncation(const FormalSeries& s, const AdaptedPolytope& P,
                                 std::int64_t n) {
    if (n < 1) throw InvalidInput("dilation factor must be a positive integer");
    if (s.group_sig != P.group().signature())
        throw GroupMismatch("series and polytope live over different groups");
    RadiusSq target = RadiusSq::from_sq(biggest_ball_radius_sq(P)).scaled(n);
    if (s.trusted < target)
        throw InsufficientRadius("series trusted radius does not cover the dilated inball");
    FormalSeries out;
    out.group_sig = s.group_sig;
    out.trusted = target;
    for (const auto& [w, v] : s.coeffs)
        if (P.weight_strictly_inside(w, n)) out.add_coeff(w, v);
    return out;
}

} // namespace fq
