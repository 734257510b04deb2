#pragma once

#include "fq/branching.hpp"
#include "fq/char_ring.hpp"
#include "fq/polytope.hpp"

namespace fq {

// Radii are carried as exact rational squares so that open-ball membership
// of integer-normed weights is decided exactly. Subtraction of norms falls
// back to a slightly smaller rational when the exact value is irrational,
// which only shrinks what the series claims to know.
class RadiusSq {
public:
    RadiusSq() : sq_(0) {}
    static RadiusSq from_value(const Rational& r);
    static RadiusSq from_sq(const Rational& q);

    const Rational& sq() const { return sq_; }
    double value() const;
    bool positive() const { return sq_ > 0; }

    // Open-ball membership of a squared integer norm.
    bool contains_norm_sq(std::int64_t nsq) const { return Rational(nsq) < sq_; }

    // Radius arithmetic: this - sqrt(norm_sq), exact when representable,
    // otherwise a conservative lower bound. Clamps at zero.
    RadiusSq minus_norm_sq(const Rational& norm_sq) const;
    RadiusSq scaled(std::int64_t n) const; // n * radius

    bool operator<(const RadiusSq& o) const { return sq_ < o.sq_; }
    bool operator>(const RadiusSq& o) const { return sq_ > o.sq_; }
    bool operator<=(const RadiusSq& o) const { return sq_ <= o.sq_; }
    bool operator>=(const RadiusSq& o) const { return sq_ >= o.sq_; }
    bool operator==(const RadiusSq& o) const { return sq_ == o.sq_; }

private:
    Rational sq_;
};

// Truncated multiplicity function on dominant weights: coefficients inside
// the open ball of the trusted radius are exact, outside they are
// unspecified.
struct FormalSeries {
    std::string group_sig;
    std::map<Weight, std::int64_t> coeffs;
    RadiusSq trusted;

    // Drops the entry when zero or outside the trusted ball.
    void set_coeff(const Weight& w, std::int64_t v);
    void add_coeff(const Weight& w, std::int64_t v);
    std::int64_t coeff(const Weight& w) const;
    void prune();
};

bool equal_up_to(const FormalSeries& a, const FormalSeries& b, const RadiusSq& r);

// Finiteness data for restriction: how far into the source series one must
// look (required_input) to pin all coefficients below output_radius.
struct RadiusBound {
    RadiusSq output_radius;
    RadiusSq required_input;
};

FormalSeries restrict_series(const FormalSeries& s, const SubgroupEmbedding& emb,
                             const RadiusBound& bound);

FormalSeries multiply_by_character(const FormalSeries& s, const CharacterElement& c,
                                   const RootSystem& rs);

FormalSeries external_product(const FormalSeries& s1, const RootSystem& rs1,
                              const FormalSeries& s2, const RootSystem& rs2);

// Concatenated product group of two groups; the ring external_product lives
// over this.
GroupSpec product_group(const GroupSpec& a, const GroupSpec& b);

FormalSeries polytope_truncation(const FormalSeries& s, const AdaptedPolytope& P,
                                 std::int64_t n);

} // namespace fq
