#pragma once

#include <cstdint>
#include <map>
#include <memory>

#include "fq/lie.hpp"

namespace fq {

// Weight -> positive count. Weight systems of representations, monomial
// weight tallies, anything multiset-shaped.
struct WeightMultiset {
    std::map<Weight, std::int64_t> counts;

    void add(const Weight& w, std::int64_t m = 1);
    std::int64_t total() const;
    bool operator==(const WeightMultiset&) const = default;
};

// Element of the representation ring: finite Z-combination of irreducibles,
// keyed by dominant highest weight. Negative coefficients are allowed so
// differences of characters can be formed; operations that need a genuine
// character say so.
struct CharacterElement {
    std::string group_sig;
    std::map<Weight, std::int64_t> coeffs;

    void add(const Weight& w, std::int64_t m);
    bool is_genuine() const; // all coefficients >= 0
    bool operator==(const CharacterElement&) const = default;
};

// Full weight system of the irreducible with highest weight lambda,
// W-invariant, total count = dim(lambda). Freudenthal recursion, memoized
// per (group, lambda); the cache is invisible to callers and thread-safe.
std::shared_ptr<const WeightMultiset> weight_multiplicities(const Weight& lambda,
                                                            const RootSystem& rs);

// Weyl dimension formula.
std::int64_t dim(const Weight& lambda, const RootSystem& rs);

// Z-linear extension of dim; bookkeeping helper for tests and reports.
std::int64_t char_dim(const CharacterElement& c, const RootSystem& rs);

// Tensor product decomposition of two irreducibles (alternation over the
// weight system of the smaller factor).
CharacterElement tensor(const Weight& lambda, const Weight& theta, const RootSystem& rs);

// Bilinear extension of tensor to ring elements.
CharacterElement tensor_elements(const CharacterElement& a, const CharacterElement& b,
                                 const RootSystem& rs);

// Inverse of weight_multiplicities by repeated highest-weight subtraction.
// Throws NotACharacter when the multiset is not a genuine character.
CharacterElement decompose_weights(const WeightMultiset& ws, const RootSystem& rs);

// Highest weight of the dual irreducible: -w0 * lambda.
Weight dual(const Weight& lambda, const RootSystem& rs);

CharacterElement trivial_character(const RootSystem& rs);

// Pointwise sum/scale in the ring.
CharacterElement add_characters(const CharacterElement& a, const CharacterElement& b);
CharacterElement scale_character(const CharacterElement& a, std::int64_t k);

// Weight system of a ring element with nonnegative coefficients.
WeightMultiset character_weights(const CharacterElement& c, const RootSystem& rs);

// Multiset convolution: all pairwise sums with multiplicity products.
WeightMultiset convolve(const WeightMultiset& a, const WeightMultiset& b);

} // namespace fq
