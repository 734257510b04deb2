#pragma once

#include <memory>
#include <vector>

#include "fq/char_ring.hpp"

namespace fq {

// A closed connected subgroup H of K given extrinsically by the integer
// matrix restricting weight-lattice coordinates of K to those of H. The
// matrix has shape (ambient dim of H) x (ambient dim of K). No attempt is
// made to certify that it comes from an actual group inclusion; structurally
// invalid matrices surface as NotACharacter at decompose time.
struct SubgroupEmbedding {
    std::shared_ptr<const RootSystem> supergroup;
    std::shared_ptr<const RootSystem> subgroup;
    std::vector<std::vector<std::int64_t>> matrix;

    SubgroupEmbedding(std::shared_ptr<const RootSystem> sup,
                      std::shared_ptr<const RootSystem> sub,
                      std::vector<std::vector<std::int64_t>> m);

    Weight restrict_weight(const Weight& w) const;
    bool is_identity() const;
};

// Composite of K > H > H' into a single K > H' embedding (matrix product).
SubgroupEmbedding compose(const SubgroupEmbedding& outer, const SubgroupEmbedding& inner);

// Restriction coefficients of the irreducible with highest weight mu: the
// weight system pushed through the matrix and decomposed over H.
CharacterElement branch(const Weight& mu, const SubgroupEmbedding& emb);

// Z-linear extension of branch.
CharacterElement branch_element(const CharacterElement& c, const SubgroupEmbedding& emb);

// Push a weight multiset through the restriction matrix, canonicalizing over
// the subgroup lattice.
WeightMultiset restrict_multiset(const WeightMultiset& ws, const SubgroupEmbedding& emb);

} // namespace fq
