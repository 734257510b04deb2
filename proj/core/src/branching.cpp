#include "fq/branching.hpp"

namespace fq {

SubgroupEmbedding::SubgroupEmbedding(std::shared_ptr<const RootSystem> sup,
                                     std::shared_ptr<const RootSystem> sub,
                                     std::vector<std::vector<std::int64_t>> m)
    : supergroup(std::move(sup)), subgroup(std::move(sub)), matrix(std::move(m)) {
    if (!supergroup || !subgroup) throw InvalidInput("embedding with null group");
    const std::size_t rows = static_cast<std::size_t>(subgroup->ambient_dim());
    const std::size_t cols = static_cast<std::size_t>(supergroup->ambient_dim());
    if (matrix.size() != rows)
        throw InvalidInput("restriction matrix has " + std::to_string(matrix.size()) +
                           " rows, subgroup ambient dimension is " + std::to_string(rows));
    for (const auto& row : matrix)
        if (row.size() != cols)
            throw InvalidInput("restriction matrix row length mismatch");
}

Weight SubgroupEmbedding::restrict_weight(const Weight& w) const {
    std::vector<std::int64_t> out(matrix.size(), 0);
    for (std::size_t i = 0; i < matrix.size(); ++i)
        for (std::size_t j = 0; j < matrix[i].size(); ++j)
            out[i] += matrix[i][j] * w.coords[j];
    return Weight(std::move(out));
}

bool SubgroupEmbedding::is_identity() const {
    if (supergroup->signature() != subgroup->signature()) return false;
    for (std::size_t i = 0; i < matrix.size(); ++i)
        for (std::size_t j = 0; j < matrix[i].size(); ++j)
            if (matrix[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

SubgroupEmbedding compose(const SubgroupEmbedding& outer, const SubgroupEmbedding& inner) {
    if (outer.subgroup->signature() != inner.supergroup->signature())
        throw GroupMismatch("embeddings do not chain");
    const std::size_t rows = inner.matrix.size();
    const std::size_t mid = outer.matrix.size();
    const std::size_t cols = outer.matrix.empty() ? 0 : outer.matrix[0].size();
    std::vector<std::vector<std::int64_t>> prod(rows, std::vector<std::int64_t>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < mid; ++k)
            for (std::size_t j = 0; j < cols; ++j)
                prod[i][j] += inner.matrix[i][k] * outer.matrix[k][j];
    return SubgroupEmbedding(outer.supergroup, inner.subgroup, std::move(prod));
}

WeightMultiset restrict_multiset(const WeightMultiset& ws, const SubgroupEmbedding& emb) {
    WeightMultiset out;
    for (const auto& [w, m] : ws.counts) {
        Weight pushed = emb.restrict_weight(w);
        try {
            out.add(emb.subgroup->canonical(pushed), m);
        } catch (const InvalidInput& e) {
            throw NotACharacter(std::string("restricted weight leaves the subgroup lattice: ") +
                                e.what());
        }
    }
    return out;
}

CharacterElement branch(const Weight& mu, const SubgroupEmbedding& emb) {
    const RootSystem& sup = *emb.supergroup;
    Weight m = sup.canonical(mu);
    if (!is_dominant(m, sup))
        throw NonDominant("branch requires a dominant weight, got " + mu.to_string());
    auto ws = weight_multiplicities(m, sup);
    return decompose_weights(restrict_multiset(*ws, emb), *emb.subgroup);
}

CharacterElement branch_element(const CharacterElement& c, const SubgroupEmbedding& emb) {
    if (c.group_sig != emb.supergroup->signature())
        throw GroupMismatch("character is not over the embedding's supergroup");
    CharacterElement out;
    out.group_sig = emb.subgroup->signature();
    for (const auto& [mu, m] : c.coeffs)
        for (const auto& [nu, k] : branch(mu, emb).coeffs) out.add(nu, m * k);
    return out;
}

} // namespace fq
