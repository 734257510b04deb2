#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fq/errors.hpp"
#include "fq/rational.hpp"

namespace fq {

// Compact connected groups supported as finite products of three factor
// kinds. Weight coordinates are integers throughout:
//   - Torus(k): k coordinates, lattice Z^k, no roots.
//   - U(n): n coordinates, lattice Z^n, simple roots e_i - e_{i+1}.
//   - SU(2): one coordinate m (the pairing with the simple coroot), lattice Z,
//     simple root 2; the Weyl group acts by negation.
//   - SU(n), n >= 3: n coordinates summing to zero. Inputs are canonicalized
//     by subtracting the coordinate mean when it is an integer and rejected
//     otherwise, so the representable weights form the sum-zero lattice.
enum class FactorKind { Torus, U, SU };

struct Factor {
    FactorKind kind;
    int n; // rank for Torus, matrix size for U/SU

    int ambient_dim() const {
        if (kind == FactorKind::SU && n == 2) return 1;
        return n;
    }
    int rank() const {
        switch (kind) {
            case FactorKind::Torus: return n;
            case FactorKind::U: return n;
            case FactorKind::SU: return n - 1;
        }
        return 0;
    }
};

struct GroupSpec {
    std::vector<Factor> factors;

    int ambient_dim() const;
    int total_rank() const;
    // "U2|T1|SU3": used for equality checks and cache keys.
    std::string signature() const;
    void validate() const;

    bool operator==(const GroupSpec& o) const { return signature() == o.signature(); }
};

struct Weight {
    std::vector<std::int64_t> coords;

    Weight() = default;
    explicit Weight(std::vector<std::int64_t> c) : coords(std::move(c)) {}

    std::size_t size() const { return coords.size(); }
    std::int64_t operator[](std::size_t i) const { return coords[i]; }

    auto operator<=>(const Weight&) const = default;
    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight operator*(std::int64_t k) const;
    std::int64_t dot(const Weight& o) const;
    std::int64_t norm_sq() const;

    std::string to_string() const; // "(2,0)"
};

struct DominantRep {
    Weight weight;
    int parity; // determinant of the Weyl element used, +1 or -1
};

class RootSystem {
public:
    explicit RootSystem(GroupSpec spec);

    const GroupSpec& group() const { return spec_; }
    const std::string& signature() const { return sig_; }
    int ambient_dim() const { return ambient_; }
    int total_rank() const { return spec_.total_rank(); }

    const std::vector<Weight>& simple_roots() const { return simple_roots_; }
    const std::vector<Weight>& simple_coroots() const { return simple_coroots_; }
    const std::vector<Weight>& positive_roots() const { return positive_roots_; }
    std::uint64_t weyl_order() const { return weyl_order_; }
    const Weight& delta() const { return delta_; }

    // Integer vectors spanning the weight lattice inside the ambient space,
    // one basis column per lattice dimension (= total_rank).
    const std::vector<Weight>& lattice_basis() const { return lattice_basis_; }
    // Coordinates of an ambient lattice vector in lattice_basis(); exact.
    std::vector<std::int64_t> to_lattice_coords(const Weight& w) const;
    Weight from_lattice_coords(const std::vector<std::int64_t>& y) const;

    // Enforces coordinate count and SU(n>=3) sum-zero canonicalization.
    Weight canonical(const Weight& w) const;
    bool in_lattice_span(const Weight& w) const; // sum-zero on SU(n>=3) blocks

    std::int64_t pairing(const Weight& w, std::size_t simple_index) const;
    Weight reflect(const Weight& w, std::size_t simple_index) const;

    // Half-open per-factor coordinate ranges [begin, end).
    const std::vector<std::pair<int, int>>& blocks() const { return blocks_; }

private:
    GroupSpec spec_;
    std::string sig_;
    int ambient_ = 0;
    std::vector<Weight> simple_roots_;
    std::vector<Weight> simple_coroots_;
    std::vector<Weight> positive_roots_;
    std::vector<Weight> lattice_basis_;
    std::uint64_t weyl_order_ = 1;
    Weight delta_;
    std::vector<std::pair<int, int>> blocks_;
};

RootSystem build_root_system(const GroupSpec& spec);

bool is_dominant(const Weight& w, const RootSystem& rs);

std::set<Weight> weyl_orbit(const Weight& w, const RootSystem& rs);

// Unique dominant element of the orbit together with the sign of the Weyl
// element reaching it; nullopt when a reflection fixes w (orbit on a wall).
std::optional<DominantRep> dominant_representative(const Weight& w, const RootSystem& rs);

// Same, but on raw coordinates without lattice canonicalization. Needed by
// alternation kernels that shift weights by the Weyl vector surrogate.
std::optional<DominantRep> dominant_representative_raw(const Weight& w, const RootSystem& rs);

// Dominant element of the orbit, wall or not.
Weight dominant_in_orbit(const Weight& w, const RootSystem& rs);

double weight_norm(const Weight& w, const RootSystem& rs);

// Exact check of ||a|| <= ||b|| + ||c|| using squared norms only.
bool norm_triangle_le(std::int64_t a_sq, std::int64_t b_sq, std::int64_t c_sq);

} // namespace fq
