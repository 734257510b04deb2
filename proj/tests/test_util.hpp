#pragma once

#include <memory>
#include <random>

#include "fq/char_ring.hpp"

namespace fqtest {

inline fq::GroupSpec u_group(int n) {
    return fq::GroupSpec{{fq::Factor{fq::FactorKind::U, n}}};
}
inline fq::GroupSpec su_group(int n) {
    return fq::GroupSpec{{fq::Factor{fq::FactorKind::SU, n}}};
}
inline fq::GroupSpec torus_group(int k) {
    return fq::GroupSpec{{fq::Factor{fq::FactorKind::Torus, k}}};
}
inline fq::GroupSpec product(std::initializer_list<fq::Factor> fs) {
    return fq::GroupSpec{fs};
}

inline std::shared_ptr<const fq::RootSystem> rs_of(const fq::GroupSpec& g) {
    return std::make_shared<fq::RootSystem>(g);
}

inline fq::Weight wt(std::initializer_list<std::int64_t> c) {
    return fq::Weight(std::vector<std::int64_t>(c));
}

// Dominant weights of the group with squared norm at most nsq_max.
std::vector<fq::Weight> dominant_weights_up_to(const fq::RootSystem& rs,
                                               std::int64_t nsq_max);

// Deterministic lattice-valid random weight with coordinates in [-span, span].
fq::Weight random_weight(const fq::RootSystem& rs, std::mt19937& gen, int span = 4);

} // namespace fqtest
