#include <doctest.h>

#include "fq/lie.hpp"
#include "test_util.hpp"

using namespace fq;
using namespace fqtest;

TEST_SUITE("lie") {

TEST_CASE("root data for the supported factor kinds") {
    auto u2 = build_root_system(u_group(2));
    REQUIRE(u2.simple_roots().size() == 1);
    CHECK(u2.simple_roots()[0] == wt({1, -1}));
    CHECK(u2.weyl_order() == 2);

    auto t2 = build_root_system(torus_group(2));
    CHECK(t2.simple_roots().empty());
    CHECK(t2.weyl_order() == 1);

    auto mixed = build_root_system(product({Factor{FactorKind::U, 2},
                                            Factor{FactorKind::Torus, 1}}));
    REQUIRE(mixed.simple_roots().size() == 1);
    CHECK(mixed.simple_roots()[0] == wt({1, -1, 0}));
    CHECK(mixed.weyl_order() == 2);

    auto su3 = build_root_system(su_group(3));
    CHECK(su3.simple_roots().size() == 2);
    CHECK(su3.weyl_order() == 6);
    CHECK(su3.total_rank() == 2);
    CHECK(su3.ambient_dim() == 3);

    auto su2 = build_root_system(su_group(2));
    CHECK(su2.ambient_dim() == 1);
    CHECK(su2.simple_roots()[0] == wt({2}));
    CHECK(su2.weyl_order() == 2);
}

TEST_CASE("Cartan pairings match type A") {
    for (const auto& g : {u_group(3), su_group(3), u_group(2)}) {
        auto rs = build_root_system(g);
        for (std::size_t i = 0; i < rs.simple_roots().size(); ++i) {
            for (std::size_t j = 0; j < rs.simple_roots().size(); ++j) {
                std::int64_t cartan = rs.pairing(rs.simple_roots()[i], j);
                if (i == j)
                    CHECK(cartan == 2);
                else
                    CHECK((cartan == 0 || cartan == -1));
            }
        }
    }
    auto su2 = build_root_system(su_group(2));
    CHECK(su2.pairing(su2.simple_roots()[0], 0) == 2);
}

TEST_CASE("group validation") {
    CHECK_THROWS_AS(build_root_system(GroupSpec{}), InvalidInput);
    CHECK_THROWS_AS(build_root_system(GroupSpec{{Factor{FactorKind::SU, 1}}}), InvalidInput);
    CHECK_THROWS_AS(build_root_system(GroupSpec{{Factor{FactorKind::Torus, 0}}}),
                    InvalidInput);
}

TEST_CASE("SU(n>=3) canonicalization") {
    auto su3 = build_root_system(su_group(3));
    CHECK(su3.canonical(wt({2, -1, -1})) == wt({2, -1, -1}));
    CHECK(su3.canonical(wt({3, 0, 0})) == wt({2, -1, -1}));
    CHECK_THROWS_AS(su3.canonical(wt({1, 0, 0})), InvalidInput);
    CHECK_THROWS_AS(su3.canonical(wt({1, 0})), InvalidInput);
}

TEST_CASE("dominance") {
    auto u2 = build_root_system(u_group(2));
    CHECK(is_dominant(wt({1, 0}), u2));
    CHECK_FALSE(is_dominant(wt({0, 1}), u2));
    auto t2 = build_root_system(torus_group(2));
    CHECK(is_dominant(wt({-5, 17}), t2));
}

TEST_CASE("orbits") {
    auto u2 = build_root_system(u_group(2));
    CHECK(weyl_orbit(wt({1, 0}), u2) == std::set<Weight>{wt({1, 0}), wt({0, 1})});
    CHECK(weyl_orbit(wt({1, 1}), u2) == std::set<Weight>{wt({1, 1})});

    auto su3 = build_root_system(su_group(3));
    CHECK(weyl_orbit(wt({2, 1, -3}), su3).size() == 6);
    CHECK(weyl_orbit(wt({1, 0, -1}), su3).size() == 6);
    CHECK(weyl_orbit(wt({0, 0, 0}), su3).size() == 1);

    auto su2 = build_root_system(su_group(2));
    CHECK(weyl_orbit(wt({3}), su2) == std::set<Weight>{wt({3}), wt({-3})});
}

TEST_CASE("orbit properties over random weights") {
    std::mt19937 gen(20240811);
    std::vector<GroupSpec> groups = {
        u_group(2), u_group(3), su_group(2), su_group(3),
        product({Factor{FactorKind::U, 2}, Factor{FactorKind::SU, 2}}),
        product({Factor{FactorKind::Torus, 1}, Factor{FactorKind::U, 2}})};
    for (const auto& g : groups) {
        auto rs = build_root_system(g);
        for (int trial = 0; trial < 12; ++trial) {
            Weight w = random_weight(rs, gen);
            auto orbit = weyl_orbit(w, rs);
            CHECK(rs.weyl_order() % orbit.size() == 0);
            int dominant_count = 0;
            for (const auto& o : orbit) {
                if (is_dominant(o, rs)) ++dominant_count;
                CHECK(o.norm_sq() == rs.canonical(w).norm_sq());
                for (std::size_t i = 0; i < rs.simple_roots().size(); ++i)
                    CHECK(orbit.count(rs.reflect(o, i)) == 1);
            }
            CHECK(dominant_count == 1);
        }
    }
}

TEST_CASE("dominant representative") {
    auto u2 = build_root_system(u_group(2));
    auto r1 = dominant_representative(wt({0, 2}), u2);
    REQUIRE(r1.has_value());
    CHECK(r1->weight == wt({2, 0}));
    CHECK(r1->parity == -1);

    CHECK_FALSE(dominant_representative(wt({1, 1}), u2).has_value());

    auto r3 = dominant_representative(wt({3, 1}), u2);
    REQUIRE(r3.has_value());
    CHECK(r3->weight == wt({3, 1}));
    CHECK(r3->parity == 1);

    // idempotent on the weight part
    auto su3 = build_root_system(su_group(3));
    std::mt19937 gen(7);
    for (int trial = 0; trial < 20; ++trial) {
        Weight w = random_weight(su3, gen);
        auto rep = dominant_representative(w, su3);
        if (!rep) continue;
        auto again = dominant_representative(rep->weight, su3);
        REQUIRE(again.has_value());
        CHECK(again->weight == rep->weight);
        CHECK(again->parity == 1);
        CHECK(weyl_orbit(w, su3).count(rep->weight) == 1);
    }
}

TEST_CASE("norms") {
    auto u2 = build_root_system(u_group(2));
    CHECK(weight_norm(wt({0, 0}), u2) == 0.0);
    CHECK(weight_norm(wt({3, 4}), u2) == 5.0);
    CHECK(wt({3, 4}).norm_sq() == 25);

    CHECK(norm_triangle_le(25, 9, 4));        // 5 <= 3 + 2
    CHECK_FALSE(norm_triangle_le(26, 9, 4));  // sqrt(26) > 5
    CHECK(norm_triangle_le(2, 1, 1));
}

TEST_CASE("lattice coordinates round trip") {
    for (const auto& g : {su_group(3), u_group(3), su_group(2),
                          product({Factor{FactorKind::SU, 3}, Factor{FactorKind::Torus, 1}})}) {
        auto rs = build_root_system(g);
        std::mt19937 gen(11);
        for (int trial = 0; trial < 10; ++trial) {
            Weight w = rs.canonical(random_weight(rs, gen));
            CHECK(rs.from_lattice_coords(rs.to_lattice_coords(w)) == w);
        }
    }
}

}
