#include <doctest.h>

#include "fq/char_ring.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace fq;
using namespace fqtest;

namespace {

WeightMultiset ms(std::initializer_list<std::pair<Weight, std::int64_t>> entries) {
    WeightMultiset out;
    for (const auto& [w, m] : entries) out.add(w, m);
    return out;
}

} // namespace

TEST_SUITE("char_ring") {

TEST_CASE("weight systems of small irreducibles") {
    auto su2 = rs_of(su_group(2));
    auto sys3 = weight_multiplicities(wt({3}), *su2);
    CHECK(sys3->counts ==
          ms({{wt({3}), 1}, {wt({1}), 1}, {wt({-1}), 1}, {wt({-3}), 1}}).counts);

    auto u2 = rs_of(u_group(2));
    CHECK(weight_multiplicities(wt({1, 0}), *u2)->counts ==
          ms({{wt({1, 0}), 1}, {wt({0, 1}), 1}}).counts);

    auto su3 = rs_of(su_group(3));
    auto adj = weight_multiplicities(wt({1, 0, -1}), *su3);
    CHECK(adj->total() == 8);
    CHECK(adj->counts.at(wt({0, 0, 0})) == 2);
    int nonzero = 0;
    for (const auto& [w, m] : adj->counts)
        if (w.norm_sq() > 0) {
            CHECK(m == 1);
            ++nonzero;
        }
    CHECK(nonzero == 6);
}

TEST_CASE("weight systems match the alternating-quotient character numerically") {
    std::mt19937 gen(20240812);
    std::uniform_real_distribution<double> angle(0.2, 1.1);
    struct Probe {
        GroupSpec g;
        Weight lambda;
    };
    std::vector<Probe> probes = {{u_group(2), wt({3, 1})},
                                 {u_group(2), wt({2, -2})},
                                 {su_group(2), wt({4})},
                                 {su_group(3), wt({2, 1, -3})},
                                 {su_group(3), wt({1, 0, -1})},
                                 {u_group(3), wt({2, 1, 0})}};
    for (const auto& p : probes) {
        auto rs = rs_of(p.g);
        auto ws = weight_multiplicities(p.lambda, *rs);
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<double> t(rs->ambient_dim());
            for (auto& v : t) v = angle(gen);
            auto direct = character_from_weights(*ws, t);
            auto quotient = character_weyl_quotient(p.lambda, *rs, t);
            CHECK(std::abs(direct - quotient) < 1e-8 * (1.0 + std::abs(direct)));
        }
    }
}

TEST_CASE("weight system W-invariance") {
    auto su3 = rs_of(su_group(3));
    auto ws = weight_multiplicities(wt({2, 0, -2}), *su3);
    for (const auto& [w, m] : ws->counts)
        for (std::size_t i = 0; i < su3->simple_roots().size(); ++i)
            CHECK(ws->counts.at(su3->reflect(w, i)) == m);
}

TEST_CASE("dimensions") {
    auto u2 = rs_of(u_group(2));
    CHECK(dim(wt({2, 0}), *u2) == 3);
    CHECK(dim(wt({0, 0}), *u2) == 1);
    CHECK(dim(wt({0, 0, 0}), *rs_of(su_group(3))) == 1);
    CHECK(dim(wt({0}), *rs_of(su_group(2))) == 1);

    for (std::int64_t j = 0; j <= 6; ++j)
        CHECK(dim(wt({0, -j}), *u2) == j + 1); // monomials of degree j in two variables

    // dim equals the weight-system total
    for (const auto& g : {u_group(2), su_group(3), su_group(2), u_group(3)}) {
        auto rs = rs_of(g);
        for (const auto& lam : dominant_weights_up_to(*rs, 8))
            CHECK(dim(lam, *rs) == weight_multiplicities(lam, *rs)->total());
    }

    CHECK_THROWS_AS(dim(wt({0, 1}), *u2), NonDominant);
}

TEST_CASE("tensor products, pinned examples") {
    auto su2 = rs_of(su_group(2));
    auto cg = tensor(wt({1}), wt({1}), *su2);
    CHECK(cg.coeffs == std::map<Weight, std::int64_t>{{wt({2}), 1}, {wt({0}), 1}});

    auto u2 = rs_of(u_group(2));
    auto sym_alt = tensor(wt({1, 0}), wt({1, 0}), *u2);
    CHECK(sym_alt.coeffs ==
          std::map<Weight, std::int64_t>{{wt({2, 0}), 1}, {wt({1, 1}), 1}});

    auto mixed = tensor(wt({1, 0}), wt({0, -1}), *u2);
    CHECK(mixed.coeffs ==
          std::map<Weight, std::int64_t>{{wt({1, -1}), 1}, {wt({0, 0}), 1}});
    CHECK(mixed == tensor_by_convolution(wt({1, 0}), wt({0, -1}), *u2));
}

TEST_CASE("tensor against the convolution oracle, exhaustive small range") {
    for (const auto& g : {u_group(2), su_group(3)}) {
        auto rs = rs_of(g);
        auto doms = dominant_weights_up_to(*rs, 16);
        for (const auto& lam : doms) {
            for (const auto& th : doms) {
                auto fast = tensor(lam, th, *rs);
                auto slow = tensor_by_convolution(lam, th, *rs);
                REQUIRE_MESSAGE(fast == slow, "tensor mismatch at ", lam.to_string(), " x ",
                                th.to_string());
                CHECK(fast == tensor(th, lam, *rs));
                CHECK(char_dim(fast, *rs) == dim(lam, *rs) * dim(th, *rs));
                for (const auto& [mu, c] : fast.coeffs) {
                    CHECK(c > 0);
                    CHECK(norm_triangle_le(lam.norm_sq(), th.norm_sq(), mu.norm_sq()));
                }
            }
        }
    }
}

TEST_CASE("tensor_elements") {
    auto su2 = rs_of(su_group(2));
    CharacterElement a;
    a.group_sig = su2->signature();
    a.add(wt({1}), 1);
    a.add(wt({0}), 1);
    CharacterElement b;
    b.group_sig = su2->signature();
    b.add(wt({1}), 1);

    auto prod = tensor_elements(a, b, *su2);
    CHECK(prod.coeffs ==
          std::map<Weight, std::int64_t>{{wt({2}), 1}, {wt({1}), 1}, {wt({0}), 1}});

    CHECK(tensor_elements(a, trivial_character(*su2), *su2) == a);

    // dim is a ring homomorphism, including on virtual elements
    std::mt19937 gen(99);
    std::uniform_int_distribution<int> coeff(-2, 2);
    auto doms = dominant_weights_up_to(*su2, 9);
    for (int trial = 0; trial < 10; ++trial) {
        CharacterElement x, y;
        x.group_sig = y.group_sig = su2->signature();
        for (const auto& d : doms) {
            x.add(d, coeff(gen));
            y.add(d, coeff(gen));
        }
        CHECK(char_dim(tensor_elements(x, y, *su2), *su2) ==
              char_dim(x, *su2) * char_dim(y, *su2));
    }

    CharacterElement wrong;
    wrong.group_sig = "U3";
    CHECK_THROWS_AS(tensor_elements(a, wrong, *su2), GroupMismatch);
}

TEST_CASE("decompose_weights") {
    auto u2 = rs_of(u_group(2));
    auto std_rep = decompose_weights(ms({{wt({1, 0}), 1}, {wt({0, 1}), 1}}), *u2);
    CHECK(std_rep.coeffs == std::map<Weight, std::int64_t>{{wt({1, 0}), 1}});

    auto trivials = decompose_weights(ms({{wt({0, 0}), 2}}), *u2);
    CHECK(trivials.coeffs == std::map<Weight, std::int64_t>{{wt({0, 0}), 2}});

    CHECK_THROWS_AS(decompose_weights(ms({{wt({1, 0}), 1}}), *u2), NotACharacter);
    CHECK_THROWS_AS(decompose_weights(ms({{wt({0, 1}), 1}}), *u2), NotACharacter);

    // inverse of weight_multiplicities on every small dominant weight
    for (const auto& g : {u_group(2), su_group(2), su_group(3), u_group(3)}) {
        auto rs = rs_of(g);
        for (const auto& lam : dominant_weights_up_to(*rs, 36)) {
            auto back = decompose_weights(*weight_multiplicities(lam, *rs), *rs);
            CHECK(back.coeffs == std::map<Weight, std::int64_t>{{lam, 1}});
        }
    }
}

TEST_CASE("duals") {
    auto u2 = rs_of(u_group(2));
    CHECK(dual(wt({1, 0}), *u2) == wt({0, -1}));
    CHECK(dual(wt({0, 0}), *u2) == wt({0, 0}));

    auto su2 = rs_of(su_group(2));
    for (std::int64_t m = 0; m <= 5; ++m) CHECK(dual(wt({m}), *su2) == wt({m}));

    auto u3 = rs_of(u_group(3));
    CHECK(dual(wt({2, 1, 0}), *u3) == wt({0, -1, -2}));

    for (const auto& g : {u_group(2), u_group(3), su_group(3)}) {
        auto rs = rs_of(g);
        for (const auto& lam : dominant_weights_up_to(*rs, 10)) {
            CHECK(dual(dual(lam, *rs), *rs) == lam);
            CHECK(dim(dual(lam, *rs), *rs) == dim(lam, *rs));
        }
    }
}

}
