#include <doctest.h>

#include <cmath>
#include <random>

#include "fq/polytope.hpp"
#include "test_util.hpp"

using namespace fq;
using namespace fqtest;

namespace {

AdaptedPolytope interval_su2(std::int64_t a = 2) {
    return AdaptedPolytope(rs_of(su_group(2)), {wt({-a}), wt({a})});
}

AdaptedPolytope square_u2() {
    return AdaptedPolytope(rs_of(u_group(2)),
                           {wt({1, 1}), wt({-1, -1}), wt({1, -1}), wt({-1, 1})});
}

AdaptedPolytope hexagon_su3() {
    auto rs = rs_of(su_group(3));
    std::vector<Weight> verts(weyl_orbit(wt({1, 0, -1}), *rs).begin(),
                              weyl_orbit(wt({1, 0, -1}), *rs).end());
    return AdaptedPolytope(rs, verts);
}

double norm2(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

} // namespace

TEST_SUITE("polytope") {

TEST_CASE("construction rejects non-extreme points") {
    CHECK_THROWS_AS(AdaptedPolytope(rs_of(su_group(2)), {wt({-2}), wt({0}), wt({2})}),
                    InvalidInput);
    CHECK_THROWS_AS(
        AdaptedPolytope(rs_of(u_group(2)), {wt({1, 1}), wt({-1, -1}), wt({0, 0})}),
        InvalidInput);
}

TEST_CASE("adapted checks on the three reference polytopes") {
    auto r1 = check_adapted(interval_su2());
    CHECK(r1.vertices_regular_lattice);
    CHECK(r1.w_invariant);
    CHECK(r1.delzant);
    CHECK(r1.all());

    auto r2 = check_adapted(square_u2());
    CHECK_FALSE(r2.vertices_regular_lattice); // (1,1) is reflection-fixed
    CHECK(r2.w_invariant);
    CHECK(r2.delzant);
    CHECK_FALSE(r2.all());

    auto r3 = check_adapted(hexagon_su3());
    CHECK(r3.vertices_regular_lattice);
    CHECK(r3.w_invariant);
    CHECK(r3.delzant);
}

TEST_CASE("adapted checks are invariant under relisting and the group action") {
    auto rs = rs_of(su_group(3));
    std::vector<Weight> verts(weyl_orbit(wt({1, 0, -1}), *rs).begin(),
                              weyl_orbit(wt({1, 0, -1}), *rs).end());
    auto base = check_adapted(AdaptedPolytope(rs, verts));

    std::reverse(verts.begin(), verts.end());
    auto relisted = check_adapted(AdaptedPolytope(rs, verts));
    CHECK(base.vertices_regular_lattice == relisted.vertices_regular_lattice);
    CHECK(base.w_invariant == relisted.w_invariant);
    CHECK(base.delzant == relisted.delzant);

    std::vector<Weight> reflected;
    for (const auto& v : verts) reflected.push_back(rs->reflect(v, 0));
    auto moved = check_adapted(AdaptedPolytope(rs, reflected));
    CHECK(base.w_invariant == moved.w_invariant);
    CHECK(base.delzant == moved.delzant);
}

TEST_CASE("non-full-dimensional polytopes are rejected") {
    AdaptedPolytope flat(rs_of(u_group(2)), {wt({1, 1}), wt({-1, -1})});
    CHECK_THROWS_AS(check_adapted(flat), NotFullDimensional);
}

TEST_CASE("dilation") {
    auto P = interval_su2();
    auto Q = dilate(P, 3);
    CHECK(Q.vertices() == std::vector<Weight>{wt({-6}), wt({6})});
    CHECK_THROWS_AS(dilate(P, 0), InvalidInput);

    for (std::int64_t n = 1; n <= 5; ++n) {
        CHECK(check_adapted(dilate(P, n)).all());
        CHECK(check_adapted(dilate(hexagon_su3(), n)).all());
        // inball radius is homogeneous, exactly
        CHECK(biggest_ball_radius_sq(dilate(P, n)) ==
              Rational(n * n) * biggest_ball_radius_sq(P));
        CHECK(biggest_ball_radius_sq(dilate(hexagon_su3(), n)) ==
              Rational(n * n) * biggest_ball_radius_sq(hexagon_su3()));
    }
}

TEST_CASE("one-skeleton lattice points") {
    auto pts = one_skeleton_lattice_points(interval_su2());
    CHECK(pts == std::vector<Weight>{wt({0}), wt({1}), wt({2})});

    auto dil = one_skeleton_lattice_points(dilate(interval_su2(), 2));
    CHECK(dil == std::vector<Weight>{wt({0}), wt({1}), wt({2}), wt({3}), wt({4})});

    auto hex = one_skeleton_lattice_points(hexagon_su3());
    CHECK(hex == std::vector<Weight>{wt({1, 0, -1})});
}

TEST_CASE("polytope weight system") {
    auto ws = weight_system_of_P(interval_su2());
    std::map<Weight, std::int64_t> expected{
        {wt({-2}), 1}, {wt({-1}), 1}, {wt({0}), 2}, {wt({1}), 1}, {wt({2}), 1}};
    CHECK(ws.counts == expected);

    // W-invariant as a multiset
    auto rs = rs_of(su_group(3));
    auto hex_ws = weight_system_of_P(hexagon_su3());
    for (const auto& [w, m] : hex_ws.counts)
        for (std::size_t i = 0; i < rs->simple_roots().size(); ++i)
            CHECK(hex_ws.counts.at(rs->reflect(w, i)) == m);

    // contains every lattice point of the 1-faces
    for (const auto& lam : one_skeleton_lattice_points(hexagon_su3()))
        for (const auto& orbit_pt : weyl_orbit(lam, *rs))
            CHECK(hex_ws.counts.count(orbit_pt) == 1);

    CHECK_THROWS_AS(weight_system_of_P(square_u2()), NotAdapted);
}

TEST_CASE("psi at the symmetric point and in the deep chamber") {
    auto P = interval_su2();
    CHECK(psi_T(P, {0.0})[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(psi_T(P, {-30.0})[0] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(psi_T(P, {30.0})[0] == doctest::Approx(-2.0).epsilon(1e-9));

    auto hex = hexagon_su3();
    auto center = psi_T(hex, {0.0, 0.0, 0.0});
    CHECK(norm2(center) < 1e-12);
}

TEST_CASE("psi matches central differences of the potential") {
    std::mt19937 gen(20240813);
    std::uniform_real_distribution<double> coord(-1.5, 1.5);
    const double h = 1e-5;
    for (int which = 0; which < 2; ++which) {
        AdaptedPolytope P = which == 0 ? interval_su2() : hexagon_su3();
        const int dim = P.group().ambient_dim();
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<double> Y(dim);
            for (auto& v : Y) v = coord(gen);
            auto psi = psi_T(P, Y);
            // gradient of the potential evaluated at -2Y
            std::vector<double> X(dim);
            for (int i = 0; i < dim; ++i) X[i] = -2.0 * Y[i];
            for (int i = 0; i < dim; ++i) {
                auto Xp = X, Xm = X;
                Xp[i] += h;
                Xm[i] -= h;
                double fd = (potential_F(P, Xp) - potential_F(P, Xm)) / (2 * h);
                CHECK(std::fabs(fd - psi[i]) < 1e-8);
            }
        }
    }
}

TEST_CASE("psi lands strictly inside the polytope") {
    std::mt19937 gen(20240814);
    std::uniform_real_distribution<double> coord(-4.0, 4.0);
    auto hex = hexagon_su3();
    auto interval = interval_su2();
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<double> y1{coord(gen)};
        double v = psi_T(interval, y1)[0];
        CHECK(v > -2.0);
        CHECK(v < 2.0);

        std::vector<double> y3{coord(gen), coord(gen), coord(gen)};
        auto p = psi_T(hex, y3);
        for (const auto& f : hex.facets()) {
            // facet functionals act on lattice coordinates (partial sums)
            double val = to_double(f.normal[0]) * p[0] +
                         to_double(f.normal[1]) * (p[0] + p[1]);
            CHECK(val < to_double(f.offset));
        }
    }
}

TEST_CASE("legendre inversion round trips") {
    auto P = interval_su2();
    auto at_zero = legendre_inverse(P, {psi_T(P, {0.0})[0]});
    CHECK(std::fabs(at_zero[0]) < 1e-9);

    auto Y = legendre_inverse(P, {1.5});
    CHECK(Y[0] < 0.0);
    CHECK(std::fabs(psi_T(P, Y)[0] - 1.5) <= 1e-10);

    CHECK_THROWS_AS(legendre_inverse(P, {2.0}), NotInterior);
    CHECK_THROWS_AS(legendre_inverse(P, {2.5}), NotInterior);

    // grid of interior targets with margin
    for (int i = 0; i <= 50; ++i) {
        double xi = -1.9 + i * (3.8 / 50.0);
        auto y = legendre_inverse(P, {xi});
        CHECK(std::fabs(psi_T(P, y)[0] - xi) <= 1e-10);
    }

    auto hex = hexagon_su3();
    double eps = biggest_ball_radius(hex);
    for (int k = 0; k < 10; ++k) {
        double ang = 2 * M_PI * k / 10.0;
        // orthonormal frame of the sum-zero plane
        double e1[3] = {1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0};
        double e2[3] = {1 / std::sqrt(6.0), 1 / std::sqrt(6.0), -2 / std::sqrt(6.0)};
        for (double frac : {0.2, 0.5, 0.8}) {
            std::vector<double> xi(3);
            for (int i = 0; i < 3; ++i)
                xi[i] = frac * eps * (std::cos(ang) * e1[i] + std::sin(ang) * e2[i]);
            auto y = legendre_inverse(hex, xi);
            auto back = psi_T(hex, y);
            double err = 0;
            for (int i = 0; i < 3; ++i) err += (back[i] - xi[i]) * (back[i] - xi[i]);
            CHECK(std::sqrt(err) <= 1e-10);
        }
    }
}

TEST_CASE("divergence criterion") {
    using RV = RatVec;
    CHECK(divergence_criterion({RV{1, 0}, RV{0, 1}, RV{-1, -1}}));
    CHECK_FALSE(divergence_criterion({RV{1, 0}, RV{0, 1}}));
    CHECK(divergence_criterion({RV{1}, RV{-1}}));
    CHECK_FALSE(divergence_criterion({RV{1}, RV{2}}));
    CHECK_FALSE(divergence_criterion({RV{rat(1, 2), rat(1, 2)}, RV{1, 0}, RV{0, 1}}));
    CHECK_THROWS_AS(divergence_criterion({}), InvalidInput);
}

TEST_CASE("divergence criterion agrees with sampled exponential sums") {
    std::mt19937 gen(20240815);
    std::uniform_int_distribution<int> num(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<RatVec> betas;
        int count = 3 + trial % 3;
        for (int i = 0; i < count; ++i)
            betas.push_back(RatVec{Rational(num(gen)), Rational(num(gen))});
        bool exact = divergence_criterion(betas);

        bool sampled = true;
        std::uniform_real_distribution<double> angle(0, 2 * M_PI);
        for (int dir = 0; dir < 10 && sampled; ++dir) {
            double a = angle(gen);
            double vx = std::cos(a), vy = std::sin(a);
            bool exceeded = false;
            for (double t = 1; t <= 200; t += 1) {
                double s = 0;
                for (const auto& b : betas)
                    s += std::exp(t * (to_double(b[0]) * vx + to_double(b[1]) * vy));
                if (s > 1e6) {
                    exceeded = true;
                    break;
                }
            }
            if (!exceeded) sampled = false;
        }
        // the exact rational test is authoritative; sampling corroborates
        CHECK(exact == sampled);
    }
}

TEST_CASE("largest central ball") {
    CHECK(biggest_ball_radius(interval_su2()) == doctest::Approx(2.0));
    CHECK(biggest_ball_radius_sq(interval_su2()) == Rational(4));

    AdaptedPolytope square(rs_of(torus_group(2)),
                           {wt({1, 1}), wt({1, -1}), wt({-1, 1}), wt({-1, -1})});
    CHECK(biggest_ball_radius(square) == doctest::Approx(1.0));
    CHECK(biggest_ball_radius_sq(square) == Rational(1));

    CHECK(biggest_ball_radius_sq(hexagon_su3()) == rat(3, 2));

    AdaptedPolytope off_center(rs_of(u_group(1)), {wt({1}), wt({3})});
    CHECK_THROWS_AS(biggest_ball_radius(off_center), OriginNotInterior);
}

}
