#include "preproj/cup.hpp"

#include <doctest.h>

using namespace preproj;

namespace {

struct Fixture {
    GradedAlgebra alg;
    FrobeniusData fd;
    Automorphisms au;
    Resolution res;
    CohomologyRing ring;
    explicit Fixture(int n)
        : alg(build_preprojective(double_quiver(make_type_t(n)))),
          fd(frobenius(alg)),
          au(automorphisms(alg)),
          res(alg, fd, 13),
          ring(res, 12) {}
};

}  // namespace

TEST_CASE("alpha for T_2: both routes give the negated closed formula") {
    Fixture f(2);
    auto rep = alpha_matrix(f.res, f.ring.groups(), f.au);
    Matrix printed = Matrix::from_ints({{3, 1}, {1, 2}});
    CHECK(alpha_formula_matrix(f.alg) == printed);
    CHECK(rep.cup == printed.scaled(-1));
    CHECK(rep.closed_form == rep.cup);
    CHECK(rep.routes_agree);
    CHECK(rep.symmetric);
    CHECK(rep.invertible);
    CHECK(!rep.matches_formula);
    CHECK(rep.matches_negated_formula);
    CHECK(rep.derivative_matches);
}

TEST_CASE("alpha for T_1 and T_3") {
    for (int n : {1, 3}) {
        CAPTURE(n);
        Fixture f(n);
        auto rep = alpha_matrix(f.res, f.ring.groups(), f.au);
        CHECK(rep.routes_agree);
        CHECK(rep.symmetric);
        CHECK(rep.invertible);
        CHECK(rep.matches_negated_formula);
    }
}

TEST_CASE("zeta_{h-3}^2 = -f_n^(1) and h_i zeta_{h-3} = -delta_{in} theta_{h-3}^(1)") {
    for (int n = 1; n <= 3; ++n) {
        CAPTURE(n);
        Fixture f(n);
        int h = 2 * n + 1;
        Class zeta = f.ring.element(Family::Zeta, h - 3);
        CHECK(f.ring.cup(zeta, zeta) == Rational(-1) * f.ring.element(Family::F, n, 1));
        for (int i = 1; i <= n; ++i) {
            Class hz = f.ring.cup(f.ring.element(Family::H, i), zeta);
            Class want = i == n ? Rational(-1) * f.ring.element(Family::Theta, h - 3, 1) : f.ring.zero(hz.index);
            CHECK(hz == want);
        }
    }
}

TEST_CASE("f_i zeta_{h-3} = i z^(1) and f_i psi = i theta^(1)") {
    Fixture f(3);
    int h = 7;
    for (int i = 1; i <= 3; ++i) {
        Class fz = f.ring.cup(f.ring.element(Family::F, i), f.ring.element(Family::Zeta, h - 3));
        CHECK(fz == Rational(i) * f.ring.element(Family::Z, h - 3, 1));
        Class fp = f.ring.cup(f.ring.element(Family::F, i), f.ring.element(Family::Psi, h - 3));
        CHECK(fp == Rational(i) * f.ring.element(Family::Theta, h - 3, 1));
    }
}

TEST_CASE("graded commutativity on the named basis of T_2") {
    Fixture f(2);
    std::size_t checked = 0;
    for (int p = 0; p <= 6; ++p)
        for (int q = 0; p + q <= 12; ++q)
            for (std::size_t i = 0; i < f.ring.basis(p).size(); ++i)
                for (std::size_t j = 0; j < f.ring.basis(q).size(); ++j) {
                    const Class& ab = f.ring.cup_basis(p, i, q, j);
                    const Class& ba = f.ring.cup_basis(q, j, p, i);
                    CHECK(ab == Rational((p * q) % 2 ? -1 : 1) * ba);
                    ++checked;
                }
    CHECK(checked > 100);
}

TEST_CASE("frozen statuses of the product relations for T_2") {
    Fixture f(2);
    auto rep = check_cup_theorem(f.ring);
    CHECK(rep.n == 2);
    CHECK(rep.h == 5);
    std::map<std::string, bool> want{
        {"periodicity", true},
        {"u_action_on_hh0_hh1", true},
        {"u_action_on_dual", true},
        {"u_plus_kills_omega_hh2_hh3", true},
        {"r_star_kills_positive_part", true},
        {"odd_products_zero", true},
        {"theta_zeta_equals_z_psi", true},
        {"u_plus_theta_kills_hh2", true},
        {"alpha_symmetric_isomorphism", true},
        {"alpha_closed_form", false},
        {"f_pairing_is_alpha", true},
        {"f_h_pairing", true},
        {"u_minus_dual_kills_hh2_to_hh5", true},
        {"f_zeta_top", true},
        {"f_psi_top", true},
        {"f_zeta_top_equals_i_theta", false},
        {"h_zeta_top", false},
        {"zeta_top_squared", false},
        {"zeta_psi_top", true},
        {"psi_f_matches_zeta_f", true},
        {"zeta_f_is_vertex_coordinate", false},
        {"zeta_h_is_distance_weighted", false},
        {"zeta_f_exchanged", true},
        {"zeta_h_exchanged", true},
        {"zeta_prime_normalizable", false},
    };
    CHECK(rep.items.size() == want.size());
    for (const auto& item : rep.items) {
        CAPTURE(item.name);
        REQUIRE(want.count(item.name));
        CHECK(item.holds == want.at(item.name));
    }
    CHECK(rep.zeta_f_vertex == -1);
    CHECK(rep.zeta_h_vertex == 2);
}
