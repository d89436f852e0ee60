#include "preproj/resolution.hpp"

#include <doctest.h>

using namespace preproj;

namespace {

struct Fixture {
    GradedAlgebra alg;
    FrobeniusData fd;
    Automorphisms au;
    Resolution res;
    Fixture(QuiverKind kind, int size, int max_index)
        : alg(build_preprojective(double_quiver(kind == QuiverKind::TypeT ? make_type_t(size) : make_type_a(size)))),
          fd(frobenius(alg)),
          au(automorphisms(alg)),
          res(alg, fd, max_index) {}
};

}  // namespace

TEST_CASE("periodic resolution is exact for T_1..T_3") {
    for (int n = 1; n <= 3; ++n) {
        CAPTURE(n);
        Fixture f(QuiverKind::TypeT, n, 13);
        auto rep = check_exactness(f.res);
        CHECK(rep.complex_ok);
        CHECK(rep.degrees_ok);
        CHECK(rep.exact);
        CHECK(rep.augmentation_onto);
        CHECK(rep.period_shift_ok);
        CHECK(rep.failures.empty());
    }
}

TEST_CASE("periodic resolution is exact for A_2..A_4") {
    for (int m = 2; m <= 4; ++m) {
        CAPTURE(m);
        Fixture f(QuiverKind::TypeA, m, 13);
        auto rep = check_exactness(f.res);
        CHECK(rep.complex_ok);
        CHECK(rep.exact);
        CHECK(rep.augmentation_onto);
        CHECK(rep.period_shift_ok);
    }
}

TEST_CASE("term shapes and the 2h shift over six steps") {
    Fixture f(QuiverKind::TypeT, 3, 12);
    int h = f.alg.coxeter_number();
    CHECK(f.res.num_generators(0) == 3);
    CHECK(f.res.num_generators(1) == f.alg.quiver().num_arrows());
    CHECK(f.res.num_generators(2) == 3);
    for (int j = 0; j + 6 <= 12; ++j) {
        CHECK(f.res.num_generators(j + 6) == f.res.num_generators(j));
        for (int g = 0; g < f.res.num_generators(j); ++g)
            CHECK(f.res.generator(j + 6, g).degree == f.res.generator(j, g).degree + 2 * h);
        CHECK(f.res.term_dimension(j + 6) == f.res.term_dimension(j));
    }
}

TEST_CASE("d_{j-1} d_j = 0 on generic elements") {
    Fixture f(QuiverKind::TypeT, 2, 8);
    AlgElement x, y;
    for (int i = 0; i < f.alg.dim(); ++i) {
        x[i] = i + 1;
        y[i] = 2 * i - 3;
    }
    for (int j = 2; j <= 8; ++j)
        for (int g = 0; g < f.res.num_generators(j); ++g) {
            const Generator& gen = f.res.generator(j, g);
            BimoduleElement u = f.res.act(x, f.res.basis_element(f.alg.index_of_idempotent(gen.source), g, f.alg.index_of_idempotent(gen.target)), y);
            CHECK(!u.empty());
            CHECK(f.res.apply_d(j - 1, f.res.apply_d(j, u)).empty());
        }
}

TEST_CASE("self-duality of the first terms for type T") {
    for (int n = 1; n <= 3; ++n) {
        Fixture f(QuiverKind::TypeT, n, 6);
        auto sd = check_self_duality(f.res, f.au);
        CHECK(sd.i_is_d0_dual);
        CHECK(sd.d2_is_d1_dual);
    }
}

TEST_CASE("twisting automorphism") {
    Fixture t(QuiverKind::TypeT, 3, 6);
    for (int v = 0; v < 3; ++v) CHECK(t.res.twist_vertex(v, 1) == v);
    Fixture a(QuiverKind::TypeA, 4, 6);
    for (int v = 0; v < 4; ++v) {
        CHECK(a.res.twist_vertex(v, 1) == 3 - v);
        CHECK(a.res.twist_vertex(v, 2) == v);
    }
}
