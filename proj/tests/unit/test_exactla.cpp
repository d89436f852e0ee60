#include "preproj/exactla.hpp"

#include <doctest.h>

#include <random>

using namespace preproj;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int range) {
    std::uniform_int_distribution<int> dist(-range, range);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
    return m;
}

}  // namespace

TEST_CASE("rref of a fixed matrix") {
    Matrix m = Matrix::from_ints({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    auto r = rref(m);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
    CHECK(r.form == Matrix::from_ints({{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}));
    CHECK(rank(m) == 2);
}

TEST_CASE("inverse of the T_2 matrix 2 + C") {
    // C has the loop on the diagonal: [[0,1],[1,1]]
    Matrix m = Matrix::from_ints({{2, 1}, {1, 3}});
    auto inv = inverse(m);
    REQUIRE(inv);
    Matrix want(2, 2);
    want(0, 0) = Rational(3, 5);
    want(0, 1) = Rational(-1, 5);
    want(1, 0) = Rational(-1, 5);
    want(1, 1) = Rational(2, 5);
    CHECK(*inv == want);
    CHECK(!inverse(Matrix::from_ints({{1, 2}, {2, 4}})));
}

TEST_CASE("random matrices: rank-nullity, kernel, inverse, solver") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + trial % 6, c = 1 + (trial * 7) % 7;
        Matrix m = random_matrix(rng, r, c, 3);
        if (trial % 3 == 0 && r > 1)
            for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2 - m(r - 2, j);
        auto ker = kernel_basis(m);
        CHECK(rank(m) + ker.size() == c);
        for (const auto& v : ker) CHECK(is_zero(m * v));
        CHECK(image_basis(m).size() == rank(m));
        CHECK(rank(m.transpose()) == rank(m));

        Vector x(c);
        for (std::size_t j = 0; j < c; ++j) x[j] = static_cast<long>(j) - 2;
        Vector b = m * x;
        auto p = solve_particular(m, b);
        REQUIRE(p);
        CHECK(m * *p == b);
        LinearSolver solver(m);
        auto q = solver.solve(b);
        REQUIRE(q);
        CHECK(m * *q == b);
        CHECK(solver.rank() == rank(m));

        if (r == c && rank(m) == r) {
            auto inv = inverse(m);
            REQUIRE(inv);
            CHECK(m * *inv == Matrix::identity(r));
        }
    }
}

TEST_CASE("solver rejects a vector outside the image") {
    Matrix m = Matrix::from_ints({{1, 1}, {1, 1}});
    LinearSolver s(m);
    CHECK(!s.in_image(Vector{1, 0}));
    CHECK(s.in_image(Vector{2, 2}));
}

TEST_CASE("row space reduction") {
    RowSpace rs(3);
    CHECK(rs.add(to_sparse(Vector{1, 2, 0})));
    CHECK(rs.add(to_sparse(Vector{0, 1, 1})));
    CHECK(!rs.add(to_sparse(Vector{1, 3, 1})));
    CHECK(rs.rank() == 2);
    CHECK(rs.contains(to_sparse(Vector{2, 5, 1})));
    CHECK(!rs.contains(to_sparse(Vector{0, 0, 1})));
}

TEST_CASE("dimension mismatch throws") {
    Matrix a(2, 3), b(2, 3);
    CHECK_THROWS_AS(a * b, DimensionError);
}
