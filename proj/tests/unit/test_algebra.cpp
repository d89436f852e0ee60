#include "preproj/algebra.hpp"

#include <doctest.h>

using namespace preproj;

namespace {

using Mat = std::vector<std::vector<long>>;

Mat mul(const Mat& a, const Mat& b) {
    std::size_t n = a.size();
    Mat c(n, std::vector<long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

Mat sub(const Mat& a, const Mat& b) {
    Mat c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) c[i][j] -= b[i][j];
    return c;
}

// U_0 = I, U_1 = C, U_{k+1} = C U_k - U_{k-1}; returns U_0..U_{upto}.
std::vector<Mat> chebyshev(const Mat& c, int upto) {
    std::size_t n = c.size();
    Mat id(n, std::vector<long>(n));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    std::vector<Mat> u{id, c};
    while (static_cast<int>(u.size()) <= upto) u.push_back(sub(mul(c, u.back()), u[u.size() - 2]));
    return u;
}

GradedAlgebra algebra_t(int n) { return build_preprojective(double_quiver(make_type_t(n))); }
GradedAlgebra algebra_a(int m) { return build_preprojective(double_quiver(make_type_a(m))); }

// Graded Hilbert matrix from the Chebyshev recursion: H = sum_{k <= h-2} U_k t^k.
void check_against_chebyshev(const GradedAlgebra& alg, const std::vector<int>& nakayama) {
    Mat c = adjacency(alg.quiver().base());
    int h = alg.coxeter_number();
    auto u = chebyshev(c, h);
    std::size_t n = c.size();
    CHECK(alg.top_degree() == h - 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            CHECK(u[static_cast<std::size_t>(h - 1)][i][j] == 0);
            CHECK(u[static_cast<std::size_t>(h)][i][j] == (static_cast<int>(j) == nakayama[i] ? -1 : 0));
            const auto& series = alg.hilbert()[i][j];
            for (int d = 0; d <= h - 2; ++d) {
                long got = d < static_cast<int>(series.size()) ? series[static_cast<std::size_t>(d)] : 0;
                CHECK(got == u[static_cast<std::size_t>(d)][i][j]);
            }
        }
}

// Brute-force center: kernel of x -> ([x, e_v], [x, a]) over all generators.
std::size_t center_dimension_oracle(const GradedAlgebra& alg) {
    std::vector<AlgElement> gens;
    for (int v = 0; v < alg.num_vertices(); ++v) gens.push_back(alg.idempotent(v));
    for (int a = 0; a < alg.quiver().num_arrows(); ++a) gens.push_back(alg.arrow(a));
    std::size_t dim = static_cast<std::size_t>(alg.dim());
    Matrix m(dim * gens.size(), dim);
    for (std::size_t x = 0; x < dim; ++x) {
        AlgElement bx{{static_cast<int>(x), Rational(1)}};
        for (std::size_t g = 0; g < gens.size(); ++g)
            for (const auto& [i, c] : alg.commutator(bx, gens[g])) m(g * dim + static_cast<std::size_t>(i), x) = c;
    }
    return dim - rank(m);
}

bool vanishes_above(const PolyMatrix& m, int top) {
    for (const auto& row : m)
        for (const auto& series : row)
            for (std::size_t d = static_cast<std::size_t>(top) + 1; d < series.size(); ++d)
                if (series[d] != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("T_n: dimension and Hilbert series against the Chebyshev oracle") {
    for (int n = 1; n <= 4; ++n) {
        CAPTURE(n);
        GradedAlgebra alg = algebra_t(n);
        CHECK(alg.dim() == n * (n + 1) * (2 * n + 1) / 3);
        std::vector<int> id(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) id[static_cast<std::size_t>(v)] = v;
        check_against_chebyshev(alg, id);
        CHECK(alg.hilbert() == hilbert_formula(adjacency(alg.quiver().base()), alg.coxeter_number(), alg.top_degree()));
        CHECK(vanishes_above(hilbert_formula(adjacency(alg.quiver().base()), alg.coxeter_number(), 2 * alg.coxeter_number()), alg.top_degree()));
    }
}

TEST_CASE("A_m: Hilbert series against the Chebyshev oracle with the reversing permutation") {
    for (int m = 2; m <= 6; ++m) {
        CAPTURE(m);
        GradedAlgebra alg = algebra_a(m);
        CHECK(alg.dim() == m * (m + 1) * (m + 2) / 6);
        std::vector<int> rev(static_cast<std::size_t>(m));
        for (int v = 0; v < m; ++v) rev[static_cast<std::size_t>(v)] = m - 1 - v;
        check_against_chebyshev(alg, rev);
        CHECK(alg.hilbert() == hilbert_formula(adjacency(alg.quiver().base()), alg.coxeter_number(), alg.top_degree(), rev));
        // Past the top degree the series only vanishes with the Nakayama permutation in the numerator.
        int far = 2 * alg.coxeter_number();
        CHECK(vanishes_above(hilbert_formula(adjacency(alg.quiver().base()), alg.coxeter_number(), far, rev), alg.top_degree()));
        CHECK(!vanishes_above(hilbert_formula(adjacency(alg.quiver().base()), alg.coxeter_number(), far), alg.top_degree()));
    }
}

TEST_CASE("T_2 dimension matrix") {
    GradedAlgebra alg = algebra_t(2);
    std::vector<std::vector<long>> dims(2, std::vector<long>(2));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (long x : alg.hilbert()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) dims[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += x;
    CHECK(dims == std::vector<std::vector<long>>{{2, 2}, {2, 4}});
}

TEST_CASE("associativity and unit") {
    for (int n = 1; n <= 3; ++n) {
        GradedAlgebra alg = algebra_t(n);
        CHECK(check_associativity(alg));
        for (int i = 0; i < alg.dim(); ++i) {
            AlgElement x{{i, Rational(1)}};
            CHECK(alg.multiply(alg.unit(), x) == x);
            CHECK(alg.multiply(x, alg.unit()) == x);
        }
    }
    CHECK(check_associativity(algebra_a(4)));
}

TEST_CASE("center of T_n matches a brute-force kernel computation") {
    for (int n = 1; n <= 4; ++n) {
        CAPTURE(n);
        GradedAlgebra alg = algebra_t(n);
        auto center = center_basis(alg);
        CHECK(center.size() == center_dimension_oracle(alg));
        CHECK(center.size() == static_cast<std::size_t>(2 * n));
        for (int k = 0; k < n; ++k) {
            AlgElement z = center_element(alg, k);
            int d = -1;
            REQUIRE(alg.is_homogeneous(z, &d));
            CHECK(d == 2 * k);
            for (int a = 0; a < alg.quiver().num_arrows(); ++a) CHECK(alg.commutator(z, alg.arrow(a)).empty());
        }
    }
}

TEST_CASE("A/[A,A] of T_n: the idempotents and one class in each odd degree") {
    for (int n = 1; n <= 4; ++n) {
        GradedAlgebra alg = algebra_t(n);
        auto cq = commutator_quotient(alg);
        CHECK(cq.representatives_form_basis);
        int total = 0;
        for (auto [d, k] : cq.dims) {
            total += k;
            if (d == 0) CHECK(k == n);
            else if (k != 0) CHECK(d % 2 == 1);
        }
        CHECK(total == 2 * n);
    }
}

TEST_CASE("Frobenius data") {
    GradedAlgebra t3 = algebra_t(3);
    FrobeniusData fd = frobenius(t3);
    CHECK(fd.nakayama_is_identity());
    for (int i = 0; i < t3.dim(); ++i)
        for (int j = 0; j < t3.dim(); ++j) {
            Rational want = i == j ? 1 : 0;
            CHECK(fd.trace_of(t3.multiply(AlgElement{{i, Rational(1)}}, fd.dual[static_cast<std::size_t>(j)])) == want);
        }
    GradedAlgebra a4 = algebra_a(4);
    FrobeniusData fa = frobenius(a4);
    CHECK(!fa.nakayama_is_identity());
    CHECK(fa.nakayama_vertex == std::vector<int>{3, 2, 1, 0});
}

TEST_CASE("automorphisms: phi multiplicative, gamma anti-multiplicative, rho phi rho = (-1)^deg") {
    for (int n = 1; n <= 3; ++n) {
        GradedAlgebra alg = algebra_t(n);
        Automorphisms au = automorphisms(alg);
        CHECK(is_multiplicative(alg, au.phi));
        CHECK(is_antimultiplicative(alg, au.gamma));
        CHECK(is_identity(compose(au.phi, au.phi)));
        CHECK(is_identity(compose(au.gamma, au.gamma)));
        for (int e = 0; e < alg.dim(); ++e) {
            AlgElement x{{e, Rational(1)}};
            AlgElement lhs = alg.multiply(alg.multiply(au.rho, au.phi.apply(x)), au.rho);
            CHECK(lhs == scaled(x, alg.degree(e) % 2 ? -1 : 1));
        }
    }
}
