#include "preproj/hochschild.hpp"

#include <doctest.h>

using namespace preproj;

namespace {

struct Fixture {
    GradedAlgebra alg;
    FrobeniusData fd;
    Automorphisms au;
    Resolution res;
    HochschildComplex cochains;
    HochschildComplex chains;
    HomologyGroups coh;
    HomologyGroups hom;
    explicit Fixture(int n, int max_index = 13)
        : alg(build_preprojective(double_quiver(make_type_t(n)))),
          fd(frobenius(alg)),
          au(automorphisms(alg)),
          res(alg, fd, max_index),
          cochains(res, Variance::Cochain),
          chains(res, Variance::Chain),
          coh(cochains),
          hom(chains) {}
};

using Dims = std::map<int, std::size_t>;

// Graded dimension of the center from the kernel of all commutators with generators.
Dims center_oracle(const GradedAlgebra& alg) {
    Dims out;
    for (int d = 0; d <= alg.top_degree(); ++d) {
        const auto& idx = alg.of_degree(d);
        if (idx.empty()) continue;
        std::vector<AlgElement> gens;
        for (int a = 0; a < alg.quiver().num_arrows(); ++a) gens.push_back(alg.arrow(a));
        for (int v = 0; v < alg.num_vertices(); ++v) gens.push_back(alg.idempotent(v));
        std::size_t dim = static_cast<std::size_t>(alg.dim());
        Matrix m(dim * gens.size(), idx.size());
        for (std::size_t c = 0; c < idx.size(); ++c) {
            AlgElement x{{idx[c], Rational(1)}};
            for (std::size_t g = 0; g < gens.size(); ++g)
                for (const auto& [i, v] : alg.commutator(x, gens[g])) m(g * dim + static_cast<std::size_t>(i), c) = v;
        }
        std::size_t k = idx.size() - rank(m);
        if (k) out[d] = k;
    }
    return out;
}

}  // namespace

TEST_CASE("frozen graded dimensions of HH^j and HH_j for T_2") {
    Fixture f(2, 7);
    std::vector<Dims> coh{{{0, 1}, {2, 1}, {3, 2}}, {{0, 1}, {2, 1}}, {{-2, 2}}, {{-2, 2}},
                          {{-6, 1}, {-4, 1}}, {{-6, 1}, {-4, 1}}, {{-10, 1}, {-8, 1}}};
    std::vector<Dims> hom{{{0, 2}, {1, 1}, {3, 1}}, {{1, 1}, {3, 1}}, {{5, 2}}, {{5, 2}},
                          {{7, 1}, {9, 1}}, {{7, 1}, {9, 1}}, {{11, 1}, {13, 1}}};
    for (int j = 0; j < 7; ++j) {
        CAPTURE(j);
        CHECK(f.coh.dims(j) == coh[static_cast<std::size_t>(j)]);
        CHECK(f.hom.dims(j) == hom[static_cast<std::size_t>(j)]);
    }
}

TEST_CASE("HH^0 is the center, computed independently") {
    for (int n = 1; n <= 3; ++n) {
        CAPTURE(n);
        Fixture f(n, 3);
        Dims z = center_oracle(f.alg);
        CHECK(f.coh.dims(0) == z);
        std::size_t total = 0;
        for (auto [d, k] : z) total += k;
        CHECK(total == static_cast<std::size_t>(2 * n));
    }
}

TEST_CASE("computed dimensions agree with the closed-form tables") {
    for (int n = 1; n <= 3; ++n) {
        CAPTURE(n);
        Fixture f(n);
        for (int j = 0; j < 13; ++j) {
            CAPTURE(j);
            CHECK(f.coh.dims(j) == expected_cohomology(n, j));
            CHECK(f.hom.dims(j) == expected_homology(n, j));
        }
    }
}

TEST_CASE("periodicity: HH^{j+6} is HH^j shifted by -2h") {
    Fixture f(3);
    int h = f.alg.coxeter_number();
    for (int j = 1; j + 6 < 13; ++j) {
        Dims shifted;
        for (auto [d, k] : f.coh.dims(j)) shifted[d - 2 * h] = k;
        CHECK(f.coh.dims(j + 6) == shifted);
    }
}

TEST_CASE("closed-form differentials") {
    for (int n = 1; n <= 3; ++n) {
        Fixture f(n, 7);
        auto rep = check_closed_forms(f.cochains, f.au);
        CHECK(rep.d1);
        CHECK(rep.d2);
        CHECK(rep.d3);
        CHECK(rep.d3_zero);
        CHECK(rep.d4);
        CHECK(rep.d5);
        CHECK(rep.d6);
        CHECK(rep.hilbert_minus_one_zero);
        CHECK(rep.d6_vertex_block);
        CHECK(rep.d6_nondegenerate);
    }
}

TEST_CASE("named bases, dualities and vanishing of X and Y") {
    for (int n = 1; n <= 3; ++n) {
        CAPTURE(n);
        Fixture f(n);
        NamedCohomology named(f.coh, 12);
        CHECK(named.valid());
        auto closed = check_closed_forms(f.cochains, f.au);
        auto rep = cohomology_report(f.coh, f.hom, &named, &closed, center_basis(f.alg));
        CHECK(rep.failures.empty());
        CHECK(rep.x_zero);
        CHECK(rep.y_zero);
        CHECK(rep.center_matches);
        CHECK(rep.named_bases_ok);
        CHECK(rep.periodic);
        CHECK(!rep.dualities.empty());
        for (const auto& d : rep.dualities) {
            CAPTURE(d.name);
            CHECK(d.holds);
        }
    }
}

TEST_CASE("named cocycles are closed with the stated degree") {
    Fixture f(3, 7);
    for (int j = 0; j < 7; ++j)
        for (const auto& c : named_basis(f.res, j)) {
            CAPTURE(c.name());
            auto d = cochain_degree(f.res, c.cochain);
            REQUIRE(d);
            CHECK(*d == c.degree);
            CHECK(f.coh.is_closed(j, c.degree, f.cochains.to_vector(j, c.degree, c.cochain.values)));
        }
}
