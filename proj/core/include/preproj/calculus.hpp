#pragma once

#include "preproj/hochschild.hpp"

#include <map>
#include <memory>
#include <array>
#include <mutex>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace preproj {

// a o Omega^{a.index}(b), computed by lifting b.
Cochain cup_cochains(const Resolution& res, const Cochain& a, const Cochain& b);

// Yoneda action of eta on chains: (Omega^{j-i} eta (x) 1)(c) for c in C_j.
Chain cap_chain(const Resolution& res, const std::vector<ChainMapComponent>& lift_of_eta, const Chain& c);

// Coefficients of c in the given cocycles modulo coboundaries; nullopt when c is outside their span.
std::optional<std::vector<Rational>> expand_in(const HomologyGroups& hh, const Cochain& c, const std::vector<Cochain>& basis);

// Element of HH^index or HH_index in the named basis.
struct Class {
    int index = 0;
    std::vector<Rational> coeffs;
    bool is_zero() const;
    bool operator==(const Class& o) const { return index == o.index && coeffs == o.coeffs; }
};

Class operator+(const Class& a, const Class& b);
Class operator-(const Class& a, const Class& b);
Class operator*(const Rational& c, const Class& a);

// HH^0..HH^max_index of a type T algebra with the named bases and cached cup products.
class CohomologyRing {
public:
    CohomologyRing(const Resolution& res, int max_index);

    const Resolution& resolution() const { return *res_; }
    const HochschildComplex& cochains() const { return *cochains_; }
    const HomologyGroups& groups() const { return *groups_; }
    const NamedCohomology& named() const { return *named_; }
    int max_index() const { return max_; }

    const std::vector<NamedCocycle>& basis(int j) const { return named_->basis(j); }
    std::optional<std::size_t> find(Family f, int k, int period) const;
    Class element(Family f, int k, int period = 0) const;
    Class zero(int j) const;
    Class unit() const { return element(Family::Z, 0); }
    Class expand(const Cochain& c) const;
    Cochain cochain(const Class& c) const;
    // Internal degree of each basis element.
    int degree(int j, std::size_t i) const { return basis(j).at(i).degree; }

    Class cup(const Class& a, const Class& b) const;
    const Class& cup_basis(int p, std::size_t i, int q, std::size_t j) const;
    // Lift of basis(j)[i] through all available steps.
    const std::vector<ChainMapComponent>& lift(int j, std::size_t i) const;

    std::string to_string(const Class& c) const;

private:
    const Resolution* res_;
    int max_;
    std::unique_ptr<HochschildComplex> cochains_;
    std::unique_ptr<HomologyGroups> groups_;
    std::unique_ptr<NamedCohomology> named_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<int, std::size_t>, std::shared_ptr<const std::vector<ChainMapComponent>>> lifts_;
    mutable std::map<std::tuple<int, std::size_t, int, std::size_t>, std::shared_ptr<const Class>> products_;
};

struct AlphaReport {
    Matrix cup;          // theta_0 f_k = sum_l cup(l, k) h_l
    Matrix closed_form;  // sum over the basis of deg(x) tau(x) e_k x^*, expanded in the h_l
    Matrix formula;       // h (2+C)_-^{-1} (type T) or the tridiagonal inverses (type A)
    Matrix hilbert_derivative;  // H_A'(-1) from the Hilbert series (type T)
    bool routes_agree = false;
    bool symmetric = false;
    bool invertible = false;
    bool matches_formula = false;
    bool matches_negated_formula = false;
    bool derivative_matches = false;  // H_A'(-1) = h (2+C)^{-1}
    nlohmann::json to_json() const;
};

AlphaReport alpha_matrix(const Resolution& res, const HomologyGroups& coh, const Automorphisms& au);
Matrix alpha_formula_matrix(const GradedAlgebra& alg);

// D : HH_j -> HH^{N-j}, N = 6m+5, realized by capping with the fundamental class c_0,
// the generator of HH_N in degree (2m+1)h+2: D^{-1}(eta) = cap_eta(c_0).
class Duality {
public:
    Duality(const CohomologyRing& ring, const HomologyGroups& homology, int m);

    int period_choice() const { return m_; }
    int top() const { return 6 * m_ + 5; }
    int degree_shift() const;
    bool has_fundamental_class() const { return fundamental_ok_; }
    const Chain& fundamental_class() const { return c0_; }

    // cap_eta(c_0), a cycle in C_{N-i}.
    Chain to_chain(const Class& eta) const;
    // Class of the cycle c in the named basis of HH^{N-j}; nullopt when c is not a cycle
    // or its class is not in the image (the summand R of HH_0).
    std::optional<Class> to_cohomology(const Chain& c) const;
    // Rank of D^{-1} on HH^{N-j} in every degree equals dim HH^{N-j}.
    bool injective(int j) const;
    const CohomologyRing* ring_ptr() const { return ring_; }
    const HomologyGroups& homology() const { return *hom_; }

private:
    struct Block {
        Matrix images;  // homology coordinates of D^{-1}(basis), one column per named class
        std::vector<std::size_t> named;  // positions in ring.basis(N-j)
        LinearSolver solver;
    };
    const Block& block(int j, int degree) const;

    const CohomologyRing* ring_;
    const HomologyGroups* hom_;
    int m_;
    bool fundamental_ok_ = false;
    Chain c0_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<int, int>, std::shared_ptr<const Block>> blocks_;
};

struct DualityReport {
    bool fundamental_class = false;  // HH_N is one-dimensional in degree (2m+1)h+2
    bool degree_bijective = false;   // dims of HH_j and HH^{N-j} agree after the shift
    bool invertible = false;
    bool intertwining = false;       // D(cap_eta c) = eta D(c) on homology representatives
    std::size_t intertwining_checks = 0;
    std::vector<std::string> failures;
    nlohmann::json to_json() const;
};

// Checks over homology indices 0..max_j and named classes eta of index <= max_eta_index.
DualityReport check_duality(const Duality& d, int max_j, int max_eta_index);

// Homology HH_j is identified with D(HH_j) inside HH^{N-j}: a homology Class of index j
// carries coefficients over the named cohomology basis of HH^{N-j} (the omega_k and the
// summand R of HH_0 are outside the image and excluded).
class Calculus {
public:
    Calculus(const CohomologyRing& ring, int m, int max_homology_index);

    const CohomologyRing& ring() const { return *ring_; }
    int period_choice() const { return m_; }
    int top() const { return 6 * m_ + 5; }
    int shift() const;
    int max_homology_index() const { return jmax_; }

    // Homology basis of HH_j: indices into ring().basis(N - j).
    const std::vector<std::size_t>& homology_basis(int j) const { return hbasis_.at(static_cast<std::size_t>(j)); }
    Class homology_zero(int j) const;
    // c_{k,t} = D^{-1}(c_k^{(m-t)}).
    Class homology_element(Family f, int k, int t) const;
    int homology_degree(int j, std::size_t pos) const;
    std::string homology_name(int j, std::size_t pos) const;
    std::string homology_to_string(const Class& c) const;
    Class to_cohomology(const Class& c) const;  // D
    Class from_cohomology(const Class& c) const;  // D^{-1}; drops omega components (reported)

    Class contraction(const Class& eta, const Class& c) const;
    Class connes(const Class& c) const;  // B_j
    Class delta(const Class& a) const;   // D B D^{-1}
    // [a,b] = Delta(ab) - Delta(a) b - (-1)^{|a|} a Delta(b). D only sees HH^0 modulo the
    // projective center, so pairs of indices {0,1} use the derivation action instead.
    Class bracket(const Class& a, const Class& b) const;
    Class bv_bracket(const Class& a, const Class& b) const;
    // (-1)^{|a|+1} [a,b]: the graded Lie bracket, [x, z] = x(z) for x in HH^1, z in HH^0.
    Class graded_bracket(const Class& a, const Class& b) const;
    // x(z) for a derivation class x in HH^1 and a central element z.
    Class derivation_action(const Class& x, const Class& z) const;
    Class lie(const Class& a, const Class& c) const;

    bool connes_unique() const { return connes_unique_; }
    bool connes_solvable() const { return connes_solvable_; }
    // rank of B_j on each degree piece of the reduced homology.
    std::map<int, std::size_t> connes_rank(int j) const;

private:
    void solve_connes();

    const CohomologyRing* ring_;
    int m_;
    int jmax_;
    std::vector<std::vector<std::size_t>> hbasis_;
    std::vector<Matrix> connes_;  // B_j : HH_j -> HH_{j+1} in the homology bases
    bool connes_unique_ = true;
    bool connes_solvable_ = true;
};

struct CyclicReport {
    std::vector<std::map<int, std::size_t>> hc;  // HC_0 includes R
    bool b_squared_zero = false;
    bool connes_exact = false;  // Im B_i = ker B_{i+1} on reduced homology
    nlohmann::json to_json() const;
};

CyclicReport cyclic_homology(const Calculus& calc, int max_index);

}  // namespace preproj
