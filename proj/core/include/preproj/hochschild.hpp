#pragma once

#include "preproj/resolution.hpp"

#include <functional>
#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace preproj {

// Chain of the complex P_j (x)_{A^e} A: value at G lies in e_t A e_s.
struct Chain {
    int index = 0;
    std::vector<AlgElement> values;
};

struct Coord {
    int generator = 0;
    int element = 0;  // basis index of A
};

enum class Variance { Cochain, Chain };

// Hom_{A^e}(P_j, A) or P_j (x)_{A^e} A, split by internal degree.
// Cochain degree: deg f(G) - deg G. Chain degree: deg G + deg w.
class HochschildComplex {
public:
    HochschildComplex(const Resolution& res, Variance variance);

    const Resolution& resolution() const { return *res_; }
    Variance variance() const { return variance_; }
    int max_index() const { return res_->max_index(); }
    std::vector<int> degrees(int j) const;
    const std::vector<Coord>& basis(int j, int degree) const;
    std::size_t dim(int j, int degree) const { return basis(j, degree).size(); }
    std::size_t total_dim(int j) const;

    // Cochains: d_j^* : C^{j-1} -> C^j. Chains: d'_j : C_j -> C_{j-1}. Only for 1 <= j <= max_index.
    const Matrix& differential(int j, int degree) const;

    Vector to_vector(int j, int degree, const std::vector<AlgElement>& values) const;
    std::vector<AlgElement> from_vector(int j, int degree, const Vector& v) const;
    std::vector<AlgElement> apply(int j, const std::vector<AlgElement>& values) const;
    std::optional<int> degree_of(int j, const std::vector<AlgElement>& values) const;

private:
    const Resolution* res_;
    Variance variance_;
    std::vector<std::map<int, std::vector<Coord>>> spaces_;
    std::vector<std::map<int, std::map<std::pair<int, int>, std::size_t>>> positions_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<int, int>, std::shared_ptr<const Matrix>> cache_;
};

struct HomologyPiece {
    int index = 0;
    int degree = 0;
    std::size_t space = 0;
    std::vector<Vector> representatives;
    std::vector<Vector> boundaries;
    Matrix outgoing;  // closedness test
    LinearSolver solver;  // columns: representatives, then boundaries
};

// HH^j or HH_j for 0 <= j < max_index of the complex.
class HomologyGroups {
public:
    explicit HomologyGroups(const HochschildComplex& c);

    const HochschildComplex& complex() const { return *c_; }
    int max_index() const { return max_; }
    std::size_t dim(int j, int degree) const;
    std::map<int, std::size_t> dims(int j) const;  // nonzero entries only
    std::size_t total_dim(int j) const;
    const HomologyPiece* piece(int j, int degree) const;
    bool is_closed(int j, int degree, const Vector& v) const;
    // Coordinates in the current representatives; nullopt when v is not closed.
    std::optional<Vector> coordinates(int j, int degree, const Vector& v) const;
    // Replace the representatives; throws unless they form a basis of the quotient.
    void set_basis(int j, int degree, const std::vector<Vector>& reps);

private:
    void rebuild_solver(HomologyPiece& p);

    const HochschildComplex* c_;
    int max_;
    std::map<std::pair<int, int>, HomologyPiece> pieces_;
};

enum class Family { Z, Omega, Theta, F, H, Zeta, Psi };

std::string family_name(Family f);

struct NamedCocycle {
    Family family = Family::Z;
    int k = 0;       // degree label (z, theta, zeta, psi) or 1-based vertex (omega, f, h)
    int period = 0;  // s in c^(s)
    Cochain cochain;
    int degree = 0;
    std::string name() const;
};

int cohomology_family_index(Family f);

// Type A: only theta_0, f_k = [e_k - e_nu(k)] and h_k = [omega_k - omega_nu(k)], 1 <= k <= m/2.
NamedCocycle named_cocycle(const Resolution& res, Family f, int k, int period = 0);
// Every named class in HH^j, j = 6s + i, in a fixed order.
std::vector<NamedCocycle> named_basis(const Resolution& res, int j);
std::vector<int> family_labels(const GradedAlgebra& alg, Family f);

// Expansion of cohomology classes in the named basis.
class NamedCohomology {
public:
    NamedCohomology(const HomologyGroups& hh, int max_index);

    const HomologyGroups& groups() const { return *hh_; }
    const std::vector<NamedCocycle>& basis(int j) const { return bases_.at(static_cast<std::size_t>(j)); }
    bool valid() const { return failures_.empty(); }
    const std::vector<std::string>& failures() const { return failures_; }
    // Coefficients aligned with basis(j). Throws when c is not a cocycle.
    std::vector<Rational> expand(const Cochain& c) const;
    Cochain combination(int j, const std::vector<Rational>& coeffs) const;

private:
    const HomologyGroups* hh_;
    std::vector<std::vector<NamedCocycle>> bases_;
    std::vector<std::string> failures_;
};

// Graded dimension tables predicted by the theorems (type T, h = 2n + 1).
std::map<int, std::size_t> expected_cohomology(int n, int j);
std::map<int, std::size_t> expected_homology(int n, int j);

struct ClosedFormReport {
    bool d1 = false, d2 = false, d3 = false, d4 = false, d5 = false, d6 = false;
    bool d3_zero = false;
    bool hilbert_minus_one_zero = false;  // H_A(-1) = 0
    bool d6_vertex_block = false;         // d_6^* on e_i -> omega_j is -H_A(1)
    bool d6_nondegenerate = false;
    nlohmann::json to_json() const;
};

ClosedFormReport check_closed_forms(const HochschildComplex& cochains, const Automorphisms& au);

struct DualityCheck {
    std::string name;
    int expected_shift = 0;
    std::vector<int> discovered_shifts;
    bool holds = false;
};

struct CohomologyReport {
    int n = 0;
    int h = 0;
    std::vector<std::map<int, std::size_t>> cohomology;
    std::vector<std::map<int, std::size_t>> homology;
    std::vector<bool> cohomology_matches;
    std::vector<bool> homology_matches;
    std::vector<DualityCheck> dualities;
    bool x_zero = false;
    bool y_zero = false;
    bool center_matches = false;
    bool named_bases_ok = false;
    bool periodic = false;
    std::vector<std::string> failures;
    nlohmann::json to_json() const;
};

// Type T. `named` and `closed` may be null.
CohomologyReport cohomology_report(const HomologyGroups& coh, const HomologyGroups& hom, const NamedCohomology* named,
                                   const ClosedFormReport* closed, const std::vector<AlgElement>& center);

nlohmann::json dims_json(const std::map<int, std::size_t>& dims);

// Reduced HH_0 drops the degree-0 summand R.
std::map<int, std::size_t> reduced(const std::map<int, std::size_t>& dims, int j);

}  // namespace preproj
