#pragma once

#include "preproj/exactla.hpp"
#include "preproj/quiver.hpp"

#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace preproj {

// Sparse element: basis index -> coefficient, no stored zeros.
using AlgElement = std::map<int, Rational>;

void axpy(AlgElement& acc, const Rational& c, const AlgElement& x);
AlgElement scaled(const AlgElement& x, const Rational& c);
AlgElement operator+(const AlgElement& x, const AlgElement& y);
AlgElement operator-(const AlgElement& x, const AlgElement& y);

struct BasisPath {
    int degree = 0;
    int left = 0;   // e_left * x = x
    int right = 0;  // x * e_right = x
    std::vector<int> word;  // arrow ids in product order
};

// hilbert[i][j][d] = dim (e_i A e_j)_d
using PolyMatrix = std::vector<std::vector<std::vector<long>>>;

class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GradedAlgebra {
public:
    const DoubledQuiver& quiver() const { return quiver_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    int num_vertices() const { return quiver_.num_vertices(); }
    int coxeter_number() const { return quiver_.base().coxeter_number(); }
    int top_degree() const { return top_; }
    QuiverKind kind() const { return quiver_.base().kind(); }

    const BasisPath& basis(int i) const { return basis_.at(static_cast<std::size_t>(i)); }
    int degree(int i) const { return basis(i).degree; }
    int left(int i) const { return basis(i).left; }
    int right(int i) const { return basis(i).right; }
    std::string label(int i) const;

    // Basis indices of (e_l A e_r)_d; empty when out of range.
    const std::vector<int>& block(int l, int r, int d) const;
    // Basis indices of e_v A and of A e_v.
    const std::vector<int>& with_left(int v) const { return with_left_.at(static_cast<std::size_t>(v)); }
    const std::vector<int>& with_right(int v) const { return with_right_.at(static_cast<std::size_t>(v)); }
    const std::vector<int>& of_degree(int d) const;

    const AlgElement& product(int i, int j) const { return table_[static_cast<std::size_t>(i * dim() + j)]; }
    AlgElement multiply(const AlgElement& x, const AlgElement& y) const;
    AlgElement multiply(const AlgElement& x, int j) const;
    AlgElement multiply(int i, const AlgElement& y) const;
    AlgElement commutator(const AlgElement& x, const AlgElement& y) const;

    AlgElement idempotent(int v) const;
    AlgElement unit() const;
    AlgElement arrow(int a) const;
    // Product of arrows in product order; the empty word needs a vertex.
    AlgElement path(const std::vector<int>& word) const;
    AlgElement loop_power(int k) const;
    int index_of_idempotent(int v) const { return idempotent_index_.at(static_cast<std::size_t>(v)); }

    const PolyMatrix& hilbert() const { return hilbert_; }
    bool is_homogeneous(const AlgElement& x, int* degree_out = nullptr) const;

    friend GradedAlgebra build_preprojective(const DoubledQuiver& q);

private:
    DoubledQuiver quiver_;
    std::vector<BasisPath> basis_;
    std::vector<AlgElement> table_;
    std::vector<std::vector<int>> with_left_;
    std::vector<std::vector<int>> with_right_;
    std::vector<std::vector<int>> by_degree_;
    std::map<std::tuple<int, int, int>, std::vector<int>> blocks_;
    std::vector<int> idempotent_index_;
    std::vector<int> arrow_index_;
    PolyMatrix hilbert_;
    int top_ = 0;
};

GradedAlgebra build_preprojective(const DoubledQuiver& q);

// Coefficients of (1 + P t^h)(1 - C t + t^2)^{-1} up to max_degree (P = identity when empty).
PolyMatrix hilbert_formula(const IntMatrix& c, int h, int max_degree, const std::vector<int>& perm = {});
bool check_associativity(const GradedAlgebra& alg, std::size_t max_triples = 0);

struct FrobeniusData {
    Vector trace;                      // Tr on basis elements
    std::vector<AlgElement> dual;      // x_i -> x_i^*, Tr(x_i x_j^*) = delta_ij
    std::vector<AlgElement> omega;     // omega_v spans the top of e_v A e_{nu(v)}, Tr(omega_v) = 1
    std::vector<int> nakayama_vertex;  // nu
    std::vector<AlgElement> nakayama;  // eta(x_i), where Tr(xy) = Tr(y eta(x))
    Rational trace_of(const AlgElement& x) const;
    bool nakayama_is_identity() const;
};

FrobeniusData frobenius(const GradedAlgebra& alg);

// Linear map given by images of basis elements.
struct LinearEndo {
    std::vector<AlgElement> images;
    AlgElement apply(const AlgElement& x) const;
};

struct Automorphisms {
    LinearEndo phi;    // a -> a, b -> -b
    LinearEndo gamma;  // reverses arrows: anti-multiplicative
    AlgElement rho;    // sum (-1)^{n+i} e_i
};

Automorphisms automorphisms(const GradedAlgebra& alg);
bool is_multiplicative(const GradedAlgebra& alg, const LinearEndo& f);
bool is_antimultiplicative(const GradedAlgebra& alg, const LinearEndo& f);
LinearEndo compose(const LinearEndo& f, const LinearEndo& g);  // f after g
bool is_identity(const LinearEndo& f);

std::vector<AlgElement> center_basis(const GradedAlgebra& alg);
// z_{2k} = sum of the degree 2k loops at the vertices i >= k+1 (type T).
AlgElement center_element(const GradedAlgebra& alg, int k);

struct CommutatorQuotient {
    std::map<int, int> dims;               // degree -> dim A/[A,A]
    std::vector<AlgElement> representatives;  // e_i and odd loop powers
    bool representatives_form_basis = false;
};

CommutatorQuotient commutator_quotient(const GradedAlgebra& alg);

nlohmann::json to_json(const GradedAlgebra& alg);
std::string element_to_string(const GradedAlgebra& alg, const AlgElement& x);

}  // namespace preproj
