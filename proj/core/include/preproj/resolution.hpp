#pragma once

#include "preproj/algebra.hpp"

#include <memory>
#include <mutex>
#include <nlohmann/json.hpp>
#include <tuple>
#include <vector>

namespace preproj {

enum class TermKind { FreeOnVertices, FreeOnArrows, TwistedOnVertices, TwistedOnArrows };

// Free generator 1 (x) 1 of A e_s (x) e_t A, placed in internal degree `degree`.
struct Generator {
    int label = 0;   // vertex id, or arrow id for arrow-generated terms
    int source = 0;  // s
    int target = 0;  // t
    int degree = 0;
};

struct BimoduleTerm {
    int index = 0;
    TermKind kind = TermKind::FreeOnVertices;
    int shift = 0;  // internal degree of the vertex generators (arrow generators sit one higher)
    std::vector<Generator> generators;
};

// (left basis index, generator, right basis index)
using Triple = std::tuple<int, int, int>;
using BimoduleElement = std::map<Triple, Rational>;

void axpy(BimoduleElement& acc, const Rational& c, const BimoduleElement& x);

// Restriction of d_j to the (a, b, degree) block: e_a P_j e_b in one internal degree.
struct BlockMap {
    std::vector<Triple> domain;
    std::vector<Triple> codomain;  // for j = 0 the codomain is A: triples (x, -1, -1)
    Matrix matrix;
    LinearSolver solver;
};

// Periodic bimodule resolution P_j -> A. Every P_j is stored as a direct sum of
// A e_s (x) e_t A; the twists only enter through the generator images:
// d_{j+3k}(G) = sum x G' T^k(y) whenever d_j(G) = sum x G' y, with T = phi (type T)
// or the Nakayama automorphism (type A).
class Resolution {
public:
    Resolution(const GradedAlgebra& alg, const FrobeniusData& fd, int max_index);

    const GradedAlgebra& algebra() const { return *alg_; }
    const FrobeniusData& frobenius_data() const { return *fd_; }
    int max_index() const { return max_index_; }
    int coxeter_number() const { return alg_->coxeter_number(); }
    const BimoduleTerm& term(int j) const { return terms_.at(static_cast<std::size_t>(j)); }
    const Generator& generator(int j, int g) const { return term(j).generators.at(static_cast<std::size_t>(g)); }
    int num_generators(int j) const { return static_cast<int>(term(j).generators.size()); }
    // The twisting automorphism T and its action on vertices.
    const LinearEndo& twist() const { return twist_; }
    int twist_vertex(int v, int k) const;
    LinearEndo twist_power(int k) const;

    // d_j(G) for 1 <= j <= max_index.
    const BimoduleElement& image(int j, int g) const { return images_.at(static_cast<std::size_t>(j)).at(static_cast<std::size_t>(g)); }
    BimoduleElement apply_d(int j, const BimoduleElement& x) const;
    AlgElement augment(const BimoduleElement& x) const;

    // x * u * y for u in P_j.
    BimoduleElement act(const AlgElement& x, const BimoduleElement& u, const AlgElement& y) const;
    BimoduleElement basis_element(int left, int g, int right) const { return {{{left, g, right}, 1}}; }

    std::size_t term_dimension(int j) const;
    int triple_degree(int j, const Triple& t) const;
    std::pair<int, int> degree_range(int j) const;
    const std::vector<Triple>& block_basis(int j, int a, int b, int degree) const;
    std::shared_ptr<const BlockMap> block_map(int j, int a, int b, int degree) const;

    // Solve d_j X = target with X in e_a P_j e_b of the given degree (X = 0 when target = 0).
    std::optional<BimoduleElement> preimage(int j, int a, int b, int degree, const BimoduleElement& target) const;

private:
    void build_terms();
    void build_images();
    BimoduleElement twisted_image(int j, int g) const;

    const GradedAlgebra* alg_;
    const FrobeniusData* fd_;
    int max_index_;
    LinearEndo twist_;
    std::vector<int> twist_vertex_;
    std::vector<BimoduleTerm> terms_;
    std::vector<std::vector<BimoduleElement>> images_;
    std::vector<std::map<std::tuple<int, int, int>, std::vector<Triple>>> blocks_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::tuple<int, int, int, int>, std::shared_ptr<const BlockMap>> cache_;
};

struct ExactnessReport {
    bool complex_ok = true;       // d_{j-1} d_j = 0 for all j
    bool degrees_ok = true;       // differentials preserve internal degree
    bool exact = true;            // interior homology vanishes
    bool augmentation_onto = true;
    bool period_shift_ok = true;  // P_{j+6} = P_j shifted by 2h
    std::vector<std::string> failures;
    std::vector<std::size_t> term_dimensions;
    std::vector<std::map<int, std::size_t>> homology;  // per j: degree -> dim (only nonzero entries)
    nlohmann::json to_json() const;
};

ExactnessReport check_exactness(const Resolution& res);

struct SelfDualityReport {
    bool i_is_d0_dual = false;
    bool d2_is_d1_dual = false;
    bool d3_is_i_after_j = false;
    bool i_basis_independent = false;
    nlohmann::json to_json() const;
};

// Literal check on S_: the forms (x,y) = Tr(x phi(y)) on A, A (x)_R A and A (x)_R V (x)_R A.
SelfDualityReport check_self_duality(const Resolution& res, const Automorphisms& au);

// Bimodule map P_i -> A, stored by its values on generators.
struct Cochain {
    int index = 0;
    std::vector<AlgElement> values;
};

// Bimodule map P_{i+j} -> P_j.
struct ChainMapComponent {
    int source = 0;
    int target = 0;
    std::vector<BimoduleElement> images;
};

AlgElement evaluate(const Resolution& res, const Cochain& f, const BimoduleElement& u);
BimoduleElement apply_map(const Resolution& res, const ChainMapComponent& m, const BimoduleElement& u);
// Internal degree of f (deg f(G) - deg G), or nullopt when f is zero or inhomogeneous.
std::optional<int> cochain_degree(const Resolution& res, const Cochain& f);

// Lifts of f : P_i -> A to components Omega^j f : P_{i+j} -> P_j, j = 0..steps.
std::vector<ChainMapComponent> lift_cocycle(const Resolution& res, const Cochain& f, int steps);

nlohmann::json summary_json(const Resolution& res, const ExactnessReport& rep);

}  // namespace preproj
