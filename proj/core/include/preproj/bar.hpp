#pragma once

#include "preproj/hochschild.hpp"

#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace preproj {

// Basis tensor of the normalized bar resolution over R: (a_0, a_1, ..., a_k, a_{k+1}) with
// a_1..a_k of positive degree. For Hochschild chains the same container holds (a_0, ..., a_k).
using Tensor = std::vector<int>;
using TensorElement = std::map<Tensor, Rational>;

void axpy(TensorElement& acc, const Rational& c, const TensorElement& x);

// Chain map mu from the periodic resolution to the bar resolution, mu_j(G) = s(mu_{j-1}(d_j G))
// with s(a_0 (x) ... ) = 1 (x) a_0 (x) ...
class BarComparison {
public:
    BarComparison(const Resolution& res, int max_index);

    const Resolution& resolution() const { return *res_; }
    int max_index() const { return max_; }
    const TensorElement& mu(int j, int g) const { return mu_.at(static_cast<std::size_t>(j)).at(static_cast<std::size_t>(g)); }
    TensorElement mu_of(int j, const BimoduleElement& x) const;

    TensorElement bar_differential(const TensorElement& x) const;
    TensorElement hochschild_boundary(const TensorElement& x) const;
    // mu' = mu (x)_{A^e} A on P_j (x)_{A^e} A.
    TensorElement transport(const Chain& c) const;
    // Lie derivative of theta_0 o tau^*: a_i -> theta_0(a_i) summed over the tensor slots.
    TensorElement lie_theta0(const TensorElement& x) const;
    int degree(const Tensor& t) const;

private:
    const Resolution* res_;
    int max_;
    std::vector<std::vector<TensorElement>> mu_;
};

struct LieThetaReport {
    int max_index = 0;
    bool chain_map = false;            // b' mu_j = mu_{j-1} d_j on every generator
    bool explicit_mu1 = false;         // mu_1(G_a) = 1 (x) a (x) 1
    bool explicit_mu2 = false;         // mu_2(G_v) = sum eps_a 1 (x) a (x) a^* (x) 1 - 1 (x) b (x) b (x) 1
    int explicit_sign = 0;             // common sign relating the explicit formulas to mu
    bool transported_chain_map = false;  // b mu' = mu' d' on every basis chain
    bool telescoping = false;          // d_1(v_p) = p (x) 1 - 1 (x) p for every basis path p
    bool euler = false;                // theta_0 o tau^*(p) = deg(p) p
    bool eigenvalue = false;           // L_{theta_0}(mu'(x)) = deg(x) mu'(x)
    bool nonzero_in_homology = false;  // mu' is injective on homology up to homology_index
    int homology_index = 0;
    std::size_t cycles = 0;
    std::vector<std::string> failures;
    bool all() const;
    nlohmann::json to_json() const;
};

// Checks through HH_{max_index}; injectivity on homology through HH_{homology_index}.
LieThetaReport verify_lie_theta0(const Resolution& res, int max_index, int homology_index);

}  // namespace preproj
