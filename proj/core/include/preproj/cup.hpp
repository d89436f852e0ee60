#pragma once

#include "preproj/calculus.hpp"

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace preproj {

struct CupItem {
    std::string name;
    bool holds = false;
    std::string detail;
};

// Product relations of the cohomology ring of a type T algebra, each tested on the full
// named basis. Needs ring.max_index() >= 11.
struct CupTheoremReport {
    int n = 0;
    int h = 0;
    std::vector<CupItem> items;
    // Vertex s for which zeta' f = v_s phi_0(z'), or -1 when no vertex works.
    int zeta_f_vertex = -1;
    // Vertex s with zeta' h = lambda w_s phi_0(theta'), lambda != 0, or -1.
    int zeta_h_vertex = -1;
    // zeta' = c zeta_{h-3}: 1 / (coefficient of zeta' psi' over sum i h_i) when positive, else 1.
    Rational zeta_prime_scale = 1;
    bool all() const;
    const CupItem* find(const std::string& name) const;
    nlohmann::json to_json() const;
};

CupTheoremReport check_cup_theorem(const CohomologyRing& ring);

}  // namespace preproj
