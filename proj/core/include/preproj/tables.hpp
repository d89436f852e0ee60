#pragma once

#include "preproj/calculus.hpp"

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace preproj {

enum class CalculusTable { Contraction, Bracket, Lie };

std::string table_name(CalculusTable t);

struct TableEntry {
    CalculusTable table = CalculusTable::Contraction;
    Family row = Family::Z;
    Family col = Family::Z;
    int k = 0;
    int l = 0;
    int s = 0;
    int t = 0;
    std::string expected;
    std::string computed;
    bool match = false;
    // The same cell under the corrected reading (ids from table_corrections()).
    std::vector<std::string> corrections;
    std::string corrected_expected;
    bool match_corrected = false;
};

struct TableCorrection {
    std::string id;
    CalculusTable table;
    Family row;
    Family col;
    std::string printed;
    std::string corrected;
};

// Cells whose printed formula is replaced in the corrected reading.
const std::vector<TableCorrection>& table_corrections();

// Every entry of the three tables for periods s, t <= max_period, compared with the printed formulas.
// alpha and M_alpha are taken as multiplication by theta_0 in cohomology.
std::vector<TableEntry> calculus_tables(const Calculus& calc, int max_period);

nlohmann::json table_entry_json(const TableEntry& e);

struct BFormulaReport {
    bool psi = false;    // B_{6s}(psi_{k,s}) = ((2s+1)h - 2 - k) zeta_{k,s}
    bool odd = false;    // B_{odd} = 0
    bool h = false;      // B_{2+6s}(h_{k,s}) = (2s+1)h alpha^{-1}(h_{k,s})
    bool theta = false;  // B_{4+6s}(theta_{k,s}) = ((2s+1)h + 2 + k) z_{k,s}
    bool squared_zero = false;
    bool all() const { return psi && odd && h && theta && squared_zero; }
    nlohmann::json to_json() const;
};

BFormulaReport check_b_formulas(const Calculus& calc, int max_period);

struct CalculusIdentityReport {
    std::size_t checked = 0;
    bool cartan = false;           // L_a = B i_a - (-1)^{|a|} i_a B, from the definition; L_theta0 = deg
    bool lie_theta_degree = false;
    bool module = false;           // i_a i_b = i_{a b}
    bool unit = false;             // i_1 = id
    bool precalculus = false;      // i_a L_b - (-1)^{|a|(|b|+1)} L_b i_a = i_{[a,b]}
    bool lie_product = false;      // L_{ab} = L_a i_b + (-1)^{|a|} i_a L_b
    // The graded identities use graded_bracket; the printed BV convention is tested separately.
    bool antisymmetry = false;     // [a,b] = -(-1)^{(|a|-1)(|b|-1)} [b,a]
    bool printed_antisymmetry = false;
    std::size_t printed_antisymmetry_failures = 0;
    bool bv_degree_zero = false;   // BV route = derivation action modulo the projective center
    bool leibniz = false;          // [a, bc] = [a,b]c + (-1)^{(|a|-1)|b|} b[a,c]
    bool jacobi = false;
    bool delta_squared_zero = false;
    bool cup_commutative = false;  // ab = (-1)^{|a||b|} ba, lifting either factor
    bool cup_associative = false;
    std::vector<std::string> failures;
    bool all() const;
    nlohmann::json to_json() const;
};

// Identities on the named classes of index <= max_index (periods limited by the period choice).
CalculusIdentityReport check_calculus_identities(const Calculus& calc, int max_index);

// Brackets of named classes with indices <= max_index agree for two period choices.
struct IndependenceReport {
    int m1 = 0;
    int m2 = 0;
    std::size_t pairs = 0;
    bool independent = false;
    std::vector<std::string> failures;
    nlohmann::json to_json() const;
};

IndependenceReport check_bracket_independence(const Calculus& a, const Calculus& b, int max_index);

}  // namespace preproj
