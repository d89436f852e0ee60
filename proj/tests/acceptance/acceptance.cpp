#include "preproj/verify.hpp"

#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace preproj;

namespace {

struct Key {
    QuiverKind kind;
    int size;
    bool operator<(const Key& o) const { return std::tie(kind, size) < std::tie(o.kind, o.size); }
};

std::string label(const Key& k) { return (k.kind == QuiverKind::TypeT ? "T" : "A") + std::to_string(k.size); }

class Runs {
public:
    const SuiteReport& suite(const Key& k, Suite s) {
        auto& per = reports_[k];
        auto it = per.find(s);
        if (it != per.end()) return it->second;
        auto& ws = workspaces_[k];
        if (!ws) ws = std::make_unique<Workspace>(k.kind, k.size, 2);
        return per.emplace(s, run_suite(*ws, s)).first->second;
    }

private:
    std::map<Key, std::unique_ptr<Workspace>> workspaces_;
    std::map<Key, std::map<Suite, SuiteReport>> reports_;
};

// Accumulates named checks and renders the failures.
class Criterion {
public:
    void require(const std::string& where, const SuiteReport& rep, const std::string& name) {
        const Check* c = rep.find(name);
        add(where + ":" + name, c && c->pass);
    }
    void add(const std::string& what, bool ok) {
        ++count_;
        if (!ok) failed_.push_back(what);
    }
    void print(int k, const std::string& scope) const {
        std::cout << "CRITERION " << k << (failed_.empty() ? " PASS: " : " FAIL: ") << scope << "; " << count_ - failed_.size()
                  << "/" << count_ << " checks hold";
        if (!failed_.empty()) {
            std::cout << "; failing:";
            for (const auto& f : failed_) std::cout << ' ' << f;
        }
        std::cout << '\n';
    }

private:
    std::size_t count_ = 0;
    std::vector<std::string> failed_;
};

const std::vector<Key> kT13{{QuiverKind::TypeT, 1}, {QuiverKind::TypeT, 2}, {QuiverKind::TypeT, 3}};

}  // namespace

int main() {
    Runs runs;
    try {
        {
            Criterion c;
            std::vector<Key> keys{{QuiverKind::TypeT, 1}, {QuiverKind::TypeT, 2}, {QuiverKind::TypeT, 3}, {QuiverKind::TypeT, 4},
                                  {QuiverKind::TypeA, 2}, {QuiverKind::TypeA, 3}, {QuiverKind::TypeA, 4}, {QuiverKind::TypeA, 5},
                                  {QuiverKind::TypeA, 6}};
            for (const auto& k : keys) c.require(label(k), runs.suite(k, Suite::Hilbert), "hilbert_series");
            c.require("T2", runs.suite({QuiverKind::TypeT, 2}, Suite::Hilbert), "dimension_matrix");
            c.print(1, "Hilbert series for T1..T4 and A2..A6, T2 dimension matrix");
        }
        {
            Criterion c;
            for (const auto& k : kT13) {
                const auto& r = runs.suite(k, Suite::Hilbert);
                for (const char* n : {"center_dimensions", "center_u_series", "commutator_quotient", "nakayama_identity", "rho_phi_rho_sign"})
                    c.require(label(k), r, n);
                c.require(label(k), runs.suite(k, Suite::HH), "center_is_hh0");
            }
            c.print(2, "center, A/[A,A], Nakayama, rho phi rho for T1..T3");
        }
        {
            Criterion c;
            for (const auto& k : kT13) {
                const auto& r = runs.suite(k, Suite::Resolution);
                for (const auto& chk : r.checks) c.add(label(k) + ":" + chk.name, chk.pass);
            }
            c.print(3, "resolution d^2 = 0, exactness, self-duality, 2h period shift for T1..T3");
        }
        {
            Criterion c;
            for (const auto& k : kT13) {
                const auto& r = runs.suite(k, Suite::HH);
                for (const auto& chk : r.checks) c.add(label(k) + ":" + chk.name, chk.pass);
            }
            c.print(4, "d3* = 0, HH^0..HH^12 dimensions, dualities, X = Y = 0 for T1..T3");
        }
        {
            Criterion c;
            for (const auto& k : kT13) c.require(label(k), runs.suite(k, Suite::Calculus), "cyclic_dimensions");
            c.print(5, "HC_odd = 0, HC_0 = 2n, HC_2 = HC_4 = n for T1..T3");
        }
        {
            Criterion c;
            for (const auto& k : kT13) c.require(label(k), runs.suite(k, Suite::Cup), "alpha_formula");
            for (int m : {4, 5}) c.require(label({QuiverKind::TypeA, m}), runs.suite({QuiverKind::TypeA, m}, Suite::Appendix), "alpha_formula");
            c.print(6, "M_alpha closed form for T1..T3 and the A4, A5 formulas");
        }
        {
            // Corrected-reading diagnostics are reported by the cup suite but are not part of the statement.
            const std::set<std::string> diagnostics{"cup_zeta_f_exchanged", "cup_zeta_h_exchanged", "cup_zeta_prime_normalizable"};
            Criterion c;
            for (const auto& k : kT13)
                for (const auto& chk : runs.suite(k, Suite::Cup).checks)
                    if (chk.name.rfind("cup_", 0) == 0 && !diagnostics.count(chk.name)) c.add(label(k) + ":" + chk.name, chk.pass);
            c.print(7, "cup product relations for T1..T3");
        }
        {
            Criterion c;
            for (int n : {2, 3}) {
                Key k{QuiverKind::TypeT, n};
                const auto& r = runs.suite(k, Suite::Calculus);
                for (const char* name : {"connes_unique", "b_formulas", "b_squared_zero", "lie_theta0_bar", "calculus_identities",
                                         "printed_bv_antisymmetry", "bracket_period_independent", "tables_printed"})
                    c.require(label(k), r, name);
            }
            c.print(8, "B formulas, B^2 = 0, L_theta0 = deg, BV identity, m-independence, tables for s,t <= 1 on T2, T3");
        }
        {
            Criterion c;
            for (int n : {1, 2}) {
                auto cmp = compare_a_case(n, 12);
                c.add("A" + std::to_string(2 * n) + "/T" + std::to_string(n), cmp.holds);
            }
            c.print(9, "type A dimensions equal type T dimensions without R^* for A2/T1 and A4/T2, HH^0..HH^12");
        }
    } catch (const std::exception& e) {
        std::cerr << "acceptance: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
