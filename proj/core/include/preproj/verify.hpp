#pragma once

#include "preproj/bar.hpp"
#include "preproj/cup.hpp"
#include "preproj/tables.hpp"

#include <memory>
#include <mutex>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace preproj {

enum class Suite { Hilbert, Resolution, HH, Cup, Calculus, Appendix };

std::string suite_name(Suite s);
std::optional<Suite> parse_suite(const std::string& s);
// Suites run for "all": type A has no named cohomology, so only hilbert, resolution and appendix.
std::vector<Suite> default_suites(QuiverKind kind);
bool suite_applies(Suite s, QuiverKind kind);

struct Check {
    std::string name;
    bool pass = false;
    nlohmann::json expected;
    nlohmann::json computed;
};

struct SuiteReport {
    Suite suite = Suite::Hilbert;
    std::vector<Check> checks;
    bool pass() const;
    const Check* find(const std::string& name) const;
    nlohmann::json to_json() const;
};

// Everything computed for one algebra, built on first use. `periods` fixes the cohomology
// range HH^0..HH^{6 periods}; the duality uses m = periods + 1, so that products of two
// classes of period <= 1 stay below its top index 6m+5.
class Workspace {
public:
    Workspace(QuiverKind kind, int size, int periods);

    QuiverKind kind() const { return kind_; }
    int size() const { return size_; }
    int periods() const { return periods_; }
    int duality_period() const { return periods_ + 1; }
    const Quiver& quiver() const { return quiver_; }
    const GradedAlgebra& algebra() const { return *alg_; }
    const FrobeniusData& frobenius_data() const { return fd_; }
    const Automorphisms& automorphisms() const { return au_; }

    const Resolution& resolution();
    const HochschildComplex& cochains();
    const HochschildComplex& chains();
    const HomologyGroups& cohomology();
    const HomologyGroups& homology();
    const CohomologyRing& ring();
    const Calculus& calculus();

private:
    QuiverKind kind_;
    int size_;
    int periods_;
    Quiver quiver_;
    std::unique_ptr<GradedAlgebra> alg_;
    FrobeniusData fd_;
    Automorphisms au_;
    std::recursive_mutex mutex_;
    std::unique_ptr<Resolution> res_;
    std::unique_ptr<HochschildComplex> cochains_;
    std::unique_ptr<HochschildComplex> chains_;
    std::unique_ptr<HomologyGroups> coh_;
    std::unique_ptr<HomologyGroups> hom_;
    std::unique_ptr<CohomologyRing> ring_;
    std::unique_ptr<Calculus> calc_;
};

SuiteReport run_suite(Workspace& ws, Suite s);

// Graded dimensions of HH^j(Pi_{A_2n}) against HH^j(Pi_{T_n}) with the classes of R^* removed.
struct ACaseComparison {
    int n = 0;
    std::vector<std::map<int, std::size_t>> type_a;
    std::vector<std::map<int, std::size_t>> type_t_reduced;
    bool holds = false;
};

ACaseComparison compare_a_case(int n, int max_index);

// Exponents -> coefficients as "1 + 2t^3", and the matrix of such strings.
std::string polynomial_string(const std::vector<long>& coeffs);
nlohmann::json polynomial_matrix_json(const PolyMatrix& m);

struct RunReport {
    QuiverKind kind = QuiverKind::TypeT;
    int size = 0;
    int periods = 0;
    std::vector<SuiteReport> suites;
    bool pass() const;
    nlohmann::json to_json() const;
    std::string to_tsv() const;
};

}  // namespace preproj
