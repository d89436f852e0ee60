#include "preproj/verify.hpp"

#include <sstream>

namespace preproj {

std::string suite_name(Suite s) {
    switch (s) {
        case Suite::Hilbert: return "hilbert";
        case Suite::Resolution: return "resolution";
        case Suite::HH: return "hh";
        case Suite::Cup: return "cup";
        case Suite::Calculus: return "calculus";
        case Suite::Appendix: return "appendix";
    }
    return "?";
}

std::optional<Suite> parse_suite(const std::string& s) {
    for (Suite x : {Suite::Hilbert, Suite::Resolution, Suite::HH, Suite::Cup, Suite::Calculus, Suite::Appendix})
        if (suite_name(x) == s) return x;
    return std::nullopt;
}

bool suite_applies(Suite s, QuiverKind kind) {
    return kind == QuiverKind::TypeT || s == Suite::Hilbert || s == Suite::Resolution || s == Suite::Appendix;
}

std::vector<Suite> default_suites(QuiverKind kind) {
    std::vector<Suite> out;
    for (Suite x : {Suite::Hilbert, Suite::Resolution, Suite::HH, Suite::Cup, Suite::Calculus, Suite::Appendix})
        if (suite_applies(x, kind)) out.push_back(x);
    return out;
}

bool SuiteReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

const Check* SuiteReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

nlohmann::json SuiteReport::to_json() const {
    auto arr = nlohmann::json::array();
    for (const auto& c : checks)
        arr.push_back({{"name", c.name}, {"status", c.pass ? "PASS" : "FAIL"}, {"expected", c.expected}, {"computed", c.computed}});
    return {{"suite", suite_name(suite)}, {"status", pass() ? "PASS" : "FAIL"}, {"checks", arr}};
}

Workspace::Workspace(QuiverKind kind, int size, int periods) : kind_(kind), size_(size), periods_(periods) {
    if (periods < 1) throw std::invalid_argument("periods must be at least 1");
    quiver_ = kind == QuiverKind::TypeT ? make_type_t(size) : make_type_a(size);
    alg_ = std::make_unique<GradedAlgebra>(build_preprojective(double_quiver(quiver_)));
    fd_ = frobenius(*alg_);
    au_ = preproj::automorphisms(*alg_);
}

const Resolution& Workspace::resolution() {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    if (!res_) res_ = std::make_unique<Resolution>(*alg_, fd_, 6 * duality_period() + 6);
    return *res_;
}

const HochschildComplex& Workspace::cochains() {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    if (!cochains_) cochains_ = std::make_unique<HochschildComplex>(resolution(), Variance::Cochain);
    return *cochains_;
}

const HochschildComplex& Workspace::chains() {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    if (!chains_) chains_ = std::make_unique<HochschildComplex>(resolution(), Variance::Chain);
    return *chains_;
}

const HomologyGroups& Workspace::cohomology() {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    if (!coh_) coh_ = std::make_unique<HomologyGroups>(cochains());
    return *coh_;
}

const HomologyGroups& Workspace::homology() {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    if (!hom_) hom_ = std::make_unique<HomologyGroups>(chains());
    return *hom_;
}

const CohomologyRing& Workspace::ring() {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    if (!ring_) ring_ = std::make_unique<CohomologyRing>(resolution(), 6 * duality_period() + 5);
    return *ring_;
}

const Calculus& Workspace::calculus() {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    if (!calc_) calc_ = std::make_unique<Calculus>(ring(), duality_period(), 6 * duality_period() + 5);
    return *calc_;
}

std::string polynomial_string(const std::vector<long>& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        long c = coeffs[d];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        long a = c < 0 ? -c : c;
        if (d == 0) os << a;
        else {
            if (a != 1) os << a;
            os << "t";
            if (d > 1) os << "^" << d;
        }
        first = false;
    }
    return first ? "0" : os.str();
}

nlohmann::json polynomial_matrix_json(const PolyMatrix& m) {
    auto out = nlohmann::json::array();
    for (const auto& row : m) {
        auto r = nlohmann::json::array();
        for (const auto& p : row) r.push_back(polynomial_string(p));
        out.push_back(r);
    }
    return out;
}

namespace {

Check make(std::string name, bool pass, nlohmann::json expected, nlohmann::json computed) {
    return {std::move(name), pass, std::move(expected), std::move(computed)};
}

// Coefficients through `degree` (missing entries are zero).
PolyMatrix truncate(const PolyMatrix& m, int degree) {
    PolyMatrix out = m;
    for (auto& row : out)
        for (auto& p : row) p.resize(static_cast<std::size_t>(degree + 1), 0);
    return out;
}

nlohmann::json dims_list(const std::vector<std::map<int, std::size_t>>& v) {
    auto out = nlohmann::json::array();
    for (const auto& d : v) out.push_back(dims_json(d));
    return out;
}

std::size_t total(const std::map<int, std::size_t>& d) {
    std::size_t s = 0;
    for (const auto& [k, v] : d) s += v;
    return s;
}

void hilbert_suite(Workspace& ws, SuiteReport& rep) {
    const auto& alg = ws.algebra();
    const auto& fd = ws.frobenius_data();
    const auto& q = ws.quiver();
    int n = alg.num_vertices();
    int h = alg.coxeter_number();
    int top = alg.top_degree() + h + 2;
    PolyMatrix actual = truncate(alg.hilbert(), top);
    PolyMatrix literal = truncate(hilbert_formula(adjacency(q), h, top), top);
    PolyMatrix twisted = truncate(hilbert_formula(adjacency(q), h, top, fd.nakayama_vertex), top);
    rep.checks.push_back(make("hilbert_series", actual == literal, polynomial_matrix_json(literal), polynomial_matrix_json(actual)));
    rep.checks.push_back(make("hilbert_series_nakayama_twisted", actual == twisted, polynomial_matrix_json(twisted),
                              polynomial_matrix_json(actual)));
    bool assoc = check_associativity(alg);
    rep.checks.push_back(make("associative", assoc, true, assoc));

    std::vector<std::vector<long>> dims(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (long x : alg.hilbert()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) dims[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += x;

    std::vector<int> perm_expected(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) perm_expected[static_cast<std::size_t>(v)] = ws.kind() == QuiverKind::TypeT ? v : n - 1 - v;
    rep.checks.push_back(make("nakayama_permutation", fd.nakayama_vertex == perm_expected, perm_expected, fd.nakayama_vertex));
    if (ws.kind() != QuiverKind::TypeT) return;

    std::vector<std::vector<long>> two_min(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) two_min[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 2 * (std::min(i, j) + 1);
    rep.checks.push_back(make("dimension_matrix", dims == two_min, two_min, dims));

    // center: z_0..z_{h-3} in degrees 0, 2, .., 2n-2 and the n socle elements omega_i in degree h-2
    std::map<int, std::size_t> center_expected, center_actual, u_expected, u_actual;
    for (int i = 0; i < n; ++i) ++center_expected[2 * i];
    center_expected[h - 2] += static_cast<std::size_t>(n);
    auto center = center_basis(alg);
    for (const auto& z : center) {
        int d = -1;
        alg.is_homogeneous(z, &d);
        ++center_actual[d];
    }
    for (int i = 0; i < n; ++i) {
        ++u_expected[2 * i];
        AlgElement z = center_element(alg, i);
        int d = -1;
        bool central = true;
        for (int a = 0; a < alg.quiver().num_arrows(); ++a) central = central && alg.commutator(z, alg.arrow(a)).empty();
        if (!z.empty() && alg.is_homogeneous(z, &d) && central) ++u_actual[d];
    }
    rep.checks.push_back(make("center_dimensions", center_actual == center_expected, dims_json(center_expected), dims_json(center_actual)));
    rep.checks.push_back(make("center_u_series", u_actual == u_expected, dims_json(u_expected), dims_json(u_actual)));

    auto cq = commutator_quotient(alg);
    std::erase_if(cq.dims, [](const auto& kv) { return kv.second == 0; });
    std::map<int, int> cq_expected{{0, n}};
    for (int d = 1; d <= h - 2; d += 2) ++cq_expected[d];
    rep.checks.push_back(make("commutator_quotient", cq.dims == cq_expected && cq.representatives_form_basis,
                              {{"dims", cq_expected}, {"basis", true}},
                              {{"dims", cq.dims}, {"basis", cq.representatives_form_basis}}));
    rep.checks.push_back(make("nakayama_identity", fd.nakayama_is_identity(), true, fd.nakayama_is_identity()));

    std::size_t bad = 0;
    const auto& au = ws.automorphisms();
    for (int e = 0; e < alg.dim(); ++e) {
        AlgElement x{{e, Rational(1)}};
        AlgElement lhs = alg.multiply(alg.multiply(au.rho, au.phi.apply(x)), au.rho);
        if (lhs != scaled(x, alg.degree(e) % 2 ? -1 : 1)) ++bad;
    }
    rep.checks.push_back(make("rho_phi_rho_sign", bad == 0, 0, bad));
}

void resolution_suite(Workspace& ws, SuiteReport& rep) {
    auto ex = check_exactness(ws.resolution());
    auto sd = check_self_duality(ws.resolution(), ws.automorphisms());
    rep.checks.push_back(make("d_squared_zero", ex.complex_ok, true, ex.complex_ok));
    rep.checks.push_back(make("degree_preserving", ex.degrees_ok, true, ex.degrees_ok));
    rep.checks.push_back(make("interior_homology_zero", ex.exact, true, ex.exact));
    rep.checks.push_back(make("augmentation_onto", ex.augmentation_onto, true, ex.augmentation_onto));
    int h = ws.algebra().coxeter_number();
    rep.checks.push_back(make("period_shift", ex.period_shift_ok, 2 * h, ex.period_shift_ok ? nlohmann::json(2 * h) : nlohmann::json(ex.failures)));
    if (ws.kind() == QuiverKind::TypeT) {
        rep.checks.push_back(make("i_is_d0_dual", sd.i_is_d0_dual, true, sd.i_is_d0_dual));
        rep.checks.push_back(make("d2_is_d1_dual", sd.d2_is_d1_dual, true, sd.d2_is_d1_dual));
    }
}

void hh_suite(Workspace& ws, SuiteReport& rep) {
    const auto& alg = ws.algebra();
    int n = alg.num_vertices();
    int jmax = 6 * ws.periods();
    auto cf = check_closed_forms(ws.cochains(), ws.automorphisms());
    rep.checks.push_back(make("d3_star_zero", cf.d3_zero, true, cf.d3_zero));
    rep.checks.push_back(make("closed_form_differentials", cf.d1 && cf.d2 && cf.d3 && cf.d4 && cf.d5 && cf.d6, true, cf.to_json()));
    NamedCohomology named(ws.cohomology(), jmax);
    auto cr = cohomology_report(ws.cohomology(), ws.homology(), &named, &cf, center_basis(alg));
    std::vector<std::map<int, std::size_t>> coh_exp, hom_exp, coh, hom;
    for (int j = 0; j <= jmax; ++j) {
        coh_exp.push_back(expected_cohomology(n, j));
        hom_exp.push_back(expected_homology(n, j));
        coh.push_back(ws.cohomology().dims(j));
        hom.push_back(ws.homology().dims(j));
    }
    rep.checks.push_back(make("cohomology_dimensions", coh == coh_exp, dims_list(coh_exp), dims_list(coh)));
    rep.checks.push_back(make("homology_dimensions", hom == hom_exp, dims_list(hom_exp), dims_list(hom)));
    rep.checks.push_back(make("hh0_total", total(coh[0]) == static_cast<std::size_t>(2 * n), 2 * n, total(coh[0])));
    rep.checks.push_back(make("hh1_total", total(coh[1]) == static_cast<std::size_t>(n), n, total(coh[1])));
    bool k_degree = coh[2].size() == 1 && coh[3].size() == 1 && total(coh[2]) == static_cast<std::size_t>(n) &&
                    total(coh[3]) == static_cast<std::size_t>(n);
    rep.checks.push_back(make("hh2_hh3_single_degree", k_degree, {{"HH2", {{"-2", n}}}, {"HH3", {{"-2", n}}}},
                              {{"HH2", dims_json(coh[2])}, {"HH3", dims_json(coh[3])}}));
    auto dual = nlohmann::json::object();
    bool dual_ok = true;
    for (const auto& d : cr.dualities) {
        dual[d.name] = d.holds;
        dual_ok = dual_ok && d.holds;
    }
    rep.checks.push_back(make("dualities", dual_ok, true, dual));
    rep.checks.push_back(make("x_zero", cr.x_zero, true, cr.x_zero));
    rep.checks.push_back(make("y_zero", cr.y_zero, true, cr.y_zero));
    rep.checks.push_back(make("center_is_hh0", cr.center_matches, true, cr.center_matches));
    rep.checks.push_back(make("named_bases", cr.named_bases_ok, true, cr.named_bases_ok ? nlohmann::json(true) : nlohmann::json(named.failures())));
    rep.checks.push_back(make("periodic", cr.periodic, true, cr.periodic));
}

void alpha_checks(Workspace& ws, SuiteReport& rep) {
    auto ar = alpha_matrix(ws.resolution(), ws.cohomology(), ws.automorphisms());
    auto j = ar.to_json();
    rep.checks.push_back(make("alpha_formula", ar.matches_formula, j["formula"], j["cup"]));
    rep.checks.push_back(make("alpha_routes_agree", ar.routes_agree, j["closed_form"], j["cup"]));
    rep.checks.push_back(make("alpha_symmetric_invertible", ar.symmetric && ar.invertible, true, ar.symmetric && ar.invertible));
    if (ws.kind() == QuiverKind::TypeT)
        rep.checks.push_back(make("hilbert_derivative", ar.derivative_matches, "h (2+C)^{-1}", j["hilbert_derivative"]));
}

void cup_suite(Workspace& ws, SuiteReport& rep) {
    alpha_checks(ws, rep);
    auto ct = check_cup_theorem(ws.ring());
    for (const auto& item : ct.items) rep.checks.push_back(make("cup_" + item.name, item.holds, true, item.detail));
}

void calculus_suite(Workspace& ws, SuiteReport& rep) {
    const auto& calc = ws.calculus();
    int n = ws.algebra().num_vertices();
    auto bf = check_b_formulas(calc, 1);
    rep.checks.push_back(make("connes_unique", calc.connes_unique() && calc.connes_solvable(), true, calc.connes_unique() && calc.connes_solvable()));
    rep.checks.push_back(make("b_formulas", bf.psi && bf.odd && bf.h && bf.theta, true, bf.to_json()));
    rep.checks.push_back(make("b_squared_zero", bf.squared_zero, true, bf.squared_zero));

    auto cy = cyclic_homology(calc, 6);
    std::vector<std::size_t> hc;
    for (const auto& d : cy.hc) hc.push_back(total(d));
    std::vector<std::size_t> hc_exp{static_cast<std::size_t>(2 * n), 0, static_cast<std::size_t>(n), 0, static_cast<std::size_t>(n), 0};
    std::vector<std::size_t> hc_first(hc.begin(), hc.begin() + 6);
    rep.checks.push_back(make("cyclic_dimensions", hc_first == hc_exp, hc_exp, hc_first));
    rep.checks.push_back(make("connes_exact", cy.connes_exact, true, cy.connes_exact));

    auto lt = verify_lie_theta0(ws.resolution(), 3, 2);
    rep.checks.push_back(make("lie_theta0_bar", lt.all(), true, lt.to_json()));

    auto id = check_calculus_identities(calc, 5);
    auto idj = id.to_json();
    rep.checks.push_back(make("calculus_identities", id.all(), true, idj));
    rep.checks.push_back(make("printed_bv_antisymmetry", id.printed_antisymmetry, 0, id.printed_antisymmetry_failures));

    {
        int m1 = ws.duality_period();
        int m2 = m1 + 1;
        Resolution res2(ws.algebra(), ws.frobenius_data(), 6 * m2 + 6);
        CohomologyRing ring2(res2, 6 * m2 + 5);
        Calculus c1(ring2, m1, 6 * m1 + 5);
        Calculus c2(ring2, m2, 6 * m2 + 5);
        auto ir = check_bracket_independence(c1, c2, 5);
        rep.checks.push_back(make("bracket_period_independent", ir.independent, true, ir.to_json()));
    }

    auto entries = calculus_tables(calc, 1);
    auto printed = nlohmann::json::array();
    auto corrected = nlohmann::json::array();
    for (const auto& e : entries) {
        if (!e.match) printed.push_back(table_entry_json(e));
        if (!e.match_corrected) corrected.push_back(table_entry_json(e));
    }
    rep.checks.push_back(make("tables_printed", printed.empty(), {{"entries", entries.size()}, {"mismatches", 0}},
                              {{"entries", entries.size()}, {"mismatches", printed.size()}, {"cells", printed}}));
    rep.checks.push_back(make("tables_corrected", corrected.empty(), {{"entries", entries.size()}, {"mismatches", 0}},
                              {{"entries", entries.size()}, {"mismatches", corrected.size()}, {"cells", corrected}}));
}

void appendix_suite(Workspace& ws, SuiteReport& rep) {
    alpha_checks(ws, rep);
    int n = ws.kind() == QuiverKind::TypeT ? ws.size() : (ws.size() % 2 == 0 ? ws.size() / 2 : 0);
    if (n == 0) return;
    auto cmp = compare_a_case(n, 6 * ws.periods());
    rep.checks.push_back(make("a_case_dimensions", cmp.holds, dims_list(cmp.type_t_reduced), dims_list(cmp.type_a)));
}

}  // namespace

ACaseComparison compare_a_case(int n, int max_index) {
    ACaseComparison out;
    out.n = n;
    auto at = build_preprojective(double_quiver(make_type_t(n)));
    auto aa = build_preprojective(double_quiver(make_type_a(2 * n)));
    auto ft = frobenius(at);
    auto fa = frobenius(aa);
    Resolution rt(at, ft, max_index + 1), ra(aa, fa, max_index + 1);
    HochschildComplex ct(rt, Variance::Cochain), ca(ra, Variance::Cochain);
    HomologyGroups ht(ct), ha(ca);
    int h = 2 * n + 1;
    out.holds = true;
    for (int j = 0; j <= max_index; ++j) {
        auto t = ht.dims(j);
        if (j == 0) {
            t[h - 2] -= static_cast<std::size_t>(n);
            if (t[h - 2] == 0) t.erase(h - 2);
        }
        out.type_t_reduced.push_back(t);
        out.type_a.push_back(ha.dims(j));
        out.holds = out.holds && t == out.type_a.back();
    }
    return out;
}

SuiteReport run_suite(Workspace& ws, Suite s) {
    if (!suite_applies(s, ws.kind())) throw std::invalid_argument("suite " + suite_name(s) + " needs a type T quiver");
    SuiteReport rep;
    rep.suite = s;
    switch (s) {
        case Suite::Hilbert: hilbert_suite(ws, rep); break;
        case Suite::Resolution: resolution_suite(ws, rep); break;
        case Suite::HH: hh_suite(ws, rep); break;
        case Suite::Cup: cup_suite(ws, rep); break;
        case Suite::Calculus: calculus_suite(ws, rep); break;
        case Suite::Appendix: appendix_suite(ws, rep); break;
    }
    return rep;
}

bool RunReport::pass() const {
    for (const auto& s : suites)
        if (!s.pass()) return false;
    return true;
}

nlohmann::json RunReport::to_json() const {
    auto arr = nlohmann::json::array();
    for (const auto& s : suites) arr.push_back(s.to_json());
    return {{"schema", "preproj-report/1"},
            {"quiver", {{"type", kind == QuiverKind::TypeT ? "T" : "A"}, {"size", size}}},
            {"periods", periods},
            {"status", pass() ? "PASS" : "FAIL"},
            {"suites", arr}};
}

std::string RunReport::to_tsv() const {
    std::ostringstream os;
    os << "suite\tcheck\tstatus\texpected\tcomputed\n";
    for (const auto& s : suites)
        for (const auto& c : s.checks)
            os << suite_name(s.suite) << '\t' << c.name << '\t' << (c.pass ? "PASS" : "FAIL") << '\t' << c.expected.dump() << '\t'
               << c.computed.dump() << '\n';
    return os.str();
}

}  // namespace preproj
