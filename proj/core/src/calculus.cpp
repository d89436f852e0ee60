#include "preproj/calculus.hpp"

#include "preproj/parallel.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace preproj {

namespace {

std::map<int, std::vector<AlgElement>> by_degree(const HochschildComplex& c, int j, const std::vector<AlgElement>& values) {
    const auto& res = c.resolution();
    const auto& alg = res.algebra();
    std::map<int, std::vector<AlgElement>> out;
    for (std::size_t g = 0; g < values.size(); ++g)
        for (const auto& [x, coef] : values[g]) {
            int gd = res.generator(j, static_cast<int>(g)).degree;
            int d = c.variance() == Variance::Cochain ? alg.degree(x) - gd : alg.degree(x) + gd;
            auto& v = out[d];
            if (v.empty()) v.resize(values.size());
            v[g][x] = coef;
        }
    return out;
}

std::string coefficient_prefix(const Rational& c, bool first) {
    std::string out;
    Rational a = abs(c);
    if (sgn(c) < 0) out = first ? "-" : " - ";
    else if (!first) out = " + ";
    if (a != 1) out += a.get_str() + "*";
    return out;
}

Matrix sign_by_distance(const Matrix& m) {
    Matrix out = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if ((i > j ? i - j : j - i) % 2 == 1) out(i, j) = -out(i, j);
    return out;
}

}  // namespace

Cochain cup_cochains(const Resolution& res, const Cochain& a, const Cochain& b) {
    auto lifts = lift_cocycle(res, b, a.index);
    const auto& top = lifts.back();
    Cochain out{a.index + b.index, {}};
    for (int g = 0; g < res.num_generators(out.index); ++g) out.values.push_back(evaluate(res, a, top.images[static_cast<std::size_t>(g)]));
    return out;
}

Chain cap_chain(const Resolution& res, const std::vector<ChainMapComponent>& lift_of_eta, const Chain& c) {
    const auto& alg = res.algebra();
    int i = lift_of_eta.front().source;
    int steps = c.index - i;
    if (steps < 0) throw std::invalid_argument("cap_chain: chain index below the cochain index");
    if (steps >= static_cast<int>(lift_of_eta.size())) throw std::out_of_range("cap_chain: lift too short");
    const auto& comp = lift_of_eta[static_cast<std::size_t>(steps)];
    Chain out{steps, std::vector<AlgElement>(static_cast<std::size_t>(res.num_generators(steps)))};
    for (std::size_t g = 0; g < c.values.size(); ++g) {
        const auto& w = c.values[g];
        if (w.empty()) continue;
        for (const auto& [key, coef] : comp.images[g]) {
            auto [l, g2, r] = key;
            if (g2 < 0) continue;
            AlgElement v = alg.multiply(alg.multiply(r, w), AlgElement{{l, 1}});
            axpy(out.values[static_cast<std::size_t>(g2)], coef, v);
        }
    }
    return out;
}

std::optional<std::vector<Rational>> expand_in(const HomologyGroups& hh, const Cochain& c, const std::vector<Cochain>& basis) {
    const auto& cx = hh.complex();
    const auto& res = cx.resolution();
    int j = c.index;
    std::vector<int> degs;
    for (const auto& b : basis) {
        auto d = cochain_degree(res, b);
        degs.push_back(d ? *d : INT32_MIN);
    }
    std::vector<Rational> out(basis.size());
    for (const auto& [d, vals] : by_degree(cx, j, c.values)) {
        Vector v = cx.to_vector(j, d, vals);
        if (!hh.is_closed(j, d, v)) return std::nullopt;
        auto p = hh.piece(j, d);
        std::vector<std::size_t> idx;
        std::vector<Vector> cols;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (degs[i] == d) {
                idx.push_back(i);
                cols.push_back(cx.to_vector(j, d, basis[i].values));
            }
        if (p) cols.insert(cols.end(), p->boundaries.begin(), p->boundaries.end());
        if (cols.empty()) {
            if (!is_zero(v)) return std::nullopt;
            continue;
        }
        auto x = LinearSolver(Matrix::from_columns(cols, v.size())).solve(v);
        if (!x) return std::nullopt;
        for (std::size_t k = 0; k < idx.size(); ++k) out[idx[k]] = (*x)[k];
    }
    return out;
}

bool Class::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return sgn(c) == 0; });
}

Class operator+(const Class& a, const Class& b) {
    if (a.index != b.index || a.coeffs.size() != b.coeffs.size()) throw DimensionError("Class sum: index mismatch");
    Class out = a;
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
    return out;
}

Class operator-(const Class& a, const Class& b) { return a + Rational(-1) * b; }

Class operator*(const Rational& c, const Class& a) {
    Class out = a;
    for (auto& x : out.coeffs) x *= c;
    return out;
}

// ---------------------------------------------------------------- cohomology ring

CohomologyRing::CohomologyRing(const Resolution& res, int max_index) : res_(&res), max_(max_index) {
    if (res.algebra().kind() != QuiverKind::TypeT) throw std::invalid_argument("CohomologyRing: type T only");
    if (max_index + 1 > res.max_index()) throw std::out_of_range("CohomologyRing: resolution too short");
    cochains_ = std::make_unique<HochschildComplex>(res, Variance::Cochain);
    groups_ = std::make_unique<HomologyGroups>(*cochains_);
    named_ = std::make_unique<NamedCohomology>(*groups_, max_index);
    if (!named_->valid()) throw ConsistencyError("CohomologyRing: named bases invalid: " + named_->failures().front());
}

std::optional<std::size_t> CohomologyRing::find(Family f, int k, int period) const {
    int j = cohomology_family_index(f) + 6 * period;
    if (j < 0 || j > max_) return std::nullopt;
    const auto& b = basis(j);
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i].family == f && b[i].k == k && b[i].period == period) return i;
    return std::nullopt;
}

Class CohomologyRing::element(Family f, int k, int period) const {
    auto i = find(f, k, period);
    if (!i) throw std::out_of_range("CohomologyRing: no named class " + family_name(f) + "_" + std::to_string(k));
    Class c = zero(cohomology_family_index(f) + 6 * period);
    c.coeffs[*i] = 1;
    return c;
}

Class CohomologyRing::zero(int j) const {
    if (j < 0 || j > max_) throw std::out_of_range("CohomologyRing: index " + std::to_string(j) + " out of range");
    return {j, std::vector<Rational>(basis(j).size())};
}

Class CohomologyRing::expand(const Cochain& c) const { return {c.index, named_->expand(c)}; }

Cochain CohomologyRing::cochain(const Class& c) const { return named_->combination(c.index, c.coeffs); }

const std::vector<ChainMapComponent>& CohomologyRing::lift(int j, std::size_t i) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = lifts_.find({j, i});
        if (it != lifts_.end()) return *it->second;
    }
    auto l = std::make_shared<const std::vector<ChainMapComponent>>(lift_cocycle(*res_, basis(j).at(i).cochain, max_ - j));
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = lifts_.emplace(std::make_pair(j, i), std::move(l));
    return *it->second;
}

const Class& CohomologyRing::cup_basis(int p, std::size_t i, int q, std::size_t j) const {
    auto key = std::make_tuple(p, i, q, j);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = products_.find(key);
        if (it != products_.end()) return *it->second;
    }
    if (p + q > max_) throw std::out_of_range("cup: index " + std::to_string(p + q) + " beyond the computed range");
    Cochain prod{p + q, {}};
    // Lift the factor of smaller index; a b = (-1)^{pq} b a.
    if (p <= q) {
        const auto& comp = lift(p, i).at(static_cast<std::size_t>(q));
        const auto& b = basis(q).at(j).cochain;
        Rational sign = (p * q) % 2 ? -1 : 1;
        for (int g = 0; g < res_->num_generators(p + q); ++g)
            prod.values.push_back(scaled(evaluate(*res_, b, comp.images[static_cast<std::size_t>(g)]), sign));
    } else {
        const auto& comp = lift(q, j).at(static_cast<std::size_t>(p));
        const auto& a = basis(p).at(i).cochain;
        for (int g = 0; g < res_->num_generators(p + q); ++g) prod.values.push_back(evaluate(*res_, a, comp.images[static_cast<std::size_t>(g)]));
    }
    auto c = std::make_shared<const Class>(expand(prod));
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = products_.emplace(key, std::move(c));
    return *it->second;
}

Class CohomologyRing::cup(const Class& a, const Class& b) const {
    Class out = zero(a.index + b.index);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (sgn(a.coeffs[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
            if (sgn(b.coeffs[j]) == 0) continue;
            const auto& p = cup_basis(a.index, i, b.index, j);
            Rational c = a.coeffs[i] * b.coeffs[j];
            for (std::size_t k = 0; k < p.coeffs.size(); ++k) out.coeffs[k] += c * p.coeffs[k];
        }
    }
    return out;
}

std::string CohomologyRing::to_string(const Class& c) const {
    std::string out;
    const auto& b = basis(c.index);
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
        if (sgn(c.coeffs[i]) == 0) continue;
        out += coefficient_prefix(c.coeffs[i], out.empty()) + b[i].name();
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- alpha

Matrix alpha_formula_matrix(const GradedAlgebra& alg) {
    int h = alg.coxeter_number();
    if (alg.kind() == QuiverKind::TypeT) {
        auto c = adjacency(alg.quiver().base());
        std::size_t n = c.size();
        Matrix two_plus_c(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) two_plus_c(i, j) = c[i][j] + (i == j ? 2 : 0);
        auto inv = inverse(sign_by_distance(two_plus_c));
        return inv->scaled(h);
    }
    int m = alg.num_vertices();
    std::size_t n = static_cast<std::size_t>(m / 2);
    Matrix t(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        t(i, i) = 2;
        if (i + 1 < n) t(i, i + 1) = t(i + 1, i) = -1;
    }
    if (m % 2 == 0) t(n - 1, n - 1) = 3;
    return inverse(t)->scaled(h);
}

AlphaReport alpha_matrix(const Resolution& res, const HomologyGroups& coh, const Automorphisms& au) {
    const auto& alg = res.algebra();
    const auto& fd = res.frobenius_data();
    bool type_t = alg.kind() == QuiverKind::TypeT;
    auto labels = family_labels(alg, Family::F);
    std::size_t n = labels.size();
    std::vector<Cochain> hs;
    for (int k : labels) hs.push_back(named_cocycle(res, Family::H, k).cochain);
    auto theta = named_cocycle(res, Family::Theta, 0).cochain;
    AlphaReport rep;
    rep.cup = Matrix(n, n);
    rep.closed_form = Matrix(n, n);
    bool ok = true;
    for (std::size_t col = 0; col < n; ++col) {
        auto f = named_cocycle(res, Family::F, labels[col]).cochain;
        auto e = expand_in(coh, cup_cochains(res, theta, f), hs);
        // sum_j deg(x_j) tau(x_j) X x_j^*, X = sum of the values of f
        AlgElement x;
        for (const auto& v : f.values) axpy(x, 1, v);
        AlgElement y;
        for (int b = 0; b < alg.dim(); ++b) {
            if (alg.degree(b) == 0) continue;
            AlgElement tb = type_t ? au.phi.apply({{b, 1}}) : AlgElement{{b, 1}};
            axpy(y, alg.degree(b), alg.multiply(alg.multiply(tb, x), fd.dual[static_cast<std::size_t>(b)]));
        }
        Cochain closed{3, std::vector<AlgElement>(static_cast<std::size_t>(res.num_generators(3)))};
        for (const auto& [b, c] : y) closed.values[static_cast<std::size_t>(alg.left(b))][b] += c;
        auto e2 = expand_in(coh, closed, hs);
        if (!e || !e2) {
            ok = false;
            continue;
        }
        for (std::size_t r = 0; r < n; ++r) {
            rep.cup(r, col) = (*e)[r];
            rep.closed_form(r, col) = (*e2)[r];
        }
    }
    rep.formula = alpha_formula_matrix(alg);
    rep.routes_agree = ok && rep.cup == rep.closed_form;
    rep.symmetric = rep.cup == rep.cup.transpose();
    rep.invertible = rank(rep.cup) == n;
    rep.matches_formula = ok && rep.cup == rep.formula;
    rep.matches_negated_formula = ok && rep.cup == rep.formula.scaled(-1);
    if (type_t) {
        const auto& hil = alg.hilbert();
        rep.hilbert_derivative = Matrix(n, n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t d = 1; d < hil[k][l].size(); ++d)
                    rep.hilbert_derivative(k, l) += Rational(static_cast<long>(d) * hil[k][l][d] * (d % 2 ? 1 : -1));
        auto c = adjacency(alg.quiver().base());
        Matrix two_plus_c(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) two_plus_c(i, j) = c[i][j] + (i == j ? 2 : 0);
        rep.derivative_matches = rep.hilbert_derivative == inverse(two_plus_c)->scaled(alg.coxeter_number());
    }
    return rep;
}

namespace {

nlohmann::json matrix_json(const Matrix& m) {
    auto out = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
        out.push_back(row);
    }
    return out;
}

}  // namespace

nlohmann::json AlphaReport::to_json() const {
    nlohmann::json j;
    j["cup"] = matrix_json(cup);
    j["closed_form"] = matrix_json(closed_form);
    j["formula"] = matrix_json(formula);
    if (hilbert_derivative.rows()) j["hilbert_derivative"] = matrix_json(hilbert_derivative);
    j["routes_agree"] = routes_agree;
    j["symmetric"] = symmetric;
    j["invertible"] = invertible;
    j["matches_formula"] = matches_formula;
    j["matches_negated_formula"] = matches_negated_formula;
    if (hilbert_derivative.rows()) j["derivative_matches"] = derivative_matches;
    return j;
}

// ---------------------------------------------------------------- duality

Duality::Duality(const CohomologyRing& ring, const HomologyGroups& hom, int m) : ring_(&ring), hom_(&hom), m_(m) {
    if (top() > ring.max_index() || top() >= hom.max_index()) throw std::out_of_range("Duality: resolution too short");
    auto p = hom.piece(top(), degree_shift());
    c0_.index = top();
    if (!p || p->representatives.size() != 1) return;
    fundamental_ok_ = true;
    c0_.values = hom.complex().from_vector(top(), degree_shift(), p->representatives.front());
}

int Duality::degree_shift() const { return (2 * m_ + 1) * ring_->resolution().coxeter_number() + 2; }

Chain Duality::to_chain(const Class& eta) const {
    const auto& res = ring_->resolution();
    int j = top() - eta.index;
    Chain out{j, std::vector<AlgElement>(static_cast<std::size_t>(res.num_generators(j)))};
    for (std::size_t k = 0; k < eta.coeffs.size(); ++k) {
        if (sgn(eta.coeffs[k]) == 0) continue;
        Chain c = cap_chain(res, ring_->lift(eta.index, k), c0_);
        for (std::size_t g = 0; g < out.values.size(); ++g) axpy(out.values[g], eta.coeffs[k], c.values[g]);
    }
    return out;
}

const Duality::Block& Duality::block(int j, int degree) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = blocks_.find({j, degree});
        if (it != blocks_.end()) return *it->second;
    }
    auto b = std::make_shared<Block>();
    int i = top() - j;
    const auto& basis = ring_->basis(i);
    std::size_t dim = hom_->dim(j, degree);
    std::vector<Vector> cols;
    const auto& cx = hom_->complex();
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (basis[k].family == Family::Omega || basis[k].degree + degree_shift() != degree) continue;
        Class e = ring_->zero(i);
        e.coeffs[k] = 1;
        Chain c = to_chain(e);
        Vector v = cx.to_vector(j, degree, c.values);
        auto coords = hom_->coordinates(j, degree, v);
        if (!coords) throw ConsistencyError("Duality: cap with the fundamental class is not a cycle");
        b->named.push_back(k);
        cols.push_back(std::move(*coords));
    }
    b->images = Matrix::from_columns(cols, dim);
    b->solver = LinearSolver(b->images);
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = blocks_.emplace(std::make_pair(j, degree), std::move(b));
    return *it->second;
}

std::optional<Class> Duality::to_cohomology(const Chain& c) const {
    int j = c.index;
    const auto& cx = hom_->complex();
    Class out = ring_->zero(top() - j);
    for (const auto& [d, vals] : by_degree(cx, j, c.values)) {
        auto coords = hom_->coordinates(j, d, cx.to_vector(j, d, vals));
        if (!coords) return std::nullopt;
        if (j == 0 && d == 0) continue;  // the summand R
        const auto& b = block(j, d);
        auto x = b.solver.solve(*coords);
        if (!x) return std::nullopt;
        for (std::size_t k = 0; k < b.named.size(); ++k) out.coeffs[b.named[k]] = (*x)[k];
    }
    return out;
}

bool Duality::injective(int j) const {
    for (const auto& [d, k] : ring_->groups().dims(top() - j)) {
        const auto& b = block(j, d + degree_shift());
        std::size_t expected = k;
        if (top() - j == 0)
            for (const auto& nc : ring_->basis(0))
                if (nc.family == Family::Omega && nc.degree == d) --expected;
        if (b.named.size() != expected || b.solver.rank() != b.named.size()) return false;
    }
    return true;
}

DualityReport check_duality(const Duality& dual, int max_j, int max_eta_index) {
    DualityReport rep;
    rep.fundamental_class = dual.has_fundamental_class();
    if (!rep.fundamental_class) {
        rep.failures.push_back("HH_N is not one-dimensional in the shift degree");
        return rep;
    }
    const auto& ring = *dual.ring_ptr();
    const auto& hom = dual.homology();
    const auto& chains = hom.complex();
    const auto& res = chains.resolution();
    int n_top = dual.top();
    int shift = dual.degree_shift();
    max_j = std::min(max_j, n_top - 1);

    rep.degree_bijective = true;
    rep.invertible = true;
    for (int j = 0; j <= max_j; ++j) {
        auto hd = reduced(hom.dims(j), j);
        std::map<int, std::size_t> shifted;
        for (const auto& [d, k] : hd) shifted[d - shift] = k;
        if (shifted != ring.groups().dims(n_top - j)) {
            rep.degree_bijective = false;
            rep.failures.push_back("graded dimensions of HH_" + std::to_string(j) + " and HH^" + std::to_string(n_top - j) + " differ");
        }
        if (!dual.injective(j)) {
            rep.invertible = false;
            rep.failures.push_back("D^{-1} is not injective on HH^" + std::to_string(n_top - j));
        }
    }

    struct Task {
        int j;
        int d;
        std::size_t r;
    };
    std::vector<Task> tasks;
    // D kills the summand R of HH_0, so cycles there are left out.
    for (int j = 0; j <= max_j; ++j)
        for (const auto& [d, k] : hom.dims(j))
            if (j > 0 || d != 0)
                for (std::size_t r = 0; r < k; ++r) tasks.push_back({j, d, r});
    std::vector<std::pair<int, std::size_t>> etas;
    for (int i = 0; i <= max_eta_index; ++i)
        for (std::size_t k = 0; k < ring.basis(i).size(); ++k) etas.push_back({i, k});

    std::vector<std::vector<std::string>> fails(tasks.size());
    std::vector<std::size_t> counts(tasks.size());
    parallel_for(tasks.size(), [&](std::size_t t) {
        auto [j, d, r] = tasks[t];
        Chain c{j, chains.from_vector(j, d, hom.piece(j, d)->representatives[r])};
        auto dc = dual.to_cohomology(c);
        if (!dc) {
            fails[t].push_back("HH_" + std::to_string(j) + " representative has no image");
            return;
        }
        for (auto [i, k] : etas) {
            if (i > j) continue;
            Chain cap = cap_chain(res, ring.lift(i, k), c);
            auto lhs = dual.to_cohomology(cap);
            Class eta = ring.zero(i);
            eta.coeffs[k] = 1;
            Class rhs = ring.cup(eta, *dc);
            ++counts[t];
            if (!lhs || !(*lhs == rhs))
                fails[t].push_back("eta = " + ring.basis(i)[k].name() + ", c in HH_" + std::to_string(j) + " degree " + std::to_string(d) +
                                   ": " + (lhs ? ring.to_string(*lhs) : std::string("not a cycle")) + " vs " + ring.to_string(rhs));
        }
    });
    rep.intertwining = true;
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        rep.intertwining_checks += counts[t];
        if (!fails[t].empty()) rep.intertwining = false;
        for (auto& f : fails[t])
            if (rep.failures.size() < 20) rep.failures.push_back(f);
    }
    return rep;
}

nlohmann::json DualityReport::to_json() const {
    return {{"fundamental_class", fundamental_class},
            {"degree_bijective", degree_bijective},
            {"invertible", invertible},
            {"intertwining", intertwining},
            {"intertwining_checks", intertwining_checks},
            {"failures", failures}};
}

// ---------------------------------------------------------------- calculus

Calculus::Calculus(const CohomologyRing& ring, int m, int max_homology_index) : ring_(&ring), m_(m), jmax_(max_homology_index) {
    if (jmax_ > top()) jmax_ = top();
    if (top() > ring.max_index()) throw std::out_of_range("Calculus: cohomology computed below 6m+5");
    for (int j = 0; j <= jmax_; ++j) {
        std::vector<std::size_t> idx;
        const auto& b = ring.basis(top() - j);
        for (std::size_t i = 0; i < b.size(); ++i)
            if (b[i].family != Family::Omega) idx.push_back(i);
        hbasis_.push_back(std::move(idx));
    }
    solve_connes();
}

int Calculus::shift() const { return (2 * m_ + 1) * ring_->resolution().coxeter_number() + 2; }

Class Calculus::homology_zero(int j) const { return {j, std::vector<Rational>(homology_basis(j).size())}; }

Class Calculus::homology_element(Family f, int k, int t) const {
    return from_cohomology(ring_->element(f, k, m_ - t));
}

int Calculus::homology_degree(int j, std::size_t pos) const { return ring_->degree(top() - j, homology_basis(j).at(pos)) + shift(); }

std::string Calculus::homology_name(int j, std::size_t pos) const {
    const auto& nc = ring_->basis(top() - j).at(homology_basis(j).at(pos));
    return family_name(nc.family) + "_{" + std::to_string(nc.k) + "," + std::to_string(m_ - nc.period) + "}";
}

std::string Calculus::homology_to_string(const Class& c) const {
    std::string out;
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
        if (sgn(c.coeffs[i]) == 0) continue;
        out += coefficient_prefix(c.coeffs[i], out.empty()) + homology_name(c.index, i);
    }
    return out.empty() ? "0" : out;
}

Class Calculus::to_cohomology(const Class& c) const {
    Class out = ring_->zero(top() - c.index);
    const auto& idx = homology_basis(c.index);
    for (std::size_t i = 0; i < idx.size(); ++i) out.coeffs[idx[i]] = c.coeffs.at(i);
    return out;
}

Class Calculus::from_cohomology(const Class& a) const {
    int j = top() - a.index;
    if (j < 0 || j > jmax_) throw std::out_of_range("Calculus: homology index out of range");
    Class out = homology_zero(j);
    const auto& idx = homology_basis(j);
    std::vector<char> used(a.coeffs.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        out.coeffs[i] = a.coeffs.at(idx[i]);
        used[idx[i]] = 1;
    }
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        if (!used[i] && sgn(a.coeffs[i]) != 0) throw ConsistencyError("Calculus: class outside the image of D");
    return out;
}

Class Calculus::contraction(const Class& eta, const Class& c) const {
    int j = c.index - eta.index;
    if (j < 0) return {j, {}};
    return from_cohomology(ring_->cup(eta, to_cohomology(c)));
}

void Calculus::solve_connes() {
    Class theta = ring_->element(Family::Theta, 0);
    connes_.assign(static_cast<std::size_t>(jmax_ + 1), Matrix());
    for (int j = 0; j < jmax_; ++j) {
        std::size_t src = homology_basis(j).size();
        std::size_t dst = homology_basis(j + 1).size();
        // iota_theta0 : HH_{j+1} -> HH_j, one column per basis element
        std::vector<Vector> iota_cols;
        for (std::size_t q = 0; q < dst; ++q) {
            Class y = homology_zero(j + 1);
            y.coeffs[q] = 1;
            iota_cols.push_back(contraction(theta, y).coeffs);
        }
        Matrix bj(dst, src);
        for (std::size_t p = 0; p < src; ++p) {
            int d = homology_degree(j, p);
            Class x = homology_zero(j);
            x.coeffs[p] = 1;
            Class rhs = Rational(d) * x;
            if (j > 0) {
                Class ix = contraction(theta, x);
                rhs = rhs - connes(ix);
            }
            std::vector<std::size_t> cols;
            for (std::size_t q = 0; q < dst; ++q)
                if (homology_degree(j + 1, q) == d) cols.push_back(q);
            if (cols.empty()) {
                if (!rhs.is_zero()) connes_solvable_ = false;
                continue;
            }
            std::vector<Vector> mcols;
            for (auto q : cols) mcols.push_back(iota_cols[q]);
            Matrix mat = Matrix::from_columns(mcols, src);
            if (rank(mat) != cols.size()) connes_unique_ = false;
            auto sol = solve_particular(mat, rhs.coeffs);
            if (!sol) {
                connes_solvable_ = false;
                continue;
            }
            for (std::size_t k = 0; k < cols.size(); ++k) bj(cols[k], p) = (*sol)[k];
        }
        connes_[static_cast<std::size_t>(j)] = std::move(bj);
    }
}

Class Calculus::connes(const Class& c) const {
    if (c.index >= jmax_) throw std::out_of_range("Calculus::connes: index beyond the solved range");
    const Matrix& b = connes_.at(static_cast<std::size_t>(c.index));
    return {c.index + 1, b * c.coeffs};
}

std::map<int, std::size_t> Calculus::connes_rank(int j) const {
    std::map<int, std::size_t> out;
    const Matrix& b = connes_.at(static_cast<std::size_t>(j));
    std::map<int, std::vector<std::size_t>> src, dst;
    for (std::size_t p = 0; p < homology_basis(j).size(); ++p) src[homology_degree(j, p)].push_back(p);
    for (std::size_t q = 0; q < homology_basis(j + 1).size(); ++q) dst[homology_degree(j + 1, q)].push_back(q);
    for (const auto& [d, ps] : src) {
        auto it = dst.find(d);
        if (it == dst.end()) continue;
        Matrix blk(it->second.size(), ps.size());
        for (std::size_t r = 0; r < it->second.size(); ++r)
            for (std::size_t c = 0; c < ps.size(); ++c) blk(r, c) = b(it->second[r], ps[c]);
        auto rk = rank(blk);
        if (rk) out[d] = rk;
    }
    return out;
}

Class Calculus::delta(const Class& a) const {
    if (a.index == 0) return {-1, {}};
    return to_cohomology(connes(from_cohomology(a)));
}

namespace {

bool valid(const Class& c) { return c.index >= 0; }

}  // namespace

Class Calculus::bv_bracket(const Class& a, const Class& b) const {
    int idx = a.index + b.index - 1;
    if (idx < 0) return {idx, {}};
    Class out = delta(ring_->cup(a, b));
    Class da = delta(a);
    if (valid(da)) out = out - ring_->cup(da, b);
    Class db = delta(b);
    if (valid(db)) {
        Class t = ring_->cup(a, db);
        out = a.index % 2 ? out + t : out - t;
    }
    return out;
}

Class Calculus::derivation_action(const Class& x, const Class& z) const {
    if (x.index != 1 || z.index != 0) throw std::invalid_argument("derivation_action: expects HH^1 and HH^0");
    const auto& res = ring_->resolution();
    const auto& alg = res.algebra();
    Cochain dx = ring_->cochain(x);
    Cochain cz = ring_->cochain(z);
    std::vector<AlgElement> on_arrow(static_cast<std::size_t>(alg.quiver().num_arrows()));
    for (int g = 0; g < res.num_generators(1); ++g)
        on_arrow.at(static_cast<std::size_t>(res.generator(1, g).label)) = dx.values.at(static_cast<std::size_t>(g));
    AlgElement central;
    for (const auto& v : cz.values) axpy(central, Rational(1), v);
    // Leibniz rule along each path
    AlgElement image;
    for (const auto& [i, c] : central) {
        const auto& word = alg.basis(i).word;
        for (std::size_t p = 0; p < word.size(); ++p) {
            AlgElement term = p == 0 ? alg.idempotent(alg.basis(i).left)
                                     : alg.path(std::vector<int>(word.begin(), word.begin() + static_cast<long>(p)));
            term = alg.multiply(term, on_arrow.at(static_cast<std::size_t>(word[p])));
            if (p + 1 < word.size())
                term = alg.multiply(term, alg.path(std::vector<int>(word.begin() + static_cast<long>(p) + 1, word.end())));
            axpy(image, c, term);
        }
    }
    Cochain out{0, std::vector<AlgElement>(static_cast<std::size_t>(res.num_generators(0)))};
    for (int g = 0; g < res.num_generators(0); ++g) {
        AlgElement e = alg.idempotent(res.generator(0, g).label);
        out.values[static_cast<std::size_t>(g)] = alg.multiply(alg.multiply(e, image), e);
    }
    return ring_->expand(out);
}

Class Calculus::bracket(const Class& a, const Class& b) const {
    if (a.index == 1 && b.index == 0) return derivation_action(a, b);
    if (a.index == 0 && b.index == 1) return derivation_action(b, a);
    return bv_bracket(a, b);
}

Class Calculus::graded_bracket(const Class& a, const Class& b) const {
    Class out = bracket(a, b);
    if (valid(out) && a.index % 2 == 0) out = Rational(-1) * out;
    return out;
}

Class Calculus::lie(const Class& a, const Class& c) const {
    int idx = c.index - a.index + 1;
    if (idx < 0) return {idx, {}};
    Class out = homology_zero(idx);
    Class ic = contraction(a, c);
    if (valid(ic)) out = out + connes(ic);
    Class bc = connes(c);
    Class ib = contraction(a, bc);
    if (valid(ib)) out = a.index % 2 ? out + ib : out - ib;
    return out;
}

// ---------------------------------------------------------------- cyclic homology

CyclicReport cyclic_homology(const Calculus& calc, int max_index) {
    CyclicReport rep;
    int n = calc.ring().resolution().algebra().num_vertices();
    rep.b_squared_zero = true;
    rep.connes_exact = true;
    for (int i = 0; i <= max_index; ++i) {
        auto r = calc.connes_rank(i);
        if (i == 0) r[0] += static_cast<std::size_t>(n);
        for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
        rep.hc.push_back(r);
    }
    for (int i = 0; i + 1 <= max_index; ++i) {
        for (std::size_t p = 0; p < calc.homology_basis(i).size(); ++p) {
            Class x = calc.homology_zero(i);
            x.coeffs[p] = 1;
            if (!calc.connes(calc.connes(x)).is_zero()) rep.b_squared_zero = false;
        }
        auto r0 = calc.connes_rank(i);
        auto r1 = calc.connes_rank(i + 1);
        std::map<int, std::size_t> dims;
        for (std::size_t q = 0; q < calc.homology_basis(i + 1).size(); ++q) ++dims[calc.homology_degree(i + 1, q)];
        for (const auto& [d, k] : dims) {
            std::size_t a = r0.count(d) ? r0.at(d) : 0;
            std::size_t b = r1.count(d) ? r1.at(d) : 0;
            if (a + b != k) rep.connes_exact = false;
        }
    }
    return rep;
}

nlohmann::json CyclicReport::to_json() const {
    auto arr = nlohmann::json::array();
    for (const auto& d : hc) arr.push_back(dims_json(d));
    return {{"hc", arr}, {"b_squared_zero", b_squared_zero}, {"connes_exact", connes_exact}};
}

}  // namespace preproj
