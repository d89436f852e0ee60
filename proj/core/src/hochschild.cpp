#include "preproj/hochschild.hpp"

#include "preproj/parallel.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace preproj {

namespace {

AlgElement times(const GradedAlgebra& alg, const AlgElement& x, const AlgElement& y, const AlgElement& z) {
    return alg.multiply(alg.multiply(x, y), z);
}

AlgElement basis_elt(int i) { return {{i, 1}}; }

// Splits values by the internal degree of each component.
std::map<int, std::vector<AlgElement>> split_by_degree(const HochschildComplex& c, int j, const std::vector<AlgElement>& values) {
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

}  // namespace

HochschildComplex::HochschildComplex(const Resolution& res, Variance variance) : res_(&res), variance_(variance) {
    const auto& alg = res.algebra();
    int mx = res.max_index();
    spaces_.resize(static_cast<std::size_t>(mx + 1));
    positions_.resize(static_cast<std::size_t>(mx + 1));
    for (int j = 0; j <= mx; ++j) {
        auto& sp = spaces_[static_cast<std::size_t>(j)];
        for (int g = 0; g < res.num_generators(j); ++g) {
            const auto& gen = res.generator(j, g);
            int l = variance == Variance::Cochain ? gen.source : gen.target;
            int r = variance == Variance::Cochain ? gen.target : gen.source;
            for (int x : alg.with_left(l)) {
                if (alg.right(x) != r) continue;
                int d = variance == Variance::Cochain ? alg.degree(x) - gen.degree : alg.degree(x) + gen.degree;
                sp[d].push_back({g, x});
            }
        }
        auto& pos = positions_[static_cast<std::size_t>(j)];
        for (const auto& [d, coords] : sp)
            for (std::size_t i = 0; i < coords.size(); ++i) pos[d][{coords[i].generator, coords[i].element}] = i;
    }
}

std::vector<int> HochschildComplex::degrees(int j) const {
    std::vector<int> out;
    for (const auto& [d, c] : spaces_.at(static_cast<std::size_t>(j))) out.push_back(d);
    return out;
}

const std::vector<Coord>& HochschildComplex::basis(int j, int degree) const {
    static const std::vector<Coord> empty;
    const auto& sp = spaces_.at(static_cast<std::size_t>(j));
    auto it = sp.find(degree);
    return it == sp.end() ? empty : it->second;
}

std::size_t HochschildComplex::total_dim(int j) const {
    std::size_t n = 0;
    for (const auto& [d, c] : spaces_.at(static_cast<std::size_t>(j))) n += c.size();
    return n;
}

Vector HochschildComplex::to_vector(int j, int degree, const std::vector<AlgElement>& values) const {
    const auto& b = basis(j, degree);
    Vector v(b.size());
    const auto& pos_all = positions_.at(static_cast<std::size_t>(j));
    auto it = pos_all.find(degree);
    for (std::size_t g = 0; g < values.size(); ++g)
        for (const auto& [x, c] : values[g]) {
            if (it == pos_all.end()) throw DimensionError("to_vector: component outside the requested degree");
            auto p = it->second.find({static_cast<int>(g), x});
            if (p == it->second.end()) throw DimensionError("to_vector: component outside the requested degree");
            v[p->second] = c;
        }
    return v;
}

std::vector<AlgElement> HochschildComplex::from_vector(int j, int degree, const Vector& v) const {
    std::vector<AlgElement> out(static_cast<std::size_t>(res_->num_generators(j)));
    const auto& b = basis(j, degree);
    if (v.size() != b.size()) throw DimensionError("from_vector: size mismatch");
    for (std::size_t i = 0; i < b.size(); ++i)
        if (sgn(v[i]) != 0) out[static_cast<std::size_t>(b[i].generator)][b[i].element] = v[i];
    return out;
}

std::vector<AlgElement> HochschildComplex::apply(int j, const std::vector<AlgElement>& values) const {
    const auto& alg = res_->algebra();
    if (j < 1 || j > max_index()) throw std::out_of_range("HochschildComplex::apply: index out of range");
    if (variance_ == Variance::Cochain) {
        std::vector<AlgElement> out(static_cast<std::size_t>(res_->num_generators(j)));
        for (int g = 0; g < res_->num_generators(j); ++g)
            for (const auto& [key, c] : res_->image(j, g)) {
                auto [l, g2, r] = key;
                const auto& f = values.at(static_cast<std::size_t>(g2));
                if (f.empty()) continue;
                axpy(out[static_cast<std::size_t>(g)], c, times(alg, basis_elt(l), f, basis_elt(r)));
            }
        return out;
    }
    std::vector<AlgElement> out(static_cast<std::size_t>(res_->num_generators(j - 1)));
    for (int g = 0; g < res_->num_generators(j); ++g) {
        const auto& w = values.at(static_cast<std::size_t>(g));
        if (w.empty()) continue;
        for (const auto& [key, c] : res_->image(j, g)) {
            auto [l, g2, r] = key;
            axpy(out[static_cast<std::size_t>(g2)], c, times(alg, basis_elt(r), w, basis_elt(l)));
        }
    }
    return out;
}

std::optional<int> HochschildComplex::degree_of(int j, const std::vector<AlgElement>& values) const {
    auto parts = split_by_degree(*this, j, values);
    if (parts.size() != 1) return std::nullopt;
    return parts.begin()->first;
}

const Matrix& HochschildComplex::differential(int j, int degree) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find({j, degree});
        if (it != cache_.end()) return *it->second;
    }
    if (j < 1 || j > max_index()) throw std::out_of_range("differential: index out of range");
    int src = variance_ == Variance::Cochain ? j - 1 : j;
    int dst = variance_ == Variance::Cochain ? j : j - 1;
    const auto& from = basis(src, degree);
    const auto& to = basis(dst, degree);
    auto m = std::make_shared<Matrix>(to.size(), from.size());
    for (std::size_t c = 0; c < from.size(); ++c) {
        std::vector<AlgElement> vals(static_cast<std::size_t>(res_->num_generators(src)));
        vals[static_cast<std::size_t>(from[c].generator)] = basis_elt(from[c].element);
        Vector col = to_vector(dst, degree, apply(j, vals));
        for (std::size_t r = 0; r < to.size(); ++r) (*m)(r, c) = col[r];
    }
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = cache_.emplace(std::make_pair(j, degree), std::move(m));
    return *it->second;
}

HomologyGroups::HomologyGroups(const HochschildComplex& c) : c_(&c), max_(c.max_index()) {
    bool co = c.variance() == Variance::Cochain;
    std::vector<std::pair<int, int>> keys;
    for (int j = 0; j < max_; ++j)
        for (int d : c.degrees(j)) keys.emplace_back(j, d);
    std::vector<HomologyPiece> built(keys.size());
    parallel_for(keys.size(), [&](std::size_t i) {
        auto [j, d] = keys[i];
        HomologyPiece p;
        p.index = j;
        p.degree = d;
        p.space = c.dim(j, d);
        if (co) {
            p.outgoing = c.differential(j + 1, d);
        } else {
            p.outgoing = j >= 1 ? c.differential(j, d) : Matrix(0, p.space);
        }
        std::vector<Vector> cycles = kernel_basis(p.outgoing);
        if (co) {
            if (j >= 1) p.boundaries = image_basis(c.differential(j, d));
        } else {
            p.boundaries = image_basis(c.differential(j + 1, d));
        }
        RowSpace rs(p.space);
        for (const auto& b : p.boundaries) rs.add(to_sparse(b));
        for (const auto& z : cycles)
            if (rs.add(to_sparse(z))) p.representatives.push_back(z);
        built[i] = std::move(p);
    });
    for (std::size_t i = 0; i < keys.size(); ++i) {
        rebuild_solver(built[i]);
        pieces_.emplace(keys[i], std::move(built[i]));
    }
}

void HomologyGroups::rebuild_solver(HomologyPiece& p) {
    std::vector<Vector> cols = p.representatives;
    cols.insert(cols.end(), p.boundaries.begin(), p.boundaries.end());
    p.solver = LinearSolver(Matrix::from_columns(cols, p.space));
}

const HomologyPiece* HomologyGroups::piece(int j, int degree) const {
    auto it = pieces_.find({j, degree});
    return it == pieces_.end() ? nullptr : &it->second;
}

std::size_t HomologyGroups::dim(int j, int degree) const {
    auto p = piece(j, degree);
    return p ? p->representatives.size() : 0;
}

std::map<int, std::size_t> HomologyGroups::dims(int j) const {
    std::map<int, std::size_t> out;
    for (int d : c_->degrees(j)) {
        std::size_t k = dim(j, d);
        if (k) out[d] = k;
    }
    return out;
}

std::size_t HomologyGroups::total_dim(int j) const {
    std::size_t n = 0;
    for (const auto& [d, k] : dims(j)) n += k;
    return n;
}

bool HomologyGroups::is_closed(int j, int degree, const Vector& v) const {
    auto p = piece(j, degree);
    if (!p) return is_zero(v);
    return is_zero(p->outgoing * v);
}

std::optional<Vector> HomologyGroups::coordinates(int j, int degree, const Vector& v) const {
    auto p = piece(j, degree);
    if (!p) {
        if (!is_zero(v)) return std::nullopt;
        return Vector{};
    }
    if (!is_zero(p->outgoing * v)) return std::nullopt;
    auto x = p->solver.solve(v);
    if (!x) throw ConsistencyError("homology coordinates: closed element outside the span");
    return Vector(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(p->representatives.size()));
}

void HomologyGroups::set_basis(int j, int degree, const std::vector<Vector>& reps) {
    auto it = pieces_.find({j, degree});
    if (it == pieces_.end()) {
        if (!reps.empty()) throw ConsistencyError("set_basis: empty space");
        return;
    }
    auto& p = it->second;
    if (reps.size() != p.representatives.size()) throw ConsistencyError("set_basis: wrong number of representatives");
    RowSpace rs(p.space);
    for (const auto& b : p.boundaries) rs.add(to_sparse(b));
    for (const auto& r : reps) {
        if (!is_zero(p.outgoing * r)) throw ConsistencyError("set_basis: representative is not closed");
        if (!rs.add(to_sparse(r))) throw ConsistencyError("set_basis: representatives are dependent modulo boundaries");
    }
    p.representatives = reps;
    rebuild_solver(p);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Z: return "z";
        case Family::Omega: return "omega";
        case Family::Theta: return "theta";
        case Family::F: return "f";
        case Family::H: return "h";
        case Family::Zeta: return "zeta";
        case Family::Psi: return "psi";
    }
    return "?";
}

std::string NamedCocycle::name() const {
    std::string s = family_name(family) + "_" + std::to_string(k);
    if (period) s += "^(" + std::to_string(period) + ")";
    return s;
}

int cohomology_family_index(Family f) {
    switch (f) {
        case Family::Z:
        case Family::Omega: return 0;
        case Family::Theta: return 1;
        case Family::F: return 2;
        case Family::H: return 3;
        case Family::Zeta: return 4;
        case Family::Psi: return 5;
    }
    return -1;
}

std::vector<int> family_labels(const GradedAlgebra& alg, Family f) {
    std::vector<int> out;
    int h = alg.coxeter_number();
    if (f == Family::Omega || f == Family::F || f == Family::H) {
        int count = alg.kind() == QuiverKind::TypeA && f != Family::Omega ? alg.num_vertices() / 2 : alg.num_vertices();
        for (int i = 1; i <= count; ++i) out.push_back(i);
    } else {
        for (int k = 0; k <= h - 3; k += 2) out.push_back(k);
    }
    return out;
}

NamedCocycle named_cocycle(const Resolution& res, Family f, int k, int period) {
    const auto& alg = res.algebra();
    const auto& fd = res.frobenius_data();
    if (alg.kind() != QuiverKind::TypeT && !(f == Family::F || f == Family::H || (f == Family::Theta && k == 0)))
        throw std::invalid_argument("only theta_0, f_i and h_i are named for type A");
    int h = alg.coxeter_number();
    int n = alg.num_vertices();
    int j = cohomology_family_index(f) + 6 * period;
    if (j > res.max_index()) throw std::out_of_range("named_cocycle: resolution too short");
    NamedCocycle c;
    c.family = f;
    c.k = k;
    c.period = period;
    c.cochain.index = j;
    c.cochain.values.resize(static_cast<std::size_t>(res.num_generators(j)));
    auto& vals = c.cochain.values;
    const auto& q = alg.quiver();
    switch (f) {
        case Family::Z: {
            AlgElement z = center_element(alg, k / 2);
            if (z.empty()) break;
            for (const auto& [x, coef] : z) vals[static_cast<std::size_t>(alg.left(x))][x] = coef;
            break;
        }
        case Family::Omega: vals[static_cast<std::size_t>(k - 1)] = fd.omega[static_cast<std::size_t>(k - 1)]; break;
        case Family::Theta: {
            AlgElement z = k == 0 ? alg.unit() : center_element(alg, k / 2);
            for (int a = 0; a < q.num_arrows(); ++a) vals[static_cast<std::size_t>(a)] = alg.multiply(alg.arrow(a), z);
            break;
        }
        case Family::F:
            vals[static_cast<std::size_t>(k - 1)] = alg.idempotent(k - 1);
            if (alg.kind() == QuiverKind::TypeA) {
                int partner = fd.nakayama_vertex[static_cast<std::size_t>(k - 1)];
                axpy(vals[static_cast<std::size_t>(partner)], -1, alg.idempotent(partner));
            }
            break;
        case Family::H:
            vals[static_cast<std::size_t>(k - 1)] = fd.omega[static_cast<std::size_t>(k - 1)];
            if (alg.kind() == QuiverKind::TypeA) {
                int partner = fd.nakayama_vertex[static_cast<std::size_t>(k - 1)];
                axpy(vals[static_cast<std::size_t>(partner)], -1, fd.omega[static_cast<std::size_t>(partner)]);
            }
            break;
        case Family::Zeta: vals[static_cast<std::size_t>(*q.loop_arrow())] = scaled(alg.loop_power(h - 3 - k), -1); break;
        case Family::Psi: vals[static_cast<std::size_t>(*q.base().loop_vertex())] = alg.loop_power(h - 2 - k); break;
    }
    (void)n;
    auto d = cochain_degree(res, c.cochain);
    if (!d) throw ConsistencyError("named cocycle " + c.name() + " is zero or inhomogeneous");
    c.degree = *d;
    return c;
}

std::vector<NamedCocycle> named_basis(const Resolution& res, int j) {
    const auto& alg = res.algebra();
    int s = j / 6;
    int i = j % 6;
    static const Family by_index[6] = {Family::Z, Family::Theta, Family::F, Family::H, Family::Zeta, Family::Psi};
    std::vector<NamedCocycle> out;
    for (int k : family_labels(alg, by_index[i])) out.push_back(named_cocycle(res, by_index[i], k, s));
    if (j == 0)
        for (int k : family_labels(alg, Family::Omega)) out.push_back(named_cocycle(res, Family::Omega, k, 0));
    return out;
}

NamedCohomology::NamedCohomology(const HomologyGroups& hh, int max_index) : hh_(&hh) {
    const auto& c = hh.complex();
    int top = std::min(max_index, hh.max_index() - 1);
    for (int j = 0; j <= top; ++j) {
        bases_.push_back(named_basis(c.resolution(), j));
        std::map<int, std::vector<Vector>> by_degree;
        for (const auto& nc : bases_.back()) {
            Vector v = c.to_vector(j, nc.degree, nc.cochain.values);
            if (!hh.is_closed(j, nc.degree, v)) failures_.push_back(nc.name() + " is not a cocycle");
            by_degree[nc.degree].push_back(std::move(v));
        }
        for (const auto& [d, k] : hh.dims(j))
            if (!by_degree.count(d)) failures_.push_back("HH^" + std::to_string(j) + " degree " + std::to_string(d) + " has no named class");
        for (const auto& [d, vs] : by_degree) {
            auto p = hh.piece(j, d);
            if (!p || vs.size() != p->representatives.size()) {
                failures_.push_back("HH^" + std::to_string(j) + " degree " + std::to_string(d) + ": named count differs from dimension");
                continue;
            }
            RowSpace rs(p->space);
            for (const auto& b : p->boundaries) rs.add(to_sparse(b));
            for (const auto& v : vs)
                if (!rs.add(to_sparse(v))) {
                    failures_.push_back("HH^" + std::to_string(j) + " degree " + std::to_string(d) + ": named classes are dependent");
                    break;
                }
        }
    }
}

std::vector<Rational> NamedCohomology::expand(const Cochain& c) const {
    const auto& cx = hh_->complex();
    int j = c.index;
    const auto& b = basis(j);
    std::vector<Rational> out(b.size());
    for (const auto& [d, vals] : split_by_degree(cx, j, c.values)) {
        Vector v = cx.to_vector(j, d, vals);
        auto p = hh_->piece(j, d);
        if (!hh_->is_closed(j, d, v)) throw ConsistencyError("expand: not a cocycle");
        if (!p || p->representatives.empty()) continue;
        std::vector<std::size_t> idx;
        std::vector<Vector> cols;
        for (std::size_t i = 0; i < b.size(); ++i)
            if (b[i].degree == d) {
                idx.push_back(i);
                cols.push_back(cx.to_vector(j, d, b[i].cochain.values));
            }
        cols.insert(cols.end(), p->boundaries.begin(), p->boundaries.end());
        auto x = LinearSolver(Matrix::from_columns(cols, p->space)).solve(v);
        if (!x) throw ConsistencyError("expand: class outside the named span");
        for (std::size_t k = 0; k < idx.size(); ++k) out[idx[k]] = (*x)[k];
    }
    return out;
}

Cochain NamedCohomology::combination(int j, const std::vector<Rational>& coeffs) const {
    const auto& b = basis(j);
    Cochain out{j, std::vector<AlgElement>(static_cast<std::size_t>(hh_->complex().resolution().num_generators(j)))};
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (sgn(coeffs.at(i)) == 0) continue;
        for (std::size_t g = 0; g < out.values.size(); ++g) axpy(out.values[g], coeffs[i], b[i].cochain.values[g]);
    }
    return out;
}

std::map<int, std::size_t> expected_cohomology(int n, int j) {
    int h = 2 * n + 1;
    std::map<int, std::size_t> out;
    if (j == 0) {
        for (int i = 0; i < n; ++i) out[2 * i] += 1;
        out[h - 2] += static_cast<std::size_t>(n);
        return out;
    }
    int s = (j - 1) / 6;
    int i = (j - 1) % 6 + 1;
    int shift = -2 * s * h;
    for (int k = 0; k < n; ++k) {
        switch (i) {
            case 1: out[2 * k + shift] += 1; break;
            case 4:
            case 5: out[-4 - 2 * k + shift] += 1; break;
            case 6: out[2 * k - 2 * h + shift] += 1; break;
            default: out[-2 + shift] += 1; break;
        }
    }
    return out;
}

std::map<int, std::size_t> expected_homology(int n, int j) {
    int h = 2 * n + 1;
    std::map<int, std::size_t> out;
    if (j == 0) {
        out[0] += static_cast<std::size_t>(n);
        for (int i = 0; i < n; ++i) out[2 * i + 1] += 1;
        return out;
    }
    int s = (j - 1) / 6;
    int i = (j - 1) % 6 + 1;
    int shift = 2 * s * h;
    for (int k = 0; k < n; ++k) {
        switch (i) {
            case 1: out[2 * k + 1 + shift] += 1; break;
            case 4:
            case 5: out[h + 2 + 2 * k + shift] += 1; break;
            case 6: out[2 * h + 2 * k + 1 + shift] += 1; break;
            default: out[h + shift] += 1; break;
        }
    }
    return out;
}

std::map<int, std::size_t> reduced(const std::map<int, std::size_t>& dims, int j) {
    if (j != 0) return dims;
    auto out = dims;
    out.erase(0);
    return out;
}

nlohmann::json dims_json(const std::map<int, std::size_t>& dims) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& [d, k] : dims) a.push_back({d, k});
    return a;
}

namespace {

using Values = std::vector<AlgElement>;

AlgElement total(const Values& v) {
    AlgElement s;
    for (const auto& x : v) axpy(s, 1, x);
    return s;
}

// Splits y into its components e_v y e_{T(v)} at the vertex generators.
Values at_vertices(const GradedAlgebra& alg, const AlgElement& y) {
    Values out(static_cast<std::size_t>(alg.num_vertices()));
    for (const auto& [x, c] : y) out[static_cast<std::size_t>(alg.left(x))][x] += c;
    for (auto& v : out)
        for (auto it = v.begin(); it != v.end();) it = sgn(it->second) == 0 ? v.erase(it) : std::next(it);
    return out;
}

Values commutator_with_arrows(const GradedAlgebra& alg, const AlgElement& x, const LinearEndo* twist) {
    Values out;
    for (int a = 0; a < alg.quiver().num_arrows(); ++a) {
        AlgElement arr = alg.arrow(a);
        AlgElement right = twist ? twist->apply(arr) : arr;
        out.push_back(alg.multiply(arr, x) - alg.multiply(x, right));
    }
    return out;
}

// sum over non-loop c of eps_{c*} (c* x_c - x_c T(c*)) + loop_sign (b x_b + x_b T(b)).
AlgElement relation_contraction(const GradedAlgebra& alg, const Values& f, const LinearEndo* twist, int loop_sign) {
    const auto& q = alg.quiver();
    AlgElement y;
    for (const auto& c : q.arrows()) {
        const auto& x = f[static_cast<std::size_t>(c.id)];
        if (x.empty()) continue;
        if (c.loop) {
            AlgElement b = alg.arrow(c.id);
            AlgElement tb = twist ? twist->apply(b) : b;
            axpy(y, loop_sign, alg.multiply(b, x) + alg.multiply(x, tb));
            continue;
        }
        const auto& star = q.arrow(c.star);
        AlgElement cs = alg.arrow(star.id);
        AlgElement tcs = twist ? twist->apply(cs) : cs;
        axpy(y, star.eps, alg.multiply(cs, x) - alg.multiply(x, tcs));
    }
    return y;
}

AlgElement casimir(const GradedAlgebra& alg, const FrobeniusData& fd, const AlgElement& x, const LinearEndo* left, const LinearEndo* right) {
    AlgElement y;
    for (int i = 0; i < alg.dim(); ++i) {
        AlgElement xi = basis_elt(i);
        AlgElement l = left ? left->apply(xi) : xi;
        AlgElement r = right ? right->apply(fd.dual[static_cast<std::size_t>(i)]) : fd.dual[static_cast<std::size_t>(i)];
        axpy(y, 1, times(alg, l, x, r));
    }
    return y;
}

bool same(const Values& a, const Values& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

}  // namespace

ClosedFormReport check_closed_forms(const HochschildComplex& cx, const Automorphisms& au) {
    ClosedFormReport rep;
    const auto& res = cx.resolution();
    const auto& alg = res.algebra();
    const auto& fd = res.frobenius_data();
    if (alg.kind() != QuiverKind::TypeT || cx.variance() != Variance::Cochain || res.max_index() < 6) return rep;
    const LinearEndo* phi = &au.phi;

    auto closed = [&](int j, const Values& f) -> Values {
        switch (j) {
            case 1: return commutator_with_arrows(alg, total(f), nullptr);
            case 2: return at_vertices(alg, relation_contraction(alg, f, nullptr, -1));
            case 3: return at_vertices(alg, casimir(alg, fd, total(f), phi, nullptr));
            case 4: return commutator_with_arrows(alg, total(f), phi);
            case 5: return at_vertices(alg, relation_contraction(alg, f, phi, -1));
            default: return at_vertices(alg, casimir(alg, fd, total(f), phi, phi));
        }
    };
    bool* flags[6] = {&rep.d1, &rep.d2, &rep.d3, &rep.d4, &rep.d5, &rep.d6};
    for (int j = 1; j <= 6; ++j) {
        bool ok = true;
        for (int d : cx.degrees(j - 1)) {
            const auto& b = cx.basis(j - 1, d);
            for (std::size_t i = 0; i < b.size() && ok; ++i) {
                Values f(static_cast<std::size_t>(res.num_generators(j - 1)));
                f[static_cast<std::size_t>(b[i].generator)] = basis_elt(b[i].element);
                Values want = closed(j, f);
                want.resize(static_cast<std::size_t>(res.num_generators(j)));
                ok = same(cx.apply(j, f), want);
            }
        }
        *flags[j - 1] = ok;
    }

    rep.d3_zero = true;
    for (int d : cx.degrees(2))
        if (!cx.differential(3, d).is_zero()) rep.d3_zero = false;

    const auto& H = alg.hilbert();
    int n = alg.num_vertices();
    rep.hilbert_minus_one_zero = true;
    Matrix h1(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            long alt = 0, sum = 0;
            const auto& series = H[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            for (std::size_t d = 0; d < series.size(); ++d) {
                alt += (d % 2 ? -1 : 1) * series[d];
                sum += series[d];
            }
            if (alt != 0) rep.hilbert_minus_one_zero = false;
            h1(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) = sum;
        }

    Matrix block(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Values f(static_cast<std::size_t>(res.num_generators(5)));
        f[static_cast<std::size_t>(i)] = alg.idempotent(i);
        Values img = cx.apply(6, f);
        for (int k = 0; k < n; ++k) block(static_cast<std::size_t>(k), static_cast<std::size_t>(i)) = fd.trace_of(img[static_cast<std::size_t>(k)]);
    }
    rep.d6_vertex_block = block == h1.scaled(-1);
    rep.d6_nondegenerate = rank(block) == static_cast<std::size_t>(n);

    return rep;
}

nlohmann::json ClosedFormReport::to_json() const {
    return {{"d1", d1},
            {"d2", d2},
            {"d3", d3},
            {"d4", d4},
            {"d5", d5},
            {"d6", d6},
            {"d3_zero", d3_zero},
            {"hilbert_at_minus_one_zero", hilbert_minus_one_zero},
            {"d6_vertex_block", d6_vertex_block},
            {"d6_nondegenerate", d6_nondegenerate}};
}

namespace {

using DimTable = std::map<int, std::size_t>;

// Shifts s with a(d) = b(s + sign * d) for all d.
std::vector<int> matching_shifts(const DimTable& a, const DimTable& b, int sign, int range) {
    std::vector<int> out;
    if (a.empty() && b.empty()) return out;
    for (int s = -range; s <= range; ++s) {
        DimTable moved;
        for (const auto& [d, k] : a) moved[s + sign * d] = k;
        if (moved == b) out.push_back(s);
    }
    return out;
}

}  // namespace

CohomologyReport cohomology_report(const HomologyGroups& coh, const HomologyGroups& hom, const NamedCohomology* named,
                                   const ClosedFormReport* closed, const std::vector<AlgElement>& center) {
    CohomologyReport rep;
    const auto& res = coh.complex().resolution();
    const auto& alg = res.algebra();
    rep.n = alg.num_vertices();
    rep.h = alg.coxeter_number();
    int h = rep.h;
    int top = std::min(coh.max_index(), hom.max_index()) - 1;
    for (int j = 0; j <= top; ++j) {
        rep.cohomology.push_back(coh.dims(j));
        rep.homology.push_back(hom.dims(j));
        rep.cohomology_matches.push_back(rep.cohomology.back() == expected_cohomology(rep.n, j));
        rep.homology_matches.push_back(rep.homology.back() == expected_homology(rep.n, j));
        if (!rep.cohomology_matches.back()) rep.failures.push_back("HH^" + std::to_string(j) + " differs from the predicted table");
        if (!rep.homology_matches.back()) rep.failures.push_back("HH_" + std::to_string(j) + " differs from the predicted table");
    }
    auto CO = [&](int j) { return j == 0 ? [&] { auto t = rep.cohomology[0]; t.erase(h - 2); return t; }() : rep.cohomology.at(static_cast<std::size_t>(j)); };
    auto HO = [&](int j) { return reduced(rep.homology.at(static_cast<std::size_t>(j)), j); };
    int range = 8 * h;
    auto add = [&](std::string name, const DimTable& a, const DimTable& b, int sign, int expected) {
        DualityCheck d;
        d.name = std::move(name);
        d.expected_shift = expected;
        d.discovered_shifts = matching_shifts(a, b, sign, range);
        d.holds = std::find(d.discovered_shifts.begin(), d.discovered_shifts.end(), expected) != d.discovered_shifts.end();
        if (!d.holds) rep.failures.push_back("duality " + d.name + " fails");
        rep.dualities.push_back(std::move(d));
    };
    if (top >= 5) {
        for (int i = 0; i <= 5; ++i)
            add("HH^" + std::to_string(i) + "(d) = HH^" + std::to_string(5 - i) + "(-4-d)", CO(i), CO(5 - i), -1, -4);
        for (int i = 1; i <= 5; ++i)
            add("HH^" + std::to_string(i) + "(d) = HH_" + std::to_string(5 - i) + "(d+h+2)", CO(i), HO(5 - i), 1, h + 2);
        for (int i = 0; i <= 5; ++i)
            add("HH_" + std::to_string(i) + "(d) = HH_" + std::to_string(5 - i) + "(2h-d)", HO(i), HO(5 - i), -1, 2 * h);
    }
    rep.periodic = true;
    for (int j = 1; j + 6 <= top; ++j) {
        DimTable a = rep.cohomology[static_cast<std::size_t>(j + 6)], b = rep.cohomology[static_cast<std::size_t>(j)];
        DimTable moved;
        for (const auto& [d, k] : a) moved[d + 2 * h] = k;
        if (moved != b) rep.periodic = false;
        a = rep.homology[static_cast<std::size_t>(j + 6)];
        b = rep.homology[static_cast<std::size_t>(j)];
        moved.clear();
        for (const auto& [d, k] : a) moved[d - 2 * h] = k;
        if (moved != b) rep.periodic = false;
    }
    if (!rep.periodic) rep.failures.push_back("period 6 shift fails");

    std::size_t n = static_cast<std::size_t>(rep.n);
    rep.x_zero = top >= 4 && coh.total_dim(1) == n && coh.total_dim(4) == n;
    rep.y_zero = top >= 5 && coh.total_dim(5) == n && closed && closed->d6_nondegenerate;
    if (!rep.x_zero) rep.failures.push_back("X is nonzero");
    if (!rep.y_zero) rep.failures.push_back("Y is nonzero");

    const auto& cx = coh.complex();
    std::map<int, std::vector<Vector>> by_degree;
    bool closed_ok = true;
    for (const auto& z : center) {
        Values vals(static_cast<std::size_t>(res.num_generators(0)));
        for (const auto& [x, c] : z) vals[static_cast<std::size_t>(alg.left(x))][x] = c;
        int d = alg.degree(z.begin()->first);
        Vector v = cx.to_vector(0, d, vals);
        if (!coh.is_closed(0, d, v)) closed_ok = false;
        by_degree[d].push_back(std::move(v));
    }
    rep.center_matches = closed_ok;
    DimTable cdims;
    for (const auto& [d, vs] : by_degree) cdims[d] = rank(Matrix::from_rows(vs, vs.front().size()));
    if (cdims != rep.cohomology.at(0)) rep.center_matches = false;
    if (!rep.center_matches) rep.failures.push_back("HH^0 differs from the center");

    rep.named_bases_ok = named && named->valid();
    if (named)
        for (const auto& f : named->failures()) rep.failures.push_back(f);
    return rep;
}

nlohmann::json CohomologyReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["h"] = h;
    j["cohomology"] = nlohmann::json::array();
    j["homology"] = nlohmann::json::array();
    for (std::size_t i = 0; i < cohomology.size(); ++i)
        j["cohomology"].push_back({{"index", i}, {"dims", dims_json(cohomology[i])}, {"matches", static_cast<bool>(cohomology_matches[i])}});
    for (std::size_t i = 0; i < homology.size(); ++i)
        j["homology"].push_back({{"index", i}, {"dims", dims_json(homology[i])}, {"matches", static_cast<bool>(homology_matches[i])}});
    j["dualities"] = nlohmann::json::array();
    for (const auto& d : dualities)
        j["dualities"].push_back({{"name", d.name}, {"expected_shift", d.expected_shift}, {"discovered_shifts", d.discovered_shifts}, {"holds", d.holds}});
    j["periodic"] = periodic;
    j["x_zero"] = x_zero;
    j["y_zero"] = y_zero;
    j["center_matches"] = center_matches;
    j["named_bases_ok"] = named_bases_ok;
    j["failures"] = failures;
    return j;
}

}  // namespace preproj
