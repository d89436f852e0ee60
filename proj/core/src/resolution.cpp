#include "preproj/resolution.hpp"

#include "preproj/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace preproj {

void axpy(BimoduleElement& acc, const Rational& c, const BimoduleElement& x) {
    if (sgn(c) == 0) return;
    for (const auto& [k, v] : x) {
        auto it = acc.find(k);
        if (it == acc.end()) {
            acc.emplace(k, c * v);
        } else {
            it->second += c * v;
            if (sgn(it->second) == 0) acc.erase(it);
        }
    }
}

namespace {

void add_tensor(BimoduleElement& out, const Rational& c, const AlgElement& left, int g, const AlgElement& right) {
    for (const auto& [l, x] : left)
        for (const auto& [r, y] : right) {
            Triple key{l, g, r};
            auto it = out.find(key);
            if (it == out.end()) {
                out.emplace(key, c * x * y);
            } else {
                it->second += c * x * y;
                if (sgn(it->second) == 0) out.erase(it);
            }
        }
}

}  // namespace

Resolution::Resolution(const GradedAlgebra& alg, const FrobeniusData& fd, int max_index)
    : alg_(&alg), fd_(&fd), max_index_(max_index) {
    if (max_index < 0) throw std::invalid_argument("Resolution: negative length");
    if (alg.kind() == QuiverKind::TypeT) {
        twist_ = automorphisms(alg).phi;
    } else {
        twist_.images = fd.nakayama;
    }
    int nv = alg.num_vertices();
    twist_vertex_.assign(static_cast<std::size_t>(nv), -1);
    for (int v = 0; v < nv; ++v) {
        AlgElement img = twist_.apply(alg.idempotent(v));
        if (img.size() != 1 || img.begin()->second != 1 || alg.degree(img.begin()->first) != 0)
            throw ConsistencyError("twist does not permute the idempotents");
        twist_vertex_[static_cast<std::size_t>(v)] = alg.left(img.begin()->first);
    }
    if (!is_identity(compose(twist_, twist_))) throw ConsistencyError("twist is not an involution");
    if (!is_multiplicative(alg, twist_)) throw ConsistencyError("twist is not multiplicative");
    build_terms();
    build_images();
}

int Resolution::twist_vertex(int v, int k) const {
    for (int i = 0; i < k; ++i) v = twist_vertex_[static_cast<std::size_t>(v)];
    return v;
}

LinearEndo Resolution::twist_power(int k) const {
    LinearEndo id;
    for (int i = 0; i < alg_->dim(); ++i) id.images.push_back({{i, 1}});
    return k % 2 ? twist_ : id;
}

void Resolution::build_terms() {
    const auto& q = alg_->quiver();
    int h = alg_->coxeter_number();
    for (int j = 0; j <= max_index_; ++j) {
        int k = j / 3;
        int r = j % 3;
        BimoduleTerm t;
        t.index = j;
        bool twisted = k % 2 == 1;
        t.shift = (r == 2 ? 2 : 0) + k * h;
        if (r == 1) {
            t.kind = twisted ? TermKind::TwistedOnArrows : TermKind::FreeOnArrows;
            for (const auto& a : q.arrows())
                t.generators.push_back({a.id, q.left(a.id), twist_vertex(q.right(a.id), k), 1 + k * h});
        } else {
            t.kind = twisted ? TermKind::TwistedOnVertices : TermKind::FreeOnVertices;
            for (int v = 0; v < alg_->num_vertices(); ++v) t.generators.push_back({v, v, twist_vertex(v, k), t.shift});
        }
        terms_.push_back(std::move(t));
    }

    blocks_.resize(terms_.size());
    for (int j = 0; j <= max_index_; ++j) {
        const auto& gens = terms_[static_cast<std::size_t>(j)].generators;
        for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
            const auto& gen = gens[static_cast<std::size_t>(g)];
            for (int l : alg_->with_right(gen.source))
                for (int r : alg_->with_left(gen.target)) {
                    int d = alg_->degree(l) + gen.degree + alg_->degree(r);
                    blocks_[static_cast<std::size_t>(j)][{alg_->left(l), alg_->right(r), d}].emplace_back(l, g, r);
                }
        }
    }
}

BimoduleElement Resolution::twisted_image(int j, int g) const {
    const auto& base = images_.at(static_cast<std::size_t>(j - 3)).at(static_cast<std::size_t>(g));
    BimoduleElement out;
    for (const auto& [key, c] : base) {
        auto [l, gg, r] = key;
        add_tensor(out, c, {{l, 1}}, gg, twist_.images[static_cast<std::size_t>(r)]);
    }
    return out;
}

void Resolution::build_images() {
    const auto& q = alg_->quiver();
    images_.assign(static_cast<std::size_t>(max_index_ + 1), {});
    for (int j = 1; j <= max_index_; ++j) {
        auto& imgs = images_[static_cast<std::size_t>(j)];
        int ng = num_generators(j);
        imgs.resize(static_cast<std::size_t>(ng));
        if (j > 3) {
            // Twisting twice is the identity, so d_{j+3k} only depends on the parity of k.
            for (int g = 0; g < ng; ++g) imgs[static_cast<std::size_t>(g)] = twisted_image(j, g);
            continue;
        }
        for (int g = 0; g < ng; ++g) {
            BimoduleElement& out = imgs[static_cast<std::size_t>(g)];
            if (j == 1) {
                int a = g;
                add_tensor(out, 1, alg_->arrow(a), q.right(a), alg_->idempotent(q.right(a)));
                add_tensor(out, -1, alg_->idempotent(q.left(a)), q.left(a), alg_->arrow(a));
            } else if (j == 2) {
                int v = g;
                for (const auto& a : q.arrows()) {
                    if (q.left(a.id) != v) continue;
                    Rational sign = a.loop ? Rational(-1) : Rational(a.eps);
                    add_tensor(out, sign, alg_->arrow(a.id), a.star, alg_->idempotent(v));
                    add_tensor(out, sign, alg_->idempotent(v), a.id, alg_->arrow(a.star));
                }
            } else {
                int v = g;
                for (int x : alg_->with_left(v)) {
                    AlgElement tx = alg_->kind() == QuiverKind::TypeT ? twist_.images[static_cast<std::size_t>(x)] : AlgElement{{x, 1}};
                    add_tensor(out, 1, tx, alg_->right(x), fd_->dual[static_cast<std::size_t>(x)]);
                }
            }
        }
    }
}

BimoduleElement Resolution::act(const AlgElement& x, const BimoduleElement& u, const AlgElement& y) const {
    BimoduleElement out;
    for (const auto& [key, c] : u) {
        auto [l, g, r] = key;
        AlgElement xl = alg_->multiply(x, l);
        if (xl.empty()) continue;
        AlgElement ry = alg_->multiply(r, y);
        add_tensor(out, c, xl, g, ry);
    }
    return out;
}

BimoduleElement Resolution::apply_d(int j, const BimoduleElement& x) const {
    if (j < 1 || j > max_index_) throw std::out_of_range("apply_d: index out of range");
    BimoduleElement out;
    for (const auto& [key, c] : x) {
        auto [l, g, r] = key;
        for (const auto& [ikey, ic] : image(j, g)) {
            auto [l2, g2, r2] = ikey;
            const auto& left = alg_->product(l, l2);
            if (left.empty()) continue;
            const auto& right = alg_->product(r2, r);
            if (right.empty()) continue;
            add_tensor(out, c * ic, left, g2, right);
        }
    }
    return out;
}

AlgElement Resolution::augment(const BimoduleElement& x) const {
    AlgElement out;
    for (const auto& [key, c] : x) {
        auto [l, g, r] = key;
        axpy(out, c, alg_->product(l, r));
    }
    return out;
}

std::size_t Resolution::term_dimension(int j) const {
    std::size_t n = 0;
    for (const auto& [k, v] : blocks_.at(static_cast<std::size_t>(j))) n += v.size();
    return n;
}

int Resolution::triple_degree(int j, const Triple& t) const {
    auto [l, g, r] = t;
    return alg_->degree(l) + generator(j, g).degree + alg_->degree(r);
}

std::pair<int, int> Resolution::degree_range(int j) const {
    int lo = 0, hi = -1;
    bool first = true;
    for (const auto& [k, v] : blocks_.at(static_cast<std::size_t>(j))) {
        int d = std::get<2>(k);
        if (first || d < lo) lo = d;
        if (first || d > hi) hi = d;
        first = false;
    }
    return {lo, hi};
}

const std::vector<Triple>& Resolution::block_basis(int j, int a, int b, int degree) const {
    static const std::vector<Triple> empty;
    const auto& m = blocks_.at(static_cast<std::size_t>(j));
    auto it = m.find({a, b, degree});
    return it == m.end() ? empty : it->second;
}

std::shared_ptr<const BlockMap> Resolution::block_map(int j, int a, int b, int degree) const {
    auto key = std::make_tuple(j, a, b, degree);
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    auto bm = std::make_shared<BlockMap>();
    bm->domain = block_basis(j, a, b, degree);
    if (j == 0) {
        for (int x : alg_->block(a, b, degree)) bm->codomain.emplace_back(x, -1, -1);
    } else {
        bm->codomain = block_basis(j - 1, a, b, degree);
    }
    std::map<Triple, std::size_t> row;
    for (std::size_t i = 0; i < bm->codomain.size(); ++i) row[bm->codomain[i]] = i;
    bm->matrix = Matrix(bm->codomain.size(), bm->domain.size());
    for (std::size_t c = 0; c < bm->domain.size(); ++c) {
        BimoduleElement u{{bm->domain[c], 1}};
        if (j == 0) {
            for (const auto& [x, v] : augment(u)) bm->matrix(row.at({x, -1, -1}), c) = v;
        } else {
            for (const auto& [t, v] : apply_d(j, u)) {
                auto it = row.find(t);
                if (it == row.end()) throw ConsistencyError("differential leaves its block");
                bm->matrix(it->second, c) = v;
            }
        }
    }
    bm->solver = LinearSolver(bm->matrix);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto [it, inserted] = cache_.emplace(key, std::move(bm));
    return it->second;
}

std::optional<BimoduleElement> Resolution::preimage(int j, int a, int b, int degree, const BimoduleElement& target) const {
    if (target.empty()) return BimoduleElement{};
    auto bm = block_map(j, a, b, degree);
    std::map<Triple, std::size_t> row;
    for (std::size_t i = 0; i < bm->codomain.size(); ++i) row[bm->codomain[i]] = i;
    Vector rhs(bm->codomain.size());
    for (const auto& [t, v] : target) {
        auto it = row.find(t);
        if (it == row.end()) return std::nullopt;
        rhs[it->second] = v;
    }
    auto sol = bm->solver.solve(rhs);
    if (!sol) return std::nullopt;
    BimoduleElement out;
    for (std::size_t c = 0; c < sol->size(); ++c)
        if (sgn((*sol)[c]) != 0) out.emplace(bm->domain[c], (*sol)[c]);
    return out;
}

nlohmann::json ExactnessReport::to_json() const {
    nlohmann::json j;
    j["complex"] = complex_ok;
    j["degree_preserving"] = degrees_ok;
    j["exact"] = exact;
    j["augmentation_onto"] = augmentation_onto;
    j["period_shift"] = period_shift_ok;
    j["term_dimensions"] = term_dimensions;
    j["failures"] = failures;
    return j;
}

ExactnessReport check_exactness(const Resolution& res) {
    ExactnessReport rep;
    const auto& alg = res.algebra();
    int n = res.max_index();
    int h = res.coxeter_number();
    for (int j = 0; j <= n; ++j) rep.term_dimensions.push_back(res.term_dimension(j));

    for (int j = 1; j <= n; ++j)
        for (int g = 0; g < res.num_generators(j); ++g) {
            const auto& img = res.image(j, g);
            int gd = res.generator(j, g).degree;
            for (const auto& [t, c] : img)
                if (res.triple_degree(j - 1, t) != gd) {
                    rep.degrees_ok = false;
                    rep.failures.push_back("d_" + std::to_string(j) + " changes the degree of generator " + std::to_string(g));
                    break;
                }
            bool zero = j == 1 ? res.augment(img).empty() : res.apply_d(j - 1, img).empty();
            if (!zero) {
                rep.complex_ok = false;
                rep.failures.push_back("d_" + std::to_string(j - 1) + " d_" + std::to_string(j) + " != 0 on generator " + std::to_string(g));
            }
        }

    for (int j = 0; j + 6 <= n; ++j) {
        const auto& a = res.term(j).generators;
        const auto& b = res.term(j + 6).generators;
        bool ok = a.size() == b.size();
        for (std::size_t g = 0; ok && g < a.size(); ++g)
            ok = a[g].degree + 2 * h == b[g].degree && a[g].source == b[g].source && a[g].target == b[g].target;
        if (!ok) {
            rep.period_shift_ok = false;
            rep.failures.push_back("P_" + std::to_string(j + 6) + " is not P_" + std::to_string(j) + " shifted by 2h");
        }
    }

    struct Task {
        int j, a, b, d;
    };
    std::vector<Task> tasks;
    int nv = alg.num_vertices();
    for (int j = 0; j < n; ++j) {
        auto [lo, hi] = res.degree_range(j);
        for (int a = 0; a < nv; ++a)
            for (int b = 0; b < nv; ++b)
                for (int d = lo; d <= hi; ++d)
                    if (!res.block_basis(j, a, b, d).empty()) tasks.push_back({j, a, b, d});
    }
    std::vector<long> hom(tasks.size(), 0);
    parallel_for(tasks.size(), [&](std::size_t i) {
        const auto& t = tasks[i];
        auto out = res.block_map(t.j, t.a, t.b, t.d);
        std::size_t rin = 0;
        if (!res.block_basis(t.j + 1, t.a, t.b, t.d).empty()) rin = res.block_map(t.j + 1, t.a, t.b, t.d)->solver.rank();
        hom[i] = static_cast<long>(out->domain.size()) - static_cast<long>(out->solver.rank()) - static_cast<long>(rin);
    });
    rep.homology.assign(static_cast<std::size_t>(n), {});
    for (std::size_t i = 0; i < tasks.size(); ++i)
        if (hom[i] != 0) {
            rep.exact = false;
            rep.homology[static_cast<std::size_t>(tasks[i].j)][tasks[i].d] += static_cast<std::size_t>(hom[i]);
            rep.failures.push_back("homology at P_" + std::to_string(tasks[i].j) + " in degree " + std::to_string(tasks[i].d));
        }

    for (int a = 0; a < nv; ++a)
        for (int b = 0; b < nv; ++b)
            for (int d = 0; d <= alg.top_degree(); ++d) {
                const auto& blk = alg.block(a, b, d);
                if (blk.empty()) continue;
                auto bm = res.block_map(0, a, b, d);
                if (bm->solver.rank() != blk.size()) {
                    rep.augmentation_onto = false;
                    rep.failures.push_back("augmentation not onto in degree " + std::to_string(d));
                }
            }
    return rep;
}

nlohmann::json SelfDualityReport::to_json() const {
    return {{"i_is_d0_dual", i_is_d0_dual},
            {"d2_is_d1_dual", d2_is_d1_dual},
            {"d3_is_i_after_j", d3_is_i_after_j},
            {"i_basis_independent", i_basis_independent}};
}

namespace {

// x (x)_R y as an element of the vertex-generated term.
BimoduleElement tensor_r(const GradedAlgebra& alg, const AlgElement& x, const AlgElement& y) {
    BimoduleElement out;
    for (const auto& [p, a] : x)
        for (const auto& [q, b] : y)
            if (alg.right(p) == alg.left(q)) {
                Rational c = a * b;
                auto& slot = out[{p, alg.right(p), q}];
                slot += c;
            }
    for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace

SelfDualityReport check_self_duality(const Resolution& res, const Automorphisms& au) {
    SelfDualityReport rep;
    const auto& alg = res.algebra();
    const auto& fd = res.frobenius_data();
    const auto& q = alg.quiver();
    if (alg.kind() != QuiverKind::TypeT) return rep;
    int n = alg.dim();
    std::size_t un = static_cast<std::size_t>(n);
    // trphi(x, y) = Tr(x phi(y)), tr(x, y) = Tr(xy) on basis elements.
    std::vector<Rational> trphi(un * un), tr(un * un);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            tr[static_cast<std::size_t>(x) * un + static_cast<std::size_t>(y)] = fd.trace_of(alg.product(x, y));
            trphi[static_cast<std::size_t>(x) * un + static_cast<std::size_t>(y)] =
                fd.trace_of(alg.multiply(x, au.phi.images[static_cast<std::size_t>(y)]));
        }
    auto TP = [&](int x, int y) -> const Rational& { return trphi[static_cast<std::size_t>(x) * un + static_cast<std::size_t>(y)]; };
    auto T = [&](int x, int y) -> const Rational& { return tr[static_cast<std::size_t>(x) * un + static_cast<std::size_t>(y)]; };
    auto form_a = [&](const AlgElement& x, const AlgElement& y) {
        Rational s = 0;
        for (const auto& [i, a] : x)
            for (const auto& [j, b] : y) s += a * b * TP(i, j);
        return s;
    };
    // On vertex-generated terms; gen_pair = 1 for the arrow-generated term.
    auto form_t = [&](const BimoduleElement& u, const BimoduleElement& v, bool arrows) {
        Rational s = 0;
        for (const auto& [tu, a] : u) {
            auto [x, g, x2] = tu;
            for (const auto& [tv, b] : v) {
                auto [y, g2, y2] = tv;
                Rational pair = 1;
                if (arrows) {
                    const auto& beta = q.arrow(g2);
                    if (q.arrow(g).star != g2) continue;
                    pair = beta.loop ? 1 : beta.eps;
                }
                const Rational& t1 = TP(x, y2);
                if (sgn(t1) == 0) continue;
                const Rational& t2 = T(x2, y);
                if (sgn(t2) == 0) continue;
                s += a * b * t1 * t2 * pair;
            }
        }
        return s;
    };

    auto i_map = [&](const std::vector<AlgElement>& basis, const std::vector<AlgElement>& dual, const AlgElement& x) {
        BimoduleElement out;
        for (std::size_t k = 0; k < basis.size(); ++k)
            axpy(out, 1, tensor_r(alg, alg.multiply(x, au.phi.apply(basis[k])), dual[k]));
        return out;
    };
    std::vector<AlgElement> basis, dual;
    for (int i = 0; i < n; ++i) {
        basis.push_back({{i, 1}});
        dual.push_back(fd.dual[static_cast<std::size_t>(i)]);
    }

    std::vector<Triple> p0;
    auto [lo0, hi0] = res.degree_range(0);
    int nv = alg.num_vertices();
    for (int a = 0; a < nv; ++a)
        for (int b = 0; b < nv; ++b)
            for (int d = lo0; d <= hi0; ++d)
                for (const auto& t : res.block_basis(0, a, b, d)) p0.push_back(t);

    // i = d_0^*: (i(x), y (x) z) = (x, yz).
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
        BimoduleElement ix = i_map(basis, dual, {{x, 1}});
        for (const auto& t : p0) {
            auto [y, g, z] = t;
            if (form_t(ix, {{t, 1}}, false) != form_a({{x, 1}}, alg.product(y, z))) {
                ok = false;
                break;
            }
        }
    }
    rep.i_is_d0_dual = ok;

    // d_2 = d_1^*: (u, d_2 w) = (d_1 u, w), u in P_1, w in P_2.
    ok = true;
    int top = alg.top_degree();
    auto [lo1, hi1] = res.degree_range(1);
    for (int a = 0; a < nv && ok; ++a)
        for (int b = 0; b < nv && ok; ++b)
            for (int d = lo1; d <= hi1 && ok; ++d) {
                const auto& us = res.block_basis(1, a, b, d);
                const auto& ws = res.block_basis(2, b, a, 2 * top + 2 - d);
                if (us.empty() || ws.empty()) continue;
                std::vector<BimoduleElement> d1u, d2w;
                for (const auto& u : us) d1u.push_back(res.apply_d(1, {{u, 1}}));
                for (const auto& w : ws) d2w.push_back(res.apply_d(2, {{w, 1}}));
                for (std::size_t iu = 0; iu < us.size() && ok; ++iu)
                    for (std::size_t iw = 0; iw < ws.size() && ok; ++iw)
                        if (form_t({{us[iu], 1}}, d2w[iw], true) != form_t(d1u[iu], {{ws[iw], 1}}, false)) ok = false;
            }
    rep.d2_is_d1_dual = ok;

    // d_3 = i j: the untwisted l (x) r corresponds to l (x) phi(r) in A (x) A_phi.
    ok = true;
    auto [lo3, hi3] = res.degree_range(3);
    for (int a = 0; a < nv && ok; ++a)
        for (int b = 0; b < nv && ok; ++b)
            for (int d = lo3; d <= hi3 && ok; ++d)
                for (const auto& t : res.block_basis(3, a, b, d)) {
                    auto [l, g, r] = t;
                    AlgElement jx = alg.multiply({{l, 1}}, au.phi.images[static_cast<std::size_t>(r)]);
                    if (res.apply_d(3, {{t, 1}}) != i_map(basis, dual, jx)) {
                        ok = false;
                        break;
                    }
                }
    rep.d3_is_i_after_j = ok;

    // Another homogeneous basis: x'_i = x_i + sum of the earlier basis elements of the same degree.
    std::vector<AlgElement> basis2(un), dual2(un);
    for (int d = 0; d <= top; ++d) {
        const auto& xs = alg.of_degree(d);
        const auto& ys = alg.of_degree(top - d);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            AlgElement e;
            for (std::size_t k = 0; k <= i; ++k) e.emplace(xs[k], 1);
            basis2[static_cast<std::size_t>(xs[i])] = e;
        }
        Matrix m(xs.size(), ys.size());
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t k = 0; k < ys.size(); ++k)
                m(i, k) = fd.trace_of(alg.multiply(basis2[static_cast<std::size_t>(xs[i])], {{ys[k], 1}}));
        auto inv = inverse(m);
        if (!inv) return rep;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            AlgElement e;
            for (std::size_t k = 0; k < ys.size(); ++k)
                if (sgn((*inv)(k, i)) != 0) e.emplace(ys[k], (*inv)(k, i));
            dual2[static_cast<std::size_t>(xs[i])] = e;
        }
    }
    rep.i_basis_independent = i_map(basis, dual, alg.unit()) == i_map(basis2, dual2, alg.unit());
    return rep;
}

AlgElement evaluate(const Resolution& res, const Cochain& f, const BimoduleElement& u) {
    const auto& alg = res.algebra();
    AlgElement out;
    for (const auto& [t, c] : u) {
        auto [l, g, r] = t;
        const auto& v = f.values.at(static_cast<std::size_t>(g));
        if (v.empty()) continue;
        axpy(out, c, alg.multiply(alg.multiply(l, v), {{r, 1}}));
    }
    return out;
}

BimoduleElement apply_map(const Resolution& res, const ChainMapComponent& m, const BimoduleElement& u) {
    BimoduleElement out;
    for (const auto& [t, c] : u) {
        auto [l, g, r] = t;
        const auto& img = m.images.at(static_cast<std::size_t>(g));
        if (img.empty()) continue;
        axpy(out, c, res.act({{l, 1}}, img, {{r, 1}}));
    }
    return out;
}

std::optional<int> cochain_degree(const Resolution& res, const Cochain& f) {
    std::optional<int> d;
    const auto& alg = res.algebra();
    for (std::size_t g = 0; g < f.values.size(); ++g)
        for (const auto& [x, c] : f.values[g]) {
            int e = alg.degree(x) - res.generator(f.index, static_cast<int>(g)).degree;
            if (d && *d != e) return std::nullopt;
            d = e;
        }
    return d;
}

std::vector<ChainMapComponent> lift_cocycle(const Resolution& res, const Cochain& f, int steps) {
    const auto& alg = res.algebra();
    int i = f.index;
    if (i + steps > res.max_index()) throw std::out_of_range("lift_cocycle: resolution too short");
    std::vector<ChainMapComponent> out;
    auto deg = cochain_degree(res, f);
    ChainMapComponent c0{i, 0, {}};
    for (int g = 0; g < res.num_generators(i); ++g) {
        BimoduleElement img;
        for (const auto& [x, c] : f.values[static_cast<std::size_t>(g)]) img[{x, alg.right(x), alg.index_of_idempotent(alg.right(x))}] += c;
        c0.images.push_back(std::move(img));
    }
    out.push_back(std::move(c0));
    if (!deg) {
        for (int j = 1; j <= steps; ++j) out.push_back({i + j, j, std::vector<BimoduleElement>(static_cast<std::size_t>(res.num_generators(i + j)))});
        return out;
    }
    for (int j = 1; j <= steps; ++j) {
        ChainMapComponent cj{i + j, j, {}};
        for (int g = 0; g < res.num_generators(i + j); ++g) {
            const auto& gen = res.generator(i + j, g);
            BimoduleElement target = apply_map(res, out.back(), res.image(i + j, g));
            auto x = res.preimage(j, gen.source, gen.target, gen.degree + *deg, target);
            if (!x) throw ConsistencyError("lift_cocycle: no preimage; the cochain is not a cocycle");
            cj.images.push_back(std::move(*x));
        }
        out.push_back(std::move(cj));
    }
    return out;
}

nlohmann::json summary_json(const Resolution& res, const ExactnessReport& rep) {
    static const char* kinds[] = {"free_on_vertices", "free_on_arrows", "twisted_on_vertices", "twisted_on_arrows"};
    nlohmann::json terms = nlohmann::json::array();
    for (int j = 0; j <= res.max_index(); ++j) {
        const auto& t = res.term(j);
        auto [lo, hi] = res.degree_range(j);
        terms.push_back({{"index", j},
                         {"kind", kinds[static_cast<int>(t.kind)]},
                         {"shift", t.shift},
                         {"generators", t.generators.size()},
                         {"dimension", res.term_dimension(j)},
                         {"min_degree", lo},
                         {"max_degree", hi}});
    }
    nlohmann::json j;
    j["terms"] = terms;
    j["checks"] = rep.to_json();
    return j;
}

}  // namespace preproj
