#include "preproj/bar.hpp"

#include <functional>

namespace preproj {

void axpy(TensorElement& acc, const Rational& c, const TensorElement& x) {
    if (sgn(c) == 0) return;
    for (const auto& [t, v] : x) {
        auto& slot = acc[t];
        slot += c * v;
        if (sgn(slot) == 0) acc.erase(t);
    }
}

namespace {

void add(TensorElement& acc, const Tensor& t, const Rational& c) {
    if (sgn(c) == 0) return;
    auto& slot = acc[t];
    slot += c;
    if (sgn(slot) == 0) acc.erase(t);
}

// Replaces slot i of t by the element x (terms with a degree 0 interior slot vanish).
void substitute(const GradedAlgebra& alg, TensorElement& acc, Tensor t, std::size_t i, bool interior, const AlgElement& x,
                const Rational& c) {
    for (const auto& [e, v] : x) {
        if (interior && alg.degree(e) == 0) continue;
        t[i] = e;
        add(acc, t, c * v);
    }
}

int generator_with_label(const Resolution& res, int j, int label) {
    for (int g = 0; g < res.num_generators(j); ++g)
        if (res.generator(j, g).label == label) return g;
    throw std::logic_error("no generator with label " + std::to_string(label));
}

// Sign c with x = c y, c = +-1; 0 when neither.
int relative_sign(const TensorElement& x, const TensorElement& y) {
    if (x == y) return 1;
    TensorElement neg;
    axpy(neg, -1, y);
    return x == neg ? -1 : 0;
}

}  // namespace

BarComparison::BarComparison(const Resolution& res, int max_index) : res_(&res), max_(max_index) {
    if (max_index >= res.max_index()) throw std::out_of_range("BarComparison: resolution too short");
    const auto& alg = res.algebra();
    mu_.resize(static_cast<std::size_t>(max_index + 1));
    for (int g = 0; g < res.num_generators(0); ++g) {
        int e = alg.index_of_idempotent(res.generator(0, g).label);
        mu_[0].push_back({{Tensor{e, e}, Rational(1)}});
    }
    for (int j = 1; j <= max_index; ++j)
        for (int g = 0; g < res.num_generators(j); ++g) {
            TensorElement lower = mu_of(j - 1, res.image(j, g));
            TensorElement out;
            for (const auto& [t, c] : lower) {
                if (alg.degree(t.front()) == 0) continue;
                Tensor s;
                s.push_back(alg.index_of_idempotent(alg.left(t.front())));
                s.insert(s.end(), t.begin(), t.end());
                add(out, s, c);
            }
            mu_[static_cast<std::size_t>(j)].push_back(std::move(out));
        }
}

TensorElement BarComparison::mu_of(int j, const BimoduleElement& x) const {
    const auto& alg = res_->algebra();
    TensorElement out;
    for (const auto& [key, c] : x) {
        auto [l, g, r] = key;
        for (const auto& [t, v] : mu(j, g)) {
            AlgElement left = alg.product(l, t.front());
            for (const auto& [a, ca] : left) {
                AlgElement right = alg.product(t.back(), r);
                for (const auto& [b, cb] : right) {
                    Tensor u = t;
                    u.front() = a;
                    u.back() = b;
                    add(out, u, c * v * ca * cb);
                }
            }
        }
    }
    return out;
}

TensorElement BarComparison::bar_differential(const TensorElement& x) const {
    const auto& alg = res_->algebra();
    TensorElement out;
    for (const auto& [t, c] : x) {
        std::size_t last = t.size() - 1;
        for (std::size_t i = 0; i + 1 <= last; ++i) {
            Tensor u(t.begin(), t.begin() + static_cast<long>(i));
            u.push_back(0);
            u.insert(u.end(), t.begin() + static_cast<long>(i + 2), t.end());
            bool interior = i != 0 && i + 1 != last;
            Rational sign = i % 2 ? -1 : 1;
            substitute(alg, out, u, i, interior, alg.product(t[i], t[i + 1]), sign * c);
        }
    }
    return out;
}

TensorElement BarComparison::hochschild_boundary(const TensorElement& x) const {
    const auto& alg = res_->algebra();
    TensorElement out;
    for (const auto& [t, c] : x) {
        std::size_t k = t.size() - 1;
        if (k == 0) continue;
        for (std::size_t i = 0; i < k; ++i) {
            Tensor u(t.begin(), t.begin() + static_cast<long>(i));
            u.push_back(0);
            u.insert(u.end(), t.begin() + static_cast<long>(i + 2), t.end());
            Rational sign = i % 2 ? -1 : 1;
            substitute(alg, out, u, i, i != 0, alg.product(t[i], t[i + 1]), sign * c);
        }
        Tensor u(t.begin(), t.end() - 1);
        Rational sign = k % 2 ? -1 : 1;
        substitute(alg, out, u, 0, false, alg.product(t[k], t[0]), sign * c);
    }
    return out;
}

TensorElement BarComparison::transport(const Chain& c) const {
    const auto& alg = res_->algebra();
    TensorElement out;
    for (std::size_t g = 0; g < c.values.size(); ++g) {
        const auto& w = c.values[g];
        if (w.empty()) continue;
        for (const auto& [t, v] : mu(c.index, static_cast<int>(g))) {
            AlgElement a0 = alg.multiply(alg.multiply(t.back(), w), t.front());
            Tensor u(t.begin(), t.end() - 1);
            substitute(alg, out, u, 0, false, a0, v);
        }
    }
    return out;
}

int BarComparison::degree(const Tensor& t) const {
    int d = 0;
    for (int e : t) d += res_->algebra().degree(e);
    return d;
}

TensorElement BarComparison::lie_theta0(const TensorElement& x) const {
    const auto& alg = res_->algebra();
    Cochain theta = named_cocycle(*res_, Family::Theta, 0).cochain;
    std::map<int, AlgElement> cache;
    auto euler = [&](int e) -> const AlgElement& {
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
        const auto& word = alg.basis(e).word;
        AlgElement out;
        for (std::size_t i = 0; i < word.size(); ++i) {
            std::vector<int> pre(word.begin(), word.begin() + static_cast<long>(i));
            std::vector<int> post(word.begin() + static_cast<long>(i + 1), word.end());
            AlgElement p = pre.empty() ? alg.idempotent(alg.quiver().left(word[i])) : alg.path(pre);
            AlgElement q = post.empty() ? alg.idempotent(alg.quiver().right(word[i])) : alg.path(post);
            int g = generator_with_label(*res_, 1, word[i]);
            axpy(out, 1, alg.multiply(alg.multiply(p, theta.values[static_cast<std::size_t>(g)]), q));
        }
        return cache.emplace(e, std::move(out)).first->second;
    };
    TensorElement out;
    for (const auto& [t, c] : x)
        for (std::size_t i = 0; i < t.size(); ++i) substitute(alg, out, t, i, i != 0, euler(t[i]), c);
    return out;
}

bool LieThetaReport::all() const {
    return chain_map && explicit_mu1 && explicit_mu2 && transported_chain_map && telescoping && euler && eigenvalue &&
           nonzero_in_homology;
}

nlohmann::json LieThetaReport::to_json() const {
    return {{"max_index", max_index},
            {"chain_map", chain_map},
            {"explicit_mu1", explicit_mu1},
            {"explicit_mu2", explicit_mu2},
            {"explicit_sign", explicit_sign},
            {"transported_chain_map", transported_chain_map},
            {"telescoping", telescoping},
            {"euler", euler},
            {"eigenvalue", eigenvalue},
            {"nonzero_in_homology", nonzero_in_homology},
            {"homology_index", homology_index},
            {"cycles", cycles},
            {"failures", failures},
            {"all", all()}};
}

namespace {

// Hochschild chain basis (a_0, ..., a_k) in one total degree, a_1..a_k of positive degree.
std::vector<Tensor> hochschild_basis(const GradedAlgebra& alg, int k, int degree) {
    std::vector<Tensor> out;
    Tensor t;
    std::function<void(int, int)> rec = [&](int slot, int remaining) {
        if (slot > k) {
            if (remaining == 0 && alg.right(t.back()) == alg.left(t.front())) out.push_back(t);
            return;
        }
        for (int e : alg.with_left(alg.right(t.back()))) {
            int d = alg.degree(e);
            if ((slot > 0 && d == 0) || d > remaining) continue;
            t.push_back(e);
            rec(slot + 1, remaining - d);
            t.pop_back();
        }
    };
    for (int e = 0; e < alg.dim(); ++e) {
        int d = alg.degree(e);
        if (d > degree) continue;
        t = {e};
        rec(1, degree - d);
    }
    return out;
}

}  // namespace

LieThetaReport verify_lie_theta0(const Resolution& res, int max_index, int homology_index) {
    const auto& alg = res.algebra();
    const auto& q = alg.quiver();
    LieThetaReport rep;
    rep.max_index = max_index;
    rep.homology_index = homology_index;
    BarComparison bar(res, max_index + 1);
    auto fail = [&](const std::string& s) { rep.failures.push_back(s); };

    rep.chain_map = true;
    for (int j = 1; j <= max_index + 1; ++j)
        for (int g = 0; g < res.num_generators(j); ++g) {
            TensorElement lhs = bar.bar_differential(bar.mu(j, g));
            if (lhs != bar.mu_of(j - 1, res.image(j, g))) {
                rep.chain_map = false;
                fail("b' mu_" + std::to_string(j) + " != mu d on generator " + std::to_string(g));
            }
        }

    // Explicit formulas, up to one common sign fixed by the normalization of d_1 and d_2.
    int sign1 = 0;
    rep.explicit_mu1 = true;
    for (int g = 0; g < res.num_generators(1); ++g) {
        int a = res.generator(1, g).label;
        Tensor t{alg.index_of_idempotent(q.left(a)), alg.arrow(a).begin()->first, alg.index_of_idempotent(q.right(a))};
        TensorElement want{{t, Rational(1)}};
        int s = relative_sign(bar.mu(1, g), want);
        if (s == 0 || (sign1 && s != sign1)) rep.explicit_mu1 = false;
        if (!sign1) sign1 = s;
    }
    int sign2 = 0;
    rep.explicit_mu2 = true;
    for (int g = 0; g < res.num_generators(2); ++g) {
        int v = res.generator(2, g).label;
        TensorElement want;
        int e = alg.index_of_idempotent(v);
        for (const auto& a : q.arrows()) {
            if (q.left(a.id) != v) continue;
            int x = alg.arrow(a.id).begin()->first;
            int y = alg.arrow(a.star).begin()->first;
            add(want, Tensor{e, x, y, e}, a.loop ? Rational(-1) : Rational(a.eps));
        }
        int s = relative_sign(bar.mu(2, g), want);
        if (s == 0 || (sign2 && s != sign2)) rep.explicit_mu2 = false;
        if (!sign2) sign2 = s;
    }
    if (!rep.explicit_mu1) fail("mu_1 differs from 1 (x) a (x) 1");
    if (!rep.explicit_mu2) fail("mu_2 differs from the mesh formula");
    rep.explicit_sign = sign1 == sign2 ? sign1 : 0;

    HochschildComplex chains(res, Variance::Chain);
    rep.transported_chain_map = true;
    for (int j = 1; j <= max_index; ++j)
        for (int d : chains.degrees(j))
            for (const auto& coord : chains.basis(j, d)) {
                Chain c{j, std::vector<AlgElement>(static_cast<std::size_t>(res.num_generators(j)))};
                c.values[static_cast<std::size_t>(coord.generator)][coord.element] = 1;
                Chain dc{j - 1, chains.apply(j, c.values)};
                if (bar.hochschild_boundary(bar.transport(c)) != bar.transport(dc)) {
                    if (rep.transported_chain_map) fail("b mu' != mu' d' in HH_" + std::to_string(j));
                    rep.transported_chain_map = false;
                }
            }

    rep.telescoping = true;
    rep.euler = true;
    Cochain theta = named_cocycle(res, Family::Theta, 0).cochain;
    for (int e = 0; e < alg.dim(); ++e) {
        const auto& word = alg.basis(e).word;
        if (word.empty()) continue;
        BimoduleElement v;
        AlgElement lie;
        for (std::size_t i = 0; i < word.size(); ++i) {
            std::vector<int> pre(word.begin(), word.begin() + static_cast<long>(i));
            std::vector<int> post(word.begin() + static_cast<long>(i + 1), word.end());
            AlgElement p = pre.empty() ? alg.idempotent(q.left(word[i])) : alg.path(pre);
            AlgElement r = post.empty() ? alg.idempotent(q.right(word[i])) : alg.path(post);
            int g = generator_with_label(res, 1, word[i]);
            axpy(v, 1, res.act(p, res.basis_element(alg.index_of_idempotent(q.left(word[i])), g, alg.index_of_idempotent(q.right(word[i]))), r));
            axpy(lie, 1, alg.multiply(alg.multiply(p, theta.values[static_cast<std::size_t>(g)]), r));
        }
        int l = alg.left(e), r = alg.right(e);
        BimoduleElement want;
        AlgElement pe{{e, Rational(1)}};
        int gl = generator_with_label(res, 0, l), gr = generator_with_label(res, 0, r);
        axpy(want, 1, res.act(pe, res.basis_element(alg.index_of_idempotent(r), gr, alg.index_of_idempotent(r)), alg.idempotent(r)));
        axpy(want, -1, res.act(alg.idempotent(l), res.basis_element(alg.index_of_idempotent(l), gl, alg.index_of_idempotent(l)), pe));
        BimoduleElement got = res.apply_d(1, v);
        BimoduleElement neg;
        axpy(neg, -1, want);
        if (got != (sign1 < 0 ? neg : want)) {
            if (rep.telescoping) fail("d_1(v_p) does not telescope for " + alg.label(e));
            rep.telescoping = false;
        }
        if (lie != scaled(pe, alg.degree(e))) {
            if (rep.euler) fail("theta_0 o tau^* != deg on " + alg.label(e));
            rep.euler = false;
        }
    }

    HomologyGroups hom(chains);
    rep.eigenvalue = true;
    rep.nonzero_in_homology = true;
    for (int j = 0; j <= std::min(max_index, hom.max_index() - 1); ++j)
        for (int d : chains.degrees(j)) {
            const HomologyPiece* piece = hom.piece(j, d);
            if (!piece || piece->representatives.empty()) continue;
            std::vector<TensorElement> images;
            for (const auto& v : piece->representatives) {
                ++rep.cycles;
                TensorElement t = bar.transport(Chain{j, chains.from_vector(j, d, v)});
                TensorElement want;
                axpy(want, d, t);
                if (t.empty() || !bar.hochschild_boundary(t).empty() || bar.lie_theta0(t) != want) {
                    if (rep.eigenvalue) fail("L_theta_0 is not deg on a cycle of HH_" + std::to_string(j) + " in degree " + std::to_string(d));
                    rep.eigenvalue = false;
                }
                images.push_back(std::move(t));
            }
            if (j > homology_index) continue;
            // rank [boundaries | images] - rank [boundaries] = number of classes
            std::map<Tensor, std::size_t> rows;
            std::vector<TensorElement> cols;
            for (const auto& t : hochschild_basis(alg, j + 1, d)) cols.push_back(bar.hochschild_boundary({{t, Rational(1)}}));
            std::size_t nb = cols.size();
            for (auto& t : images) cols.push_back(t);
            for (const auto& c : cols)
                for (const auto& [t, v] : c) rows.emplace(t, rows.size());
            Matrix m(rows.size(), cols.size());
            for (std::size_t k = 0; k < cols.size(); ++k)
                for (const auto& [t, v] : cols[k]) m(rows.at(t), k) = v;
            Matrix b(rows.size(), nb);
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t k = 0; k < nb; ++k) b(r, k) = m(r, k);
            if (rank(m) - rank(b) != images.size()) {
                if (rep.nonzero_in_homology) fail("mu' is not injective on HH_" + std::to_string(j) + " in degree " + std::to_string(d));
                rep.nonzero_in_homology = false;
            }
        }
    return rep;
}

}  // namespace preproj
