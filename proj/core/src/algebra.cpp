#include "preproj/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace preproj {

void axpy(AlgElement& acc, const Rational& c, const AlgElement& x) {
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

AlgElement scaled(const AlgElement& x, const Rational& c) {
    AlgElement out;
    axpy(out, c, x);
    return out;
}

AlgElement operator+(const AlgElement& x, const AlgElement& y) {
    AlgElement out = x;
    axpy(out, 1, y);
    return out;
}

AlgElement operator-(const AlgElement& x, const AlgElement& y) {
    AlgElement out = x;
    axpy(out, -1, y);
    return out;
}

namespace {

using LocalElement = std::map<int, Rational>;

struct Level {
    std::vector<BasisPath> paths;
    // rmul[a][p]: (basis p of the previous level) * a, in local coordinates of this level.
    std::vector<std::vector<LocalElement>> rmul;
};

LocalElement apply_rmul(const Level& next, int a, const LocalElement& x) {
    LocalElement out;
    for (const auto& [p, c] : x) axpy(out, c, next.rmul[static_cast<std::size_t>(a)][static_cast<std::size_t>(p)]);
    return out;
}

Level degree_zero(const DoubledQuiver& q) {
    Level l;
    for (int v = 0; v < q.num_vertices(); ++v) l.paths.push_back({0, v, v, {}});
    return l;
}

Level degree_one(const DoubledQuiver& q) {
    Level l;
    int nv = q.num_vertices();
    l.rmul.assign(static_cast<std::size_t>(q.num_arrows()), std::vector<LocalElement>(static_cast<std::size_t>(nv)));
    for (const auto& a : q.arrows()) {
        l.paths.push_back({1, q.left(a.id), q.right(a.id), {a.id}});
        l.rmul[static_cast<std::size_t>(a.id)][static_cast<std::size_t>(q.left(a.id))] = {{a.id, 1}};
    }
    return l;
}

// A_d = (A_{d-1} (x) V) / span{ x r_v : x in A_{d-2} }.
Level next_level(const DoubledQuiver& q, const Level& prev2, const Level& prev) {
    struct Candidate {
        int p;
        int a;
        std::vector<int> word;
    };
    std::vector<Candidate> cands;
    for (int p = 0; p < static_cast<int>(prev.paths.size()); ++p)
        for (const auto& a : q.arrows()) {
            const auto& bp = prev.paths[static_cast<std::size_t>(p)];
            if (bp.right != q.left(a.id)) continue;
            auto w = bp.word;
            w.push_back(a.id);
            cands.push_back({p, a.id, std::move(w)});
        }
    // Largest words first so that they become pivots and get rewritten.
    std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) { return x.word > y.word; });
    std::map<std::pair<int, int>, std::size_t> column;
    for (std::size_t c = 0; c < cands.size(); ++c) column[{cands[c].p, cands[c].a}] = c;

    RowSpace relations(cands.size());
    for (int x = 0; x < static_cast<int>(prev2.paths.size()); ++x) {
        int v = prev2.paths[static_cast<std::size_t>(x)].right;
        LocalElement start{{x, 1}};
        SparseVector row;
        auto add_term = [&](int a, const Rational& sign) {
            LocalElement xa = apply_rmul(prev, a, start);
            int astar = q.arrow(a).star;
            for (const auto& [p, c] : xa) {
                auto& slot = row[column.at({p, astar})];
                slot += sign * c;
            }
        };
        for (const auto& a : q.arrows()) {
            if (a.loop || q.left(a.id) != v) continue;
            add_term(a.id, a.eps);
        }
        if (auto b = q.loop_arrow(); b && q.left(*b) == v) add_term(*b, -1);
        for (auto it = row.begin(); it != row.end();) it = sgn(it->second) == 0 ? row.erase(it) : std::next(it);
        relations.add(std::move(row));
    }

    auto pivots = relations.pivots();
    std::vector<bool> is_pivot(cands.size(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cands.size(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    std::sort(free_cols.begin(), free_cols.end(),
              [&](std::size_t x, std::size_t y) { return cands[x].word < cands[y].word; });
    std::map<std::size_t, int> local;
    Level l;
    for (auto c : free_cols) {
        local[c] = static_cast<int>(l.paths.size());
        const auto& cd = cands[c];
        int left = q.left(cd.word.front());
        int right = q.right(cd.word.back());
        l.paths.push_back({static_cast<int>(cd.word.size()), left, right, cd.word});
    }

    std::vector<LocalElement> normal(cands.size());
    for (auto c : free_cols) normal[c] = {{local[c], 1}};
    for (const auto& row : relations.basis()) {
        std::size_t piv = row.begin()->first;
        LocalElement nf;
        for (const auto& [c, x] : row)
            if (c != piv) nf.emplace(local.at(c), -x);
        normal[piv] = std::move(nf);
    }

    l.rmul.assign(static_cast<std::size_t>(q.num_arrows()), std::vector<LocalElement>(prev.paths.size()));
    for (std::size_t c = 0; c < cands.size(); ++c)
        l.rmul[static_cast<std::size_t>(cands[c].a)][static_cast<std::size_t>(cands[c].p)] = normal[c];
    return l;
}

}  // namespace

GradedAlgebra build_preprojective(const DoubledQuiver& q) {
    std::vector<Level> levels;
    levels.push_back(degree_zero(q));
    levels.push_back(degree_one(q));
    int guard = 4 * q.base().coxeter_number() + 4;
    while (!levels.back().paths.empty()) {
        if (static_cast<int>(levels.size()) > guard) throw ConsistencyError("preprojective algebra is not finite dimensional");
        levels.push_back(next_level(q, levels[levels.size() - 2], levels.back()));
    }
    levels.pop_back();

    GradedAlgebra alg;
    alg.quiver_ = q;
    alg.top_ = static_cast<int>(levels.size()) - 1;
    if (alg.top_ != q.base().coxeter_number() - 2)
        throw ConsistencyError("top degree differs from h - 2");

    std::vector<std::pair<int, int>> order;
    for (int d = 0; d < static_cast<int>(levels.size()); ++d)
        for (int p = 0; p < static_cast<int>(levels[static_cast<std::size_t>(d)].paths.size()); ++p) order.emplace_back(d, p);
    auto path_of = [&](const std::pair<int, int>& k) -> const BasisPath& {
        return levels[static_cast<std::size_t>(k.first)].paths[static_cast<std::size_t>(k.second)];
    };
    std::sort(order.begin(), order.end(), [&](const auto& x, const auto& y) {
        const auto& a = path_of(x);
        const auto& b = path_of(y);
        return std::tie(a.degree, a.left, a.right, a.word) < std::tie(b.degree, b.left, b.right, b.word);
    });
    std::vector<std::vector<int>> global(levels.size());
    for (std::size_t d = 0; d < levels.size(); ++d) global[d].resize(levels[d].paths.size());
    for (std::size_t g = 0; g < order.size(); ++g) {
        global[static_cast<std::size_t>(order[g].first)][static_cast<std::size_t>(order[g].second)] = static_cast<int>(g);
        alg.basis_.push_back(path_of(order[g]));
    }

    int n = alg.dim();
    int nv = q.num_vertices();
    // Right multiplication by arrows in global coordinates.
    std::vector<std::vector<AlgElement>> right_arrow(static_cast<std::size_t>(q.num_arrows()),
                                                     std::vector<AlgElement>(static_cast<std::size_t>(n)));
    for (std::size_t g = 0; g < order.size(); ++g) {
        auto [d, p] = order[g];
        if (d + 1 >= static_cast<int>(levels.size())) continue;
        const auto& next = levels[static_cast<std::size_t>(d + 1)];
        for (const auto& a : q.arrows()) {
            AlgElement img;
            for (const auto& [k, c] : next.rmul[static_cast<std::size_t>(a.id)][static_cast<std::size_t>(p)])
                img.emplace(global[static_cast<std::size_t>(d + 1)][static_cast<std::size_t>(k)], c);
            right_arrow[static_cast<std::size_t>(a.id)][g] = std::move(img);
        }
    }

    alg.table_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), {});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& bj = alg.basis_[static_cast<std::size_t>(j)];
            if (alg.basis_[static_cast<std::size_t>(i)].right != bj.left) continue;
            AlgElement cur{{i, 1}};
            for (int a : bj.word) {
                AlgElement nxt;
                for (const auto& [k, c] : cur) axpy(nxt, c, right_arrow[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)]);
                cur = std::move(nxt);
                if (cur.empty()) break;
            }
            alg.table_[static_cast<std::size_t>(i * n + j)] = std::move(cur);
        }

    alg.with_left_.assign(static_cast<std::size_t>(nv), {});
    alg.with_right_.assign(static_cast<std::size_t>(nv), {});
    alg.by_degree_.assign(static_cast<std::size_t>(alg.top_ + 1), {});
    alg.idempotent_index_.assign(static_cast<std::size_t>(nv), -1);
    alg.arrow_index_.assign(static_cast<std::size_t>(q.num_arrows()), -1);
    alg.hilbert_.assign(static_cast<std::size_t>(nv),
                        std::vector<std::vector<long>>(static_cast<std::size_t>(nv), std::vector<long>(static_cast<std::size_t>(alg.top_ + 1), 0)));
    for (int i = 0; i < n; ++i) {
        const auto& b = alg.basis_[static_cast<std::size_t>(i)];
        alg.with_left_[static_cast<std::size_t>(b.left)].push_back(i);
        alg.with_right_[static_cast<std::size_t>(b.right)].push_back(i);
        alg.by_degree_[static_cast<std::size_t>(b.degree)].push_back(i);
        alg.blocks_[{b.left, b.right, b.degree}].push_back(i);
        alg.hilbert_[static_cast<std::size_t>(b.left)][static_cast<std::size_t>(b.right)][static_cast<std::size_t>(b.degree)] += 1;
        if (b.degree == 0) alg.idempotent_index_[static_cast<std::size_t>(b.left)] = i;
        if (b.degree == 1) alg.arrow_index_[static_cast<std::size_t>(b.word.front())] = i;
    }
    return alg;
}

std::string GradedAlgebra::label(int i) const {
    const auto& b = basis(i);
    if (b.word.empty()) return "e" + std::to_string(b.left + 1);
    std::string s;
    for (std::size_t k = 0; k < b.word.size(); ++k) {
        if (k) s += ' ';
        s += quiver_.arrow(b.word[k]).name;
    }
    return s;
}

const std::vector<int>& GradedAlgebra::block(int l, int r, int d) const {
    static const std::vector<int> empty;
    auto it = blocks_.find({l, r, d});
    return it == blocks_.end() ? empty : it->second;
}

const std::vector<int>& GradedAlgebra::of_degree(int d) const {
    static const std::vector<int> empty;
    if (d < 0 || d > top_) return empty;
    return by_degree_[static_cast<std::size_t>(d)];
}

AlgElement GradedAlgebra::multiply(const AlgElement& x, const AlgElement& y) const {
    AlgElement out;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) {
            const auto& p = product(i, j);
            if (!p.empty()) axpy(out, a * b, p);
        }
    return out;
}

AlgElement GradedAlgebra::multiply(const AlgElement& x, int j) const {
    AlgElement out;
    for (const auto& [i, a] : x) axpy(out, a, product(i, j));
    return out;
}

AlgElement GradedAlgebra::multiply(int i, const AlgElement& y) const {
    AlgElement out;
    for (const auto& [j, b] : y) axpy(out, b, product(i, j));
    return out;
}

AlgElement GradedAlgebra::commutator(const AlgElement& x, const AlgElement& y) const {
    return multiply(x, y) - multiply(y, x);
}

AlgElement GradedAlgebra::idempotent(int v) const {
    return {{index_of_idempotent(v), 1}};
}

AlgElement GradedAlgebra::unit() const {
    AlgElement u;
    for (int v = 0; v < num_vertices(); ++v) u.emplace(index_of_idempotent(v), 1);
    return u;
}

AlgElement GradedAlgebra::arrow(int a) const {
    return {{arrow_index_.at(static_cast<std::size_t>(a)), 1}};
}

AlgElement GradedAlgebra::path(const std::vector<int>& word) const {
    if (word.empty()) throw std::invalid_argument("path: empty word has no vertex");
    AlgElement cur = arrow(word.front());
    for (std::size_t k = 1; k < word.size(); ++k) cur = multiply(cur, arrow_index_.at(static_cast<std::size_t>(word[k])));
    return cur;
}

AlgElement GradedAlgebra::loop_power(int k) const {
    auto b = quiver_.loop_arrow();
    if (!b) return {};
    if (k == 0) return idempotent(*quiver_.base().loop_vertex());
    return path(std::vector<int>(static_cast<std::size_t>(k), *b));
}

bool GradedAlgebra::is_homogeneous(const AlgElement& x, int* degree_out) const {
    int d = -1;
    for (const auto& [i, c] : x) {
        if (d >= 0 && degree(i) != d) return false;
        d = degree(i);
    }
    if (degree_out) *degree_out = d;
    return true;
}

PolyMatrix hilbert_formula(const IntMatrix& c, int h, int max_degree, const std::vector<int>& perm) {
    std::size_t n = c.size();
    using M = std::vector<std::vector<long>>;
    auto mul = [&](const M& x, const M& y) {
        M z(n, std::vector<long>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
        return z;
    };
    M id(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    M p = id;
    if (!perm.empty()) {
        p.assign(n, std::vector<long>(n, 0));
        for (std::size_t i = 0; i < n; ++i) p[i][static_cast<std::size_t>(perm[i])] = 1;
    }
    std::vector<M> s;
    for (int k = 0; k <= max_degree; ++k) {
        if (k == 0) {
            s.push_back(id);
        } else if (k == 1) {
            s.push_back(c);
        } else {
            M next = mul(c, s[static_cast<std::size_t>(k - 1)]);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) next[i][j] -= s[static_cast<std::size_t>(k - 2)][i][j];
            s.push_back(std::move(next));
        }
    }
    PolyMatrix out(n, std::vector<std::vector<long>>(n, std::vector<long>(static_cast<std::size_t>(max_degree + 1), 0)));
    for (int k = 0; k <= max_degree; ++k) {
        M shifted = k >= h ? mul(p, s[static_cast<std::size_t>(k - h)]) : M(n, std::vector<long>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out[i][j][static_cast<std::size_t>(k)] = s[static_cast<std::size_t>(k)][i][j] + shifted[i][j];
    }
    return out;
}

bool check_associativity(const GradedAlgebra& alg, std::size_t max_triples) {
    std::size_t count = 0;
    int n = alg.dim();
    for (int i = 0; i < n; ++i)
        for (int j : alg.with_left(alg.right(i)))
            for (int k : alg.with_left(alg.right(j))) {
                if (alg.multiply(alg.product(i, j), k) != alg.multiply(i, alg.product(j, k))) return false;
                if (max_triples && ++count >= max_triples) return true;
            }
    return true;
}

Rational FrobeniusData::trace_of(const AlgElement& x) const {
    Rational t = 0;
    for (const auto& [i, c] : x) t += c * trace[static_cast<std::size_t>(i)];
    return t;
}

bool FrobeniusData::nakayama_is_identity() const {
    for (std::size_t i = 0; i < nakayama.size(); ++i)
        if (nakayama[i] != AlgElement{{static_cast<int>(i), 1}}) return false;
    return true;
}

FrobeniusData frobenius(const GradedAlgebra& alg) {
    FrobeniusData fd;
    int n = alg.dim();
    int top = alg.top_degree();
    fd.trace.assign(static_cast<std::size_t>(n), 0);
    for (int i : alg.of_degree(top)) fd.trace[static_cast<std::size_t>(i)] = 1;
    fd.dual.assign(static_cast<std::size_t>(n), {});
    fd.nakayama.assign(static_cast<std::size_t>(n), {});

    auto pairing = [&](const std::vector<int>& xs, const std::vector<int>& ys) {
        Matrix m(xs.size(), ys.size());
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t k = 0; k < ys.size(); ++k) m(i, k) = fd.trace_of(alg.product(xs[i], ys[k]));
        return m;
    };
    for (int d = 0; d <= top; ++d) {
        const auto& xs = alg.of_degree(d);
        const auto& ys = alg.of_degree(top - d);
        if (xs.size() != ys.size()) throw ConsistencyError("Frobenius pairing is not square");
        Matrix p = pairing(xs, ys);
        auto pinv = inverse(p);
        if (!pinv) throw ConsistencyError("Frobenius pairing is degenerate");
        for (std::size_t i = 0; i < xs.size(); ++i) {
            AlgElement dual;
            for (std::size_t k = 0; k < ys.size(); ++k)
                if (sgn((*pinv)(k, i)) != 0) dual.emplace(ys[k], (*pinv)(k, i));
            fd.dual[static_cast<std::size_t>(xs[i])] = std::move(dual);
        }
        Matrix q = pairing(ys, xs);
        auto qinv = inverse(q);
        if (!qinv) throw ConsistencyError("Frobenius pairing is degenerate");
        Matrix nak = *qinv * p.transpose();
        for (std::size_t i = 0; i < xs.size(); ++i) {
            AlgElement img;
            for (std::size_t k = 0; k < xs.size(); ++k)
                if (sgn(nak(k, i)) != 0) img.emplace(xs[k], nak(k, i));
            fd.nakayama[static_cast<std::size_t>(xs[i])] = std::move(img);
        }
    }
    int nv = alg.num_vertices();
    fd.omega.assign(static_cast<std::size_t>(nv), {});
    fd.nakayama_vertex.assign(static_cast<std::size_t>(nv), -1);
    for (int i : alg.of_degree(top)) {
        int v = alg.left(i);
        if (!fd.omega[static_cast<std::size_t>(v)].empty()) throw ConsistencyError("socle of e_v A is not simple");
        fd.omega[static_cast<std::size_t>(v)] = {{i, 1}};
        fd.nakayama_vertex[static_cast<std::size_t>(v)] = alg.right(i);
    }
    return fd;
}

AlgElement LinearEndo::apply(const AlgElement& x) const {
    AlgElement out;
    for (const auto& [i, c] : x) axpy(out, c, images.at(static_cast<std::size_t>(i)));
    return out;
}

Automorphisms automorphisms(const GradedAlgebra& alg) {
    Automorphisms au;
    const auto& q = alg.quiver();
    int n = alg.dim();
    for (int i = 0; i < n; ++i) {
        const auto& w = alg.basis(i).word;
        long loops = std::count_if(w.begin(), w.end(), [&](int a) { return q.arrow(a).loop; });
        au.phi.images.push_back({{i, loops % 2 ? Rational(-1) : Rational(1)}});
        if (w.empty()) {
            au.gamma.images.push_back({{i, 1}});
        } else {
            std::vector<int> rev;
            for (auto it = w.rbegin(); it != w.rend(); ++it) rev.push_back(q.arrow(*it).star);
            au.gamma.images.push_back(alg.path(rev));
        }
    }
    int nn = alg.num_vertices();
    for (int v = 0; v < nn; ++v) au.rho.emplace(alg.index_of_idempotent(v), (nn + v + 1) % 2 ? Rational(-1) : Rational(1));
    return au;
}

bool is_multiplicative(const GradedAlgebra& alg, const LinearEndo& f) {
    for (int i = 0; i < alg.dim(); ++i)
        for (int j = 0; j < alg.dim(); ++j)
            if (f.apply(alg.product(i, j)) != alg.multiply(f.images[static_cast<std::size_t>(i)], f.images[static_cast<std::size_t>(j)]))
                return false;
    return true;
}

bool is_antimultiplicative(const GradedAlgebra& alg, const LinearEndo& f) {
    for (int i = 0; i < alg.dim(); ++i)
        for (int j = 0; j < alg.dim(); ++j)
            if (f.apply(alg.product(i, j)) != alg.multiply(f.images[static_cast<std::size_t>(j)], f.images[static_cast<std::size_t>(i)]))
                return false;
    return true;
}

LinearEndo compose(const LinearEndo& f, const LinearEndo& g) {
    LinearEndo h;
    for (const auto& x : g.images) h.images.push_back(f.apply(x));
    return h;
}

bool is_identity(const LinearEndo& f) {
    for (std::size_t i = 0; i < f.images.size(); ++i)
        if (f.images[i] != AlgElement{{static_cast<int>(i), 1}}) return false;
    return true;
}

std::vector<AlgElement> center_basis(const GradedAlgebra& alg) {
    std::vector<AlgElement> gens;
    for (int v = 0; v < alg.num_vertices(); ++v) gens.push_back(alg.idempotent(v));
    for (const auto& a : alg.quiver().arrows()) gens.push_back(alg.arrow(a.id));
    std::vector<AlgElement> out;
    std::size_t n = static_cast<std::size_t>(alg.dim());
    for (int d = 0; d <= alg.top_degree(); ++d) {
        const auto& xs = alg.of_degree(d);
        Matrix m(gens.size() * n, xs.size());
        for (std::size_t c = 0; c < xs.size(); ++c) {
            AlgElement x{{xs[c], 1}};
            for (std::size_t g = 0; g < gens.size(); ++g)
                for (const auto& [k, v] : alg.commutator(x, gens[g])) m(g * n + static_cast<std::size_t>(k), c) = v;
        }
        for (const auto& v : kernel_basis(m)) {
            AlgElement z;
            for (std::size_t c = 0; c < xs.size(); ++c)
                if (sgn(v[c]) != 0) z.emplace(xs[c], v[c]);
            out.push_back(std::move(z));
        }
    }
    return out;
}

AlgElement center_element(const GradedAlgebra& alg, int k) {
    AlgElement z;
    for (int v = k; v < alg.num_vertices(); ++v) {
        const auto& blk = alg.block(v, v, 2 * k);
        if (blk.size() != 1) throw ConsistencyError("loop space at a vertex is not one dimensional");
        z.emplace(blk.front(), 1);
    }
    return z;
}

CommutatorQuotient commutator_quotient(const GradedAlgebra& alg) {
    CommutatorQuotient cq;
    std::size_t n = static_cast<std::size_t>(alg.dim());
    RowSpace comm(n);
    for (int i = 0; i < alg.dim(); ++i)
        for (int j = i + 1; j < alg.dim(); ++j) {
            AlgElement c = alg.product(i, j) - alg.product(j, i);
            if (c.empty()) continue;
            SparseVector s;
            for (const auto& [k, v] : c) s.emplace(static_cast<std::size_t>(k), v);
            comm.add(std::move(s));
        }
    for (int d = 0; d <= alg.top_degree(); ++d) cq.dims[d] = static_cast<int>(alg.of_degree(d).size());
    for (auto p : comm.pivots()) cq.dims[alg.degree(static_cast<int>(p))] -= 1;
    for (int v = 0; v < alg.num_vertices(); ++v) cq.representatives.push_back(alg.idempotent(v));
    if (alg.quiver().loop_arrow())
        for (int k = 1; k <= alg.top_degree(); k += 2) cq.representatives.push_back(alg.loop_power(k));
    int total = 0;
    for (const auto& [d, k] : cq.dims) total += k;
    bool independent = static_cast<int>(cq.representatives.size()) == total;
    RowSpace span = comm;
    for (const auto& r : cq.representatives) {
        SparseVector s;
        for (const auto& [k, v] : r) s.emplace(static_cast<std::size_t>(k), v);
        if (!span.add(std::move(s))) independent = false;
    }
    cq.representatives_form_basis = independent;
    return cq;
}

std::string element_to_string(const GradedAlgebra& alg, const AlgElement& x) {
    if (x.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : x) {
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << '-';
        first = false;
        Rational a = abs(c);
        if (a != 1) os << a.get_str() << '*';
        os << '[' << alg.label(i) << ']';
    }
    return os.str();
}

nlohmann::json to_json(const GradedAlgebra& alg) {
    nlohmann::json j;
    j["quiver"] = to_json(alg.quiver().base());
    j["dimension"] = alg.dim();
    j["top_degree"] = alg.top_degree();
    nlohmann::json basis = nlohmann::json::array();
    for (int i = 0; i < alg.dim(); ++i) {
        const auto& b = alg.basis(i);
        basis.push_back({{"index", i}, {"degree", b.degree}, {"left", b.left + 1}, {"right", b.right + 1}, {"label", alg.label(i)}});
    }
    j["basis"] = basis;
    j["hilbert"] = alg.hilbert();
    nlohmann::json table = nlohmann::json::array();
    for (int a = 0; a < alg.dim(); ++a)
        for (int b = 0; b < alg.dim(); ++b)
            for (const auto& [k, c] : alg.product(a, b)) table.push_back({a, b, k, c.get_str()});
    j["structure_constants"] = table;
    return j;
}

}  // namespace preproj
