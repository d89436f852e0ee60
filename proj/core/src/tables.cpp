#include "preproj/tables.hpp"

#include "preproj/parallel.hpp"

#include <functional>
#include <stdexcept>

namespace preproj {

std::string table_name(CalculusTable t) {
    switch (t) {
        case CalculusTable::Contraction: return "contraction";
        case CalculusTable::Bracket: return "bracket";
        case CalculusTable::Lie: return "lie";
    }
    return "";
}

namespace {

int hom_family_index(Family f) { return 5 - cohomology_family_index(f); }

// A printed term living in a different (co)homology group than the entry.
struct IllTyped : std::logic_error {
    using std::logic_error::logic_error;
};

// Builds the printed right-hand sides.
struct Printed {
    const Calculus& calc;
    const CohomologyRing& ring;
    int h;
    int n;
    Matrix m;     // theta_0 f_l = sum_r m(r, l) h_r
    Matrix minv;
    bool corrected = false;
    // -1 on the cells whose printed sign rests on the closed form of alpha
    int sg() const { return corrected ? -1 : 1; }

    explicit Printed(const Calculus& c) : calc(c), ring(c.ring()) {
        const auto& alg = ring.resolution().algebra();
        h = alg.coxeter_number();
        n = alg.num_vertices();
        m = Matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        Class theta = ring.element(Family::Theta, 0);
        for (int l = 1; l <= n; ++l) {
            Class p = ring.cup(theta, ring.element(Family::F, l));
            for (int r = 1; r <= n; ++r) m(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(l - 1)) = p.coeffs[*ring.find(Family::H, r, 0)];
        }
        auto inv = inverse(m);
        if (!inv) throw ConsistencyError("alpha is not invertible");
        minv = *inv;
    }

    bool valid_label(Family f, int k) const {
        for (int x : family_labels(ring.resolution().algebra(), f))
            if (x == k) return true;
        return false;
    }

    // c * c_{k,t} added to a homology class
    void hom(Class& acc, const Rational& c, Family f, int k, int t) const {
        if (sgn(c) == 0 || t < 0 || !valid_label(f, k)) return;
        int j = hom_family_index(f) + 6 * t;
        if (j != acc.index) throw IllTyped("printed term " + family_name(f) + " lies in HH_" + std::to_string(j) + ", entry in HH_" + std::to_string(acc.index));
        acc = acc + c * calc.homology_element(f, k, t);
    }
    void coh(Class& acc, const Rational& c, Family f, int k, int s) const {
        if (sgn(c) == 0 || s < 0 || !valid_label(f, k)) return;
        int j = cohomology_family_index(f) + 6 * s;
        if (j != acc.index) throw IllTyped("printed term " + family_name(f) + " lies in HH^" + std::to_string(j) + ", entry in HH^" + std::to_string(acc.index));
        acc = acc + c * ring.element(f, k, s);
    }
    // (x_k y_l)_t and (x_k y_l)^{(s)}
    void hom_prod(Class& acc, const Rational& c, Family x, int k, Family y, int l, int t) const {
        if (sgn(c) == 0 || t < 0) return;
        Class p = ring.cup(ring.element(x, k), ring.element(y, l));
        const auto& b = ring.basis(p.index);
        for (std::size_t i = 0; i < b.size(); ++i) hom(acc, c * p.coeffs[i], b[i].family, b[i].k, t);
    }
    void coh_prod(Class& acc, const Rational& c, Family x, int k, Family y, int l, int s) const {
        if (sgn(c) == 0 || s < 0) return;
        Class p = ring.cup(ring.element(x, k), ring.element(y, l));
        const auto& b = ring.basis(p.index);
        for (std::size_t i = 0; i < b.size(); ++i) coh(acc, c * p.coeffs[i], b[i].family, b[i].k, s);
    }
    void hom_alpha(Class& acc, const Rational& c, int l, int t) const {
        vertex(l);
        for (int r = 1; r <= n; ++r) hom(acc, c * m(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(l - 1)), Family::H, r, t);
    }
    void hom_alpha_inv(Class& acc, const Rational& c, int l, int t) const {
        vertex(l);
        for (int r = 1; r <= n; ++r) hom(acc, c * minv(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(l - 1)), Family::F, r, t);
    }
    void coh_alpha(Class& acc, const Rational& c, int l, int s) const {
        vertex(l);
        for (int r = 1; r <= n; ++r) coh(acc, c * m(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(l - 1)), Family::H, r, s);
    }
    void coh_alpha_inv(Class& acc, const Rational& c, int l, int s) const {
        vertex(l);
        for (int r = 1; r <= n; ++r) coh(acc, c * minv(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(l - 1)), Family::F, r, s);
    }
    void vertex(int v) const {
        if (v < 1 || v > n) throw IllTyped("printed vertex index " + std::to_string(v) + " is not a vertex");
    }
    Rational ma(int k, int l) const { return m(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(l - 1)); }
    Rational mainv(int k, int l) const { return minv(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(l - 1)); }
};

Rational d(int a, int b) { return a == b ? 1 : 0; }

using F = Family;

// Contraction table: iota_{a}(b), a = row_k^{(s)}, b = col_{l,t}
void contraction_formula(const Printed& p, F row, F col, int k, int l, int s, int t, Class& e) {
    int h = p.h, n = p.n;
    int ts = t - s;
    switch (row) {
        case F::Z:
            switch (col) {
                case F::Psi: p.hom_prod(e, 1, F::Z, k, F::Psi, l, ts); break;
                case F::Zeta: p.hom_prod(e, 1, F::Z, k, F::Zeta, l, ts); break;
                case F::H: p.hom(e, d(k, 0), F::H, l, ts); break;
                case F::F: p.hom(e, d(k, 0), F::F, l, ts); break;
                case F::Theta: p.hom_prod(e, 1, F::Z, k, F::Theta, l, ts); break;
                case F::Z: p.hom_prod(e, 1, F::Z, k, F::Z, l, ts); break;
                default: break;
            }
            break;
        case F::Omega: break;
        case F::Theta:
            switch (col) {
                case F::Zeta: p.hom_prod(e, 1, F::Z, k, F::Psi, l, ts); break;
                case F::F: p.hom_alpha(e, d(k, 0), l, ts); break;
                case F::Z: p.hom_prod(e, 1, F::Z, l, F::Theta, k, ts); break;
                default: break;
            }
            break;
        case F::F:
            switch (col) {
                case F::Psi: p.hom(e, d(l, h - 3) * k, F::Theta, h - 3, ts - 1); break;
                case F::Zeta: p.hom(e, d(l, h - 3) * k, F::Z, l, ts - 1); break;
                case F::H: p.hom(e, d(k, l), F::Psi, 0, ts); break;
                case F::F: p.hom(e, p.ma(k, l), F::Zeta, 0, ts); break;
                case F::Theta: p.hom_alpha(e, d(l, 0), k, ts); break;
                case F::Z: p.hom(e, d(l, 0), F::F, k, ts); break;
                default: break;
            }
            break;
        case F::H:
            switch (col) {
                case F::Zeta: p.hom(e, p.sg() * d(k, n) * d(l, h - 3), F::Theta, h - 3, ts - 1); break;
                case F::F: p.hom(e, d(k, l), F::Psi, 0, ts); break;
                case F::Z: p.hom(e, d(l, 0), F::H, k, ts); break;
                default: break;
            }
            break;
        case F::Zeta:
            switch (col) {
                case F::Psi: p.hom_alpha(e, p.sg() * d(k, h - 3) * d(l, h - 3), n, ts - 1); break;
                case F::Zeta: p.hom(e, p.sg() * d(k, h - 3) * d(l, h - 3), F::F, n, ts - 1); break;
                case F::H: p.hom(e, p.sg() * d(k, h - 3) * d(l, n), F::Theta, k, ts - 1); break;
                case F::F: p.hom(e, d(k, h - 3) * l, F::Z, k, ts - 1); break;
                case F::Theta: p.hom_prod(e, 1, F::Z, l, F::Psi, k, ts); break;
                case F::Z: p.hom_prod(e, 1, F::Z, l, F::Zeta, k, ts); break;
                default: break;
            }
            break;
        case F::Psi:
            switch (col) {
                case F::Zeta: p.hom_alpha(e, p.sg() * d(k, h - 3) * d(l, h - 3), n, ts - 1); break;
                case F::F: p.hom(e, d(k, h - 3) * l, F::Theta, h - 3, ts - 1); break;
                case F::Z:
                    if (p.corrected)
                        p.hom_prod(e, 1, F::Z, l, F::Psi, k, ts);
                    else
                        p.hom_prod(e, 1, F::Z, k, F::Psi, l, ts);
                    break;
                default: break;
            }
            break;
    }
}

// Bracket table: [a, b], a = row_k^{(s)}, b = col_l^{(t)}
void bracket_formula(const Printed& p, F row, F col, int k, int l, int s, int t, Class& e) {
    int h = p.h;
    int st = s + t;
    int q = p.corrected ? p.n : (h - 3) / 2;
    switch (row) {
        case F::Z:
            switch (col) {
                case F::Theta: p.coh_prod(e, k - 2 * s * h, F::Z, k, F::Z, l, st); break;
                case F::H: p.coh_alpha_inv(e, -2 * d(k, 0) * s * h, l, st); break;
                case F::Psi: p.coh_prod(e, k - 2 * s * h, F::Z, k, F::Zeta, l, st); break;
                default: break;
            }
            break;
        case F::Omega:
            if (p.corrected && col == F::Theta) p.coh(e, (h - 2) * d(l, 0) * d(t, 0), F::Omega, k, 0);
            break;
        case F::Theta:
            switch (col) {
                case F::Theta: p.coh_prod(e, l - k + 2 * (s - t) * h, F::Z, k, F::Theta, l, st); break;
                case F::F: p.coh(e, -2 * (1 + t * h) * d(k, 0), F::F, l, st); break;
                case F::H: p.coh(e, 2 * (-1 + (s - t) * h) * d(k, 0), F::H, l, st); break;
                case F::Zeta: p.coh_prod(e, -(4 + l + 2 * t * h), F::Z, k, F::Zeta, l, st); break;
                case F::Psi: p.coh_prod(e, -(4 + k + l + 2 * (t - s) * h), F::Z, k, F::Psi, l, st); break;
                default: break;
            }
            break;
        case F::F:
            switch (col) {
                case F::H: p.coh(e, -2 * (1 + s * h) * d(k, l), F::Zeta, 0, st); break;
                case F::Psi: p.coh(e, -2 * (p.corrected ? k : k + 1) * (1 + s * h) * d(l, h - 3), F::Z, h - 3, st + 1); break;
                default: break;
            }
            break;
        case F::H:
            switch (col) {
                case F::H: p.coh(e, 2 * (s - t) * h * p.mainv(k, l), F::Psi, 0, st); break;
                case F::Zeta: p.coh(e, -p.sg() * (h + 1 + 2 * t * h) * d(k, q) * d(l, h - 3), F::Z, h - 3, st + 1); break;
                case F::Psi: p.coh(e, p.sg() * (2 * (s - t) * h - (h - 1)) * d(k, q) * d(l, h - 3), F::Theta, h - 3, st + 1); break;
                default: break;
            }
            break;
        case F::Zeta:
            if (col == F::Psi) p.coh(e, -p.sg() * (2 * s * h + h + 1) * d(k, h - 3) * d(l, h - 3), F::F, q, st + 1);
            break;
        case F::Psi:
            if (col == F::Psi) p.coh_alpha(e, p.sg() * 2 * (s - t) * h * d(k, h - 3) * d(l, h - 3), q, st + 1);
            break;
    }
}

// Lie derivative table: L_a(b), a = row_k^{(s)}, b = col_{l,t}
void lie_formula(const Printed& p, F row, F col, int k, int l, int s, int t, Class& e) {
    int h = p.h, n = p.n;
    int ts = t - s;
    switch (row) {
        case F::Theta:
            switch (col) {
                case F::Psi: p.hom_prod(e, (2 * t + 1) * h - 2 - l, F::Z, k, F::Psi, l, ts); break;
                case F::Zeta: p.hom_prod(e, (2 * ts + 1) * h - 2 - l + k, F::Z, k, F::Zeta, l, ts); break;
                case F::H: p.hom(e, (2 * t + 1) * h * d(k, 0), F::H, l, ts); break;
                case F::F: p.hom(e, (2 * ts + 1) * h * d(k, 0), F::F, l, ts); break;
                case F::Theta: p.hom_prod(e, (2 * t + 1) * h + 2 + l, F::Z, k, F::Theta, l, ts); break;
                case F::Z: p.hom_prod(e, (2 * ts + 1) * h + 2 + k + l, F::Z, k, F::Z, l, ts); break;
                default: break;
            }
            break;
        case F::F:
            switch (col) {
                case F::Psi: p.hom(e, -2 * k * (1 + s * h) * d(l, h - 3), F::Z, h - 3, ts - 1); break;
                case F::H: p.hom(e, -2 * (1 + s * h) * d(k, l), F::Zeta, 0, ts); break;
                case F::Theta: p.hom(e, -2 * (1 + s * h) * d(l, 0), F::F, k, ts); break;
                default: break;
            }
            break;
        case F::H:
            switch (col) {
                case F::Psi: p.hom(e, p.sg() * (2 * t * h + 1) * d(k, n) * d(l, h - 3), F::Theta, h - 3, ts - 1); break;
                case F::Zeta: p.hom(e, p.sg() * (2 * ts * h - 1) * d(k, n) * d(l, h - 3), F::Z, h - 3, ts - 1); break;
                case F::H: p.hom(e, (2 * t + 1) * h * p.mainv(l, k), F::Psi, 0, ts); break;
                case F::F: p.hom(e, ((p.corrected ? 2 * ts + 1 : 2 * (ts + 1)) * h - 2) * d(k, l), F::Zeta, 0, ts); break;
                case F::Theta: p.hom(e, ((2 * t + 1) * h + 2) * d(l, 0), F::H, k, ts); break;
                case F::Z: p.hom_alpha_inv(e, d(l, 0) * (2 * ts + 1) * h, k, ts); break;
                default: break;
            }
            break;
        case F::Zeta:
            switch (col) {
                case F::Psi: p.hom(e, -p.sg() * ((2 * s + 1) * h + 1) * d(k, h - 3) * d(l, h - 3), F::F, n, ts - 1); break;
                case F::H: p.hom(e, -p.sg() * ((2 * s + 1) * h + 1) * d(k, h - 3) * d(l, n), F::Z, h - 3, ts - 1); break;
                case F::Theta: p.hom_prod(e, -(2 * s * h + 4 + k), F::Z, l, F::Zeta, k, ts); break;
                default: break;
            }
            break;
        case F::Psi:
            switch (col) {
                case F::Psi: p.hom_alpha(e, p.sg() * (2 * t * h + 1) * d(k, h - 3) * d(l, h - 3), n, ts - 1); break;
                case F::Zeta: p.hom(e, p.sg() * (2 * ts - 1) * h * d(k, h - 3) * d(l, h - 3), F::F, n, ts - 1); break;
                case F::H: p.hom(e, p.sg() * (2 * t + 1) * h * d(k, h - 3) * d(l, n), F::Theta, h - 3, ts - 1); break;
                case F::F: p.hom(e, l * (2 * ts * h - 1) * d(k, h - 3), F::Z, h - 3, ts - 1); break;
                case F::Theta: p.hom_prod(e, (2 * t + 1) * h + 2 + l, F::Z, l, F::Psi, k, ts); break;
                case F::Z: p.hom_prod(e, (2 * ts + 1) * h - 2 - k + l, F::Z, l, F::Zeta, k, ts); break;
                default: break;
            }
            break;
        case F::Z:
            switch (col) {
                case F::Psi: p.hom_prod(e, k - 2 * s * h, F::Z, k, F::Zeta, l, ts); break;
                case F::H: p.hom_alpha_inv(e, p.corrected ? Rational(-2 * s * h) * d(k, 0) : Rational(k - 2 * s * h), l, ts); break;
                case F::Theta: p.hom_prod(e, k - 2 * s * h, F::Z, k, p.corrected ? F::Z : F::Theta, l, ts); break;
                default: break;
            }
            break;
        default: break;
    }
}

}  // namespace

const std::vector<TableCorrection>& table_corrections() {
    using T = CalculusTable;
    static const std::vector<TableCorrection> list = {
        {"alpha-sign", T::Contraction, F::H, F::Zeta, "d_{k,n} d_{l,h-3} theta_{h-3,t-s-1}", "-d_{k,n} d_{l,h-3} theta_{h-3,t-s-1}"},
        {"alpha-sign", T::Contraction, F::Zeta, F::Psi, "d_{k,h-3} d_{l,h-3} alpha(f_{n,t-s-1})", "-d_{k,h-3} d_{l,h-3} alpha(f_{n,t-s-1})"},
        {"alpha-sign", T::Contraction, F::Zeta, F::Zeta, "d_{k,h-3} d_{l,h-3} f_{n,t-s-1}", "-d_{k,h-3} d_{l,h-3} f_{n,t-s-1}"},
        {"alpha-sign", T::Contraction, F::Zeta, F::H, "d_{k,h-3} d_{l,n} theta_{k,t-s-1}", "-d_{k,h-3} d_{l,n} theta_{k,t-s-1}"},
        {"alpha-sign", T::Contraction, F::Psi, F::Zeta, "d_{k,h-3} d_{l,h-3} alpha(f_{n,t-s-1})", "-d_{k,h-3} d_{l,h-3} alpha(f_{n,t-s-1})"},
        {"psi-z-swap", T::Contraction, F::Psi, F::Z, "(z_k psi_l)_{t-s}", "(z_l psi_k)_{t-s}"},
        {"omega-theta-ordinary", T::Bracket, F::Omega, F::Theta, "0", "(h-2) d_{l0} d_{t0} omega_k"},
        {"f-psi-factor", T::Bracket, F::F, F::Psi, "-2(k+1)(1+sh) d_{l,h-3} z_{h-3}^{(s+t+1)}", "-2k(1+sh) d_{l,h-3} z_{h-3}^{(s+t+1)}"},
        {"half-index", T::Bracket, F::H, F::Zeta, "d_{k,(h-3)/2}", "d_{k,n}"},
        {"alpha-sign", T::Bracket, F::H, F::Zeta, "-(h+1+2th) ...", "(h+1+2th) ..."},
        {"half-index", T::Bracket, F::H, F::Psi, "d_{k,(h-3)/2}", "d_{k,n}"},
        {"alpha-sign", T::Bracket, F::H, F::Psi, "(2(s-t)h-(h-1)) ...", "-(2(s-t)h-(h-1)) ..."},
        {"half-index", T::Bracket, F::Zeta, F::Psi, "f_{(h-3)/2}", "f_n"},
        {"alpha-sign", T::Bracket, F::Zeta, F::Psi, "-(2sh+h+1) ...", "(2sh+h+1) ..."},
        {"half-index", T::Bracket, F::Psi, F::Psi, "alpha(f_{(h-3)/2})", "alpha(f_n)"},
        {"alpha-sign", T::Bracket, F::Psi, F::Psi, "2(s-t)h ...", "-2(s-t)h ..."},
        {"alpha-sign", T::Lie, F::H, F::Psi, "(2th+1) ...", "-(2th+1) ..."},
        {"alpha-sign", T::Lie, F::H, F::Zeta, "(2(t-s)h-1) ...", "-(2(t-s)h-1) ..."},
        {"h-f-coefficient", T::Lie, F::H, F::F, "(2(t-s+1)h-2) d_{kl} zeta_{0,t-s}", "((2(t-s)+1)h-2) d_{kl} zeta_{0,t-s}"},
        {"alpha-sign", T::Lie, F::Zeta, F::Psi, "-((2s+1)h+1) ...", "((2s+1)h+1) ..."},
        {"alpha-sign", T::Lie, F::Zeta, F::H, "-((2s+1)h+1) ...", "((2s+1)h+1) ..."},
        {"alpha-sign", T::Lie, F::Psi, F::Psi, "(2th+1) ...", "-(2th+1) ..."},
        {"alpha-sign", T::Lie, F::Psi, F::Zeta, "(2(t-s)-1)h ...", "-(2(t-s)-1)h ..."},
        {"alpha-sign", T::Lie, F::Psi, F::H, "(2t+1)h ...", "-(2t+1)h ..."},
        {"z-h-delta", T::Lie, F::Z, F::H, "(k-2sh) alpha^{-1}(h_{l,t-s})", "-2 d_{k0} sh alpha^{-1}(h_{l,t-s})"},
        {"z-theta-product", T::Lie, F::Z, F::Theta, "(k-2sh)(z_k theta_l)_{t-s}", "(k-2sh)(z_k z_l)_{t-s}"},
    };
    return list;
}

namespace {

struct Job {
    CalculusTable table;
    F row;
    F col;
    int k, l, s, t;
};

}  // namespace

std::vector<TableEntry> calculus_tables(const Calculus& calc, int max_period) {
    Printed p(calc);
    Printed pc(calc);
    pc.corrected = true;
    const auto& ring = calc.ring();
    const auto& alg = ring.resolution().algebra();
    static const F coh_order[] = {F::Z, F::Omega, F::Theta, F::F, F::H, F::Zeta, F::Psi};
    static const F hom_order[] = {F::Psi, F::Zeta, F::H, F::F, F::Theta, F::Z};
    static const F lie_rows[] = {F::Theta, F::F, F::H, F::Zeta, F::Psi, F::Z};
    auto periods = [&](F f) { return f == F::Omega ? 0 : max_period; };

    std::vector<Job> jobs;
    for (F r : coh_order)
        for (F c : hom_order)
            for (int k : family_labels(alg, r))
                for (int l : family_labels(alg, c))
                    for (int s = 0; s <= periods(r); ++s)
                        for (int t = 0; t <= max_period; ++t) jobs.push_back({CalculusTable::Contraction, r, c, k, l, s, t});
    for (int ri = 0; ri < 7; ++ri)
        for (int ci = ri; ci < 7; ++ci) {
            F r = coh_order[ri], c = coh_order[ci];
            for (int k : family_labels(alg, r))
                for (int l : family_labels(alg, c))
                    for (int s = 0; s <= periods(r); ++s)
                        for (int t = 0; t <= periods(c); ++t) jobs.push_back({CalculusTable::Bracket, r, c, k, l, s, t});
        }
    for (F r : lie_rows)
        for (F c : hom_order)
            for (int k : family_labels(alg, r))
                for (int l : family_labels(alg, c))
                    for (int s = 0; s <= max_period; ++s)
                        for (int t = 0; t <= max_period; ++t) jobs.push_back({CalculusTable::Lie, r, c, k, l, s, t});

    std::vector<TableEntry> out(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t i) {
        const auto& jb = jobs[i];
        TableEntry& e = out[i];
        e.table = jb.table;
        e.row = jb.row;
        e.col = jb.col;
        e.k = jb.k;
        e.l = jb.l;
        e.s = jb.s;
        e.t = jb.t;
        Class a = ring.element(jb.row, jb.k, jb.s);
        bool bracket = jb.table == CalculusTable::Bracket;
        Class computed;
        if (bracket)
            computed = calc.bracket(a, ring.element(jb.col, jb.l, jb.t));
        else if (jb.table == CalculusTable::Contraction)
            computed = calc.contraction(a, calc.homology_element(jb.col, jb.l, jb.t));
        else
            computed = calc.lie(a, calc.homology_element(jb.col, jb.l, jb.t));
        bool valid = computed.index >= 0;
        auto show = [&](const Class& c) {
            if (!valid) return std::string("0");
            return bracket ? ring.to_string(c) : calc.homology_to_string(c);
        };
        e.computed = show(computed);
        for (const auto& c : table_corrections())
            if (c.table == jb.table && c.row == jb.row && c.col == jb.col) e.corrections.push_back(c.id);
        auto evaluate = [&](const Printed& reading, std::string& text) {
            Class expected = computed;
            if (valid) expected = bracket ? ring.zero(computed.index) : calc.homology_zero(computed.index);
            try {
                if (valid) {
                    if (bracket)
                        bracket_formula(reading, jb.row, jb.col, jb.k, jb.l, jb.s, jb.t, expected);
                    else if (jb.table == CalculusTable::Contraction)
                        contraction_formula(reading, jb.row, jb.col, jb.k, jb.l, jb.s, jb.t, expected);
                    else
                        lie_formula(reading, jb.row, jb.col, jb.k, jb.l, jb.s, jb.t, expected);
                }
                text = show(expected);
                return computed == expected;
            } catch (const IllTyped& err) {
                text = std::string("ill-typed: ") + err.what();
                return false;
            }
        };
        e.match = evaluate(p, e.expected);
        e.match_corrected = evaluate(pc, e.corrected_expected);
    });
    return out;
}

nlohmann::json table_entry_json(const TableEntry& e) {
    return {{"table", table_name(e.table)}, {"row", family_name(e.row)}, {"col", family_name(e.col)}, {"k", e.k}, {"l", e.l},
            {"s", e.s}, {"t", e.t}, {"expected", e.expected}, {"computed", e.computed}, {"match", e.match},
            {"corrections", e.corrections}, {"corrected_expected", e.corrected_expected}, {"match_corrected", e.match_corrected}};
}

// ---------------------------------------------------------------- B

BFormulaReport check_b_formulas(const Calculus& calc, int max_period) {
    BFormulaReport rep;
    Printed p(calc);
    const auto& alg = calc.ring().resolution().algebra();
    int h = p.h;
    rep.psi = rep.odd = rep.h = rep.theta = rep.squared_zero = true;
    for (int s = 0; s <= max_period; ++s) {
        for (int k : family_labels(alg, F::Psi)) {
            Class e = calc.homology_zero(6 * s + 1);
            p.hom(e, (2 * s + 1) * h - 2 - k, F::Zeta, k, s);
            if (!(calc.connes(calc.homology_element(F::Psi, k, s)) == e)) rep.psi = false;
        }
        for (int k : family_labels(alg, F::H)) {
            Class e = calc.homology_zero(6 * s + 3);
            p.hom_alpha_inv(e, (2 * s + 1) * h, k, s);
            if (!(calc.connes(calc.homology_element(F::H, k, s)) == e)) rep.h = false;
        }
        for (int k : family_labels(alg, F::Theta)) {
            Class e = calc.homology_zero(6 * s + 5);
            p.hom(e, (2 * s + 1) * h + 2 + k, F::Z, k, s);
            if (!(calc.connes(calc.homology_element(F::Theta, k, s)) == e)) rep.theta = false;
        }
        for (int j : {1, 3, 5})
            for (std::size_t q = 0; q < calc.homology_basis(6 * s + j).size(); ++q) {
                Class x = calc.homology_zero(6 * s + j);
                x.coeffs[q] = 1;
                if (!calc.connes(x).is_zero()) rep.odd = false;
            }
        for (int j = 6 * s; j < 6 * s + 6; ++j)
            for (std::size_t q = 0; q < calc.homology_basis(j).size(); ++q) {
                Class x = calc.homology_zero(j);
                x.coeffs[q] = 1;
                if (!calc.connes(calc.connes(x)).is_zero()) rep.squared_zero = false;
            }
    }
    return rep;
}

nlohmann::json BFormulaReport::to_json() const {
    return {{"psi", psi}, {"odd_zero", odd}, {"h", h}, {"theta", theta}, {"squared_zero", squared_zero}};
}

// ---------------------------------------------------------------- identities

bool CalculusIdentityReport::all() const {
    return cartan && lie_theta_degree && module && unit && precalculus && lie_product && antisymmetry && leibniz && jacobi &&
           delta_squared_zero && cup_commutative && cup_associative && bv_degree_zero;
}

nlohmann::json CalculusIdentityReport::to_json() const {
    return {{"checked", checked},
            {"cartan", cartan},
            {"lie_theta_degree", lie_theta_degree},
            {"module", module},
            {"unit", unit},
            {"precalculus", precalculus},
            {"lie_product", lie_product},
            {"antisymmetry", antisymmetry},
            {"printed_antisymmetry", printed_antisymmetry},
            {"printed_antisymmetry_failures", printed_antisymmetry_failures},
            {"bv_degree_zero", bv_degree_zero},
            {"leibniz", leibniz},
            {"jacobi", jacobi},
            {"delta_squared_zero", delta_squared_zero},
            {"cup_commutative", cup_commutative},
            {"cup_associative", cup_associative},
            {"failures", failures}};
}

namespace {

Class sign(int e, const Class& c) { return e % 2 ? Rational(-1) * c : c; }

Class none() { return {-1, {}}; }

// Sum in which a negative index stands for zero.
Class plus(const Class& a, const Class& b) {
    if (a.index < 0) return b;
    if (b.index < 0) return a;
    return a + b;
}

bool same(const Class& a, const Class& b) {
    if (a.index < 0 && b.index < 0) return true;
    if (a.index < 0) return b.is_zero();
    if (b.index < 0) return a.is_zero();
    return a == b;
}

}  // namespace

CalculusIdentityReport check_calculus_identities(const Calculus& calc, int max_index) {
    CalculusIdentityReport rep;
    const auto& ring = calc.ring();
    const auto& res = ring.resolution();
    int top = calc.top();
    int jmax = calc.max_homology_index();
    std::vector<Class> coh;
    for (int i = 0; i <= max_index; ++i)
        for (std::size_t k = 0; k < ring.basis(i).size(); ++k) {
            Class c = ring.zero(i);
            c.coeffs[k] = 1;
            coh.push_back(c);
        }
    std::vector<Class> hom;
    for (int j = 0; j <= std::min(max_index, jmax - 2); ++j)
        for (std::size_t q = 0; q < calc.homology_basis(j).size(); ++q) {
            Class c = calc.homology_zero(j);
            c.coeffs[q] = 1;
            hom.push_back(c);
        }
    auto name = [&](const Class& c) { return ring.to_string(c); };
    std::mutex mu;
    std::size_t checked = 0;
    auto fail = [&](bool& flag, const std::string& what) {
        std::lock_guard<std::mutex> lock(mu);
        flag = false;
        if (rep.failures.size() < 30) rep.failures.push_back(what);
    };
    auto count = [&](std::size_t k) {
        std::lock_guard<std::mutex> lock(mu);
        checked += k;
    };
    rep.cartan = rep.lie_theta_degree = rep.module = rep.unit = rep.precalculus = rep.lie_product = true;
    rep.printed_antisymmetry = rep.bv_degree_zero = true;
    rep.antisymmetry = rep.leibniz = rep.jacobi = rep.delta_squared_zero = rep.cup_commutative = rep.cup_associative = true;

    Class one = ring.unit();
    Class theta = ring.element(F::Theta, 0);
    for (const auto& c : hom) {
        if (!(calc.contraction(one, c) == c)) fail(rep.unit, "iota_1 != id on HH_" + std::to_string(c.index));
        int deg = 0;
        for (std::size_t q = 0; q < c.coeffs.size(); ++q)
            if (sgn(c.coeffs[q])) deg = calc.homology_degree(c.index, q);
        if (!(calc.lie(theta, c) == Rational(deg) * c)) fail(rep.lie_theta_degree, "L_theta0 != deg on " + calc.homology_to_string(c));
        count(2);
    }
    // L_a B = (-1)^{|a|+1} B L_a
    for (const auto& a : coh)
        for (const auto& c : hom) {
            if (c.index + 2 > jmax) continue;
            Class lb = calc.lie(a, calc.connes(c));
            Class lc = calc.lie(a, c);
            Class bl = lc.index >= 0 ? calc.connes(lc) : none();
            if (!same(lb, bl.index >= 0 ? sign(a.index + 1, bl) : bl)) fail(rep.cartan, "L_a B fails for " + name(a));
            count(1);
        }
    for (const auto& a : coh)
        if (a.index >= 1 && a.index <= top) {
            Class d2 = calc.delta(a);
            if (d2.index >= 1 && !calc.delta(d2).is_zero()) fail(rep.delta_squared_zero, "Delta^2 != 0 on " + name(a));
        }

    std::size_t nc = coh.size();
    parallel_for(nc, [&](std::size_t ia) {
        const Class& a = coh[ia];
        int i = a.index;
        std::size_t local = 0;
        for (std::size_t ib = 0; ib < nc; ++ib) {
            const Class& b = coh[ib];
            int j = b.index;
            // graded commutativity with independently lifted factors
            if (i + j <= max_index && ib >= ia) {
                Cochain ab = cup_cochains(res, ring.cochain(a), ring.cochain(b));
                Cochain ba = cup_cochains(res, ring.cochain(b), ring.cochain(a));
                if (!(ring.expand(ab) == sign(i * j, ring.expand(ba)))) fail(rep.cup_commutative, "ab != +-ba for " + name(a) + ", " + name(b));
                ++local;
            }
            if (i + j - 1 > top) continue;
            Class ab_br = calc.graded_bracket(a, b);
            Class ba_br = calc.graded_bracket(b, a);
            if (!same(ab_br, sign((i - 1) * (j - 1) + 1, ba_br))) fail(rep.antisymmetry, "[a,b] antisymmetry fails for " + name(a) + ", " + name(b));
            {
                Class p_ab = calc.bracket(a, b);
                Class p_ba = calc.bracket(b, a);
                if (!same(p_ab, sign((i - 1) * (j - 1) + 1, p_ba))) {
                    std::lock_guard<std::mutex> lock(mu);
                    rep.printed_antisymmetry = false;
                    ++rep.printed_antisymmetry_failures;
                }
            }
            if (i + j == 1) {
                // BV route against the derivation action, modulo the projective center
                Class x = i == 1 ? a : b;
                Class z = i == 1 ? b : a;
                Class diff = calc.bv_bracket(a, b) - calc.derivation_action(x, z);
                for (std::size_t q = 0; q < diff.coeffs.size(); ++q)
                    if (sgn(diff.coeffs[q]) && ring.basis(0)[q].family != F::Omega)
                        fail(rep.bv_degree_zero, "BV and derivation action differ for " + name(a) + ", " + name(b));
            }
            ++local;
            for (const auto& c : hom) {
                if (c.index - i - j < 0 || c.index + 1 > jmax) continue;
                // i_a L_b - (-1)^{|a|(|b|+1)} L_b i_a = i_{[a,b]}
                Class lhs1 = calc.contraction(a, calc.lie(b, c));
                Class ia_c = calc.contraction(a, c);
                Class lhs2 = ia_c.index >= 0 ? calc.lie(b, ia_c) : none();
                Class lhs = plus(lhs1, lhs2.index >= 0 ? sign(i * (j + 1) + 1, lhs2) : none());
                Class rhs = ab_br.index >= 0 ? calc.contraction(ab_br, c) : none();
                if (!same(lhs, rhs)) fail(rep.precalculus, "precalculus fails for " + name(a) + ", " + name(b) + " on " + calc.homology_to_string(c));
                // L_{ab} = L_a i_b + (-1)^{|a|} i_a L_b
                Class lab = calc.lie(ring.cup(a, b), c);
                Class t1 = calc.lie(a, calc.contraction(b, c));
                Class t2 = calc.contraction(a, calc.lie(b, c));
                if (!same(lab, plus(t1, t2.index >= 0 ? sign(i, t2) : none()))) fail(rep.lie_product, "L_{ab} fails for " + name(a) + ", " + name(b));
                // module
                if (!same(calc.contraction(a, calc.contraction(b, c)), calc.contraction(ring.cup(a, b), c)))
                    fail(rep.module, "iota_a iota_b != iota_ab for " + name(a) + ", " + name(b));
                local += 3;
            }
            for (std::size_t ic = 0; ic < nc; ++ic) {
                const Class& c = coh[ic];
                int k = c.index;
                if (i + j + k > top || i + j + k > ring.max_index()) continue;
                if (i + j + k <= max_index + 5) {
                    if (!(ring.cup(ring.cup(a, b), c) == ring.cup(a, ring.cup(b, c)))) fail(rep.cup_associative, "associativity fails");
                    ++local;
                }
                // [a, bc] = [a,b]c + (-1)^{(|a|-1)|b|} b[a,c]
                Class l = calc.graded_bracket(a, ring.cup(b, c));
                Class r1 = ab_br.index >= 0 ? ring.cup(ab_br, c) : none();
                Class ac = calc.graded_bracket(a, c);
                Class r2 = ac.index >= 0 ? sign((i - 1) * j, ring.cup(b, ac)) : none();
                Class r = plus(r1, r2);
                if (!same(l, r)) fail(rep.leibniz, "Leibniz fails for " + name(a) + ", " + name(b) + ", " + name(c));
                // [a,[b,c]] = [[a,b],c] + (-1)^{(|a|-1)(|b|-1)} [b,[a,c]]
                Class bc_br = calc.graded_bracket(b, c);
                if (bc_br.index >= 0 && ab_br.index >= 0 && ac.index >= 0) {
                    Class jl = calc.graded_bracket(a, bc_br);
                    Class jr = plus(calc.graded_bracket(ab_br, c), sign((i - 1) * (j - 1), calc.graded_bracket(b, ac)));
                    if (!same(jl, jr)) fail(rep.jacobi, "Jacobi fails for " + name(a) + ", " + name(b) + ", " + name(c));
                }
                local += 2;
            }
        }
        count(local);
    });
    rep.checked = checked;
    return rep;
}

IndependenceReport check_bracket_independence(const Calculus& a, const Calculus& b, int max_index) {
    IndependenceReport rep;
    rep.m1 = a.period_choice();
    rep.m2 = b.period_choice();
    rep.independent = true;
    const auto& ring = a.ring();
    std::vector<Class> coh;
    for (int i = 0; i <= max_index; ++i)
        for (std::size_t k = 0; k < ring.basis(i).size(); ++k) {
            Class c = ring.zero(i);
            c.coeffs[k] = 1;
            coh.push_back(c);
        }
    for (const auto& x : coh)
        for (const auto& y : coh) {
            if (x.index + y.index - 1 > std::min(a.top(), b.top())) continue;
            ++rep.pairs;
            if (!same(a.bracket(x, y), b.bracket(x, y))) {
                rep.independent = false;
                if (rep.failures.size() < 20) rep.failures.push_back("[" + ring.to_string(x) + ", " + ring.to_string(y) + "] depends on m");
            }
        }
    return rep;
}

nlohmann::json IndependenceReport::to_json() const {
    return {{"m", {m1, m2}}, {"pairs", pairs}, {"independent", independent}, {"failures", failures}};
}

}  // namespace preproj
