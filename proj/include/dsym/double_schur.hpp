#pragma once

/*
 * double_schur.hpp
 * ----------------
 * Concrete polynomials in the finite-variable ring: double Schur polynomials
 * by tableau sum, alternant quotient, and Jacobi-Trudi / Nagelsbach-Kostka
 * determinants; double e/h/p generators (with shifted parameter sequences);
 * factorial Schur polynomials; skew double Schur polynomials by three
 * methods; and supersymmetric Schur polynomials in two alphabets.
 *
 * Every formula is written against an ASeq view of the parameter sequence so
 * the shifted and primed variants come for free.
 */

#include "tableaux.hpp"
#include "xpoly.hpp"

namespace dsym {

// Classical Schur polynomial (rational coefficients) via semistandard
// tableaux; the a = 0 oracle.
inline XPoly classical_schur(const SkewShape& theta, int n) {
    XPoly total(n);
    for (const auto& T : semistandard_tableaux(theta, n)) {
        std::vector<int> e(n, 0);
        for (const auto& ent : T.entries) ++e[ent.value - 1];
        total.add_term(e, APoly(Rational(1)));
    }
    return total;
}

// The tableau polynomial over reverse theta-tableaux with entries <= n:
// sum_T prod (x_T - a_{T - c}).  For straight shapes this is the double
// Schur polynomial; for skew shapes the (non-stable) skew variant.
inline XPoly skew_tableau_poly(const SkewShape& theta, int n, ASeq seq = {}) {
    XPoly total(n);
    for (const auto& T : reverse_tableaux(theta, n)) {
        XPoly w = XPoly::constant(n, APoly(Rational(1)));
        for (std::size_t k = 0; k < T.cells.size(); ++k) {
            int t = T.entries[k].value;
            int c = T.cells[k].content();
            w *= (XPoly::var(n, t) - XPoly::constant(n, seq.at(t - c)));
        }
        total += w;
    }
    return total;
}

inline XPoly double_schur_tableau(const Partition& lam, int n, ASeq seq = {}) {
    return skew_tableau_poly(SkewShape(lam, Partition{}), n, seq);
}

// Alternant quotient A_{lambda+delta}/A_delta with
// (x_i||a)^r = (x_i - a_n)(x_i - a_{n-1})...(x_i - a_{n-r+1}).
inline XPoly double_schur_alternant(const Partition& lam, int n, ASeq seq = {}) {
    if (lam.length() > n) throw std::invalid_argument("alternant needs l(lambda) <= n");
    std::vector<std::vector<XPoly>> M(n, std::vector<XPoly>(n, XPoly(n)));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int r = lam.part(j) + n - j;
            XPoly f = XPoly::constant(n, APoly(Rational(1)));
            for (int m = 0; m < r; ++m)
                f *= (XPoly::var(n, i) - XPoly::constant(n, seq.at(n - m)));
            M[i - 1][j - 1] = f;
        }
    }
    return vandermonde_divide(det_xpoly(M, n));
}

// Double elementary / complete / power sums; `shift` replaces a by tau^shift a.
inline XPoly double_e(int k, int n, int shift = 0) {
    if (k < 0) return XPoly(n);
    if (k == 0) return XPoly::constant(n, APoly(Rational(1)));
    std::vector<int> col(k, 1);
    return skew_tableau_poly(SkewShape(Partition(std::move(col)), Partition{}), n,
                             ASeq{shift, false});
}

inline XPoly double_h(int k, int n, int shift = 0) {
    if (k < 0) return XPoly(n);
    if (k == 0) return XPoly::constant(n, APoly(Rational(1)));
    return skew_tableau_poly(SkewShape(Partition{k}, Partition{}), n, ASeq{shift, false});
}

inline XPoly double_p(int k, int n, int shift = 0) {
    ASeq seq{shift, false};
    XPoly total(n);
    for (int i = 1; i <= n; ++i)
        total += XPoly::var(n, i).pow(k) - XPoly::constant(n, seq.at(i).pow(k));
    return total;
}

// det[h_{lambda_i - i + j}(x || tau^{j-1} a)], i,j = 1..l(lambda).
inline XPoly jacobi_trudi(const Partition& lam, int n) {
    int l = lam.length();
    std::vector<std::vector<XPoly>> M(l, std::vector<XPoly>(l, XPoly(n)));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
            M[i - 1][j - 1] = double_h(lam.part(i) - i + j, n, j - 1);
    return det_xpoly(M, n);
}

// det[e_{lambda'_i - i + j}(x || tau^{-j+1} a)], i,j = 1..l(lambda').
inline XPoly nagelsbach_kostka(const Partition& lam, int n) {
    Partition lc = lam.conjugate();
    int l = lc.length();
    std::vector<std::vector<XPoly>> M(l, std::vector<XPoly>(l, XPoly(n)));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
            M[i - 1][j - 1] = double_e(lc.part(i) - i + j, n, -j + 1);
    return det_xpoly(M, n);
}

// Factorial Schur polynomial with a general u-sequence:
// sum over semistandard theta-tableaux of prod (x_T - u_{T + c}).
inline XPoly factorial_schur_u(const SkewShape& theta, int n,
                               const std::function<APoly(int)>& u) {
    XPoly total(n);
    for (const auto& T : semistandard_tableaux(theta, n)) {
        XPoly w = XPoly::constant(n, APoly(Rational(1)));
        for (std::size_t k = 0; k < T.cells.size(); ++k) {
            int t = T.entries[k].value;
            int c = T.cells[k].content();
            w *= (XPoly::var(n, t) - XPoly::constant(n, u(t + c)));
        }
        total += w;
    }
    return total;
}

// The library's standard factorial Schur polynomial: u_i = a_{n-i+1}, so that
// it coincides with the reverse-tableau polynomial of the same shape.
inline XPoly factorial_schur(const SkewShape& theta, int n, ASeq seq = {}) {
    return factorial_schur_u(theta, n, [&](int i) { return seq.at(n - i + 1); });
}

// s_{theta}(-a^{(n)} | -a): the factorial Schur polynomial with u = -a
// evaluated at y_i = -a_i; a pure parameter polynomial.
inline APoly factorial_schur_neg_a(const SkewShape& theta, int n, ASeq seq = {}) {
    APoly total;
    for (const auto& T : semistandard_tableaux(theta, n)) {
        APoly w(Rational(1));
        for (std::size_t k = 0; k < T.cells.size(); ++k) {
            int t = T.entries[k].value;
            int c = T.cells[k].content();
            // y_t - u_{t+c} with y_t = -a_t and u_i = -a_i
            w *= (seq.at(t + c) - seq.at(t));
        }
        total += w;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Skew double Schur polynomials (the stable family)
// ---------------------------------------------------------------------------

enum class SkewMethod { supertableau_A, supertableau_Aprime, rho_sum };

inline XPoly skew_double_schur(const SkewShape& shape, int n,
                               SkewMethod method = SkewMethod::supertableau_A,
                               ASeq seq = {}) {
    if (method == SkewMethod::rho_sum) {
        // sum over mu <= rho <= nu of wt s_{nu/rho}(x||a) *
        // s_{rho'/mu'}(-a^{(n)} | -a).
        XPoly total(n);
        const Partition& nu = shape.outer;
        const Partition& mu = shape.inner;
        for (const auto& rho : partitions_up_to(nu.size())) {
            if (!rho.contains(mu) || !nu.contains(rho)) continue;
            APoly c = factorial_schur_neg_a(SkewShape(rho.conjugate(), mu.conjugate()), n, seq);
            if (c.is_zero()) continue;
            total += skew_tableau_poly(SkewShape(nu, rho), n, seq) * c;
        }
        return total;
    }
    SuperOrder order = (method == SkewMethod::supertableau_A) ? SuperOrder::A
                                                              : SuperOrder::Aprime;
    // Weight offsets: A ordering uses a_{-c+1}, A' ordering uses a_{-c}.
    int off = (order == SuperOrder::A) ? 1 : 0;
    XPoly total(n);
    for (const auto& T : super_tableaux(shape, n, order)) {
        XPoly w = XPoly::constant(n, APoly(Rational(1)));
        for (std::size_t k = 0; k < T.cells.size(); ++k) {
            int t = T.entries[k].value;
            int c = T.cells[k].content();
            APoly g = seq.at(-c + off);
            if (T.entries[k].primed)
                w *= XPoly::constant(n, g - seq.at(t));
            else
                w *= (XPoly::var(n, t) - XPoly::constant(n, g));
        }
        total += w;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Supersymmetric Schur polynomials in x_1..x_nx and y_1..y_ny
// ---------------------------------------------------------------------------

// Result has nx + ny variables: x_i = var i, y_j = var nx + j.
inline XPoly supersymmetric_schur(const SkewShape& theta, int nx, int ny,
                                  SuperOrder order, ASeq seq = {}) {
    int nmax = std::max(nx, ny);
    int off = (order == SuperOrder::A) ? 1 : 0;
    XPoly total(nx + ny);
    for (const auto& T : super_tableaux(theta, nmax, order)) {
        bool inrange = true;
        for (const auto& ent : T.entries)
            if ((ent.primed && ent.value > ny) || (!ent.primed && ent.value > nx)) {
                inrange = false;
                break;
            }
        if (!inrange) continue;
        XPoly w = XPoly::constant(nx + ny, APoly(Rational(1)));
        for (std::size_t k = 0; k < T.cells.size(); ++k) {
            int t = T.entries[k].value;
            int c = T.cells[k].content();
            APoly g = seq.at(-c + off);
            if (T.entries[k].primed)
                w *= (XPoly::var(nx + ny, nx + t) + XPoly::constant(nx + ny, g));
            else
                w *= (XPoly::var(nx + ny, t) - XPoly::constant(nx + ny, g));
        }
        total += w;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Evaluation points
// ---------------------------------------------------------------------------

using EvalPoint = std::vector<APoly>;

// a_mu = (a_{1-mu_1}, a_{2-mu_2}, ..., a_{n-mu_n}).
inline EvalPoint a_mu_point(const Partition& mu, int n, ASeq seq = {}) {
    EvalPoint pt;
    for (int i : a_mu_indices(mu, n)) pt.push_back(seq.at(i));
    return pt;
}

inline APoly evaluate_at(const XPoly& P, const EvalPoint& point) {
    if (static_cast<int>(point.size()) != P.nvars())
        throw std::invalid_argument("evaluation point length mismatch");
    return P.substitute_all(point);
}

// The hook value s_lambda(a_lambda || a) =
// prod over (i,j) in lambda of (a_{i - lambda_i} - a_{lambda'_j - j + 1}).
inline APoly hook_value(const Partition& lam, ASeq seq = {}) {
    Partition conj = lam.conjugate();
    APoly total(Rational(1));
    for (const auto& cell : lam.cells())
        total *= (seq.at(cell.row - lam.part(cell.row)) -
                  seq.at(conj.part(cell.col) - cell.col + 1));
    return total;
}

} // namespace dsym
