#pragma once

/*
 * duallr.hpp
 * ----------
 * Dual Littlewood-Richardson polynomials by three independent methods: the
 * skew double Schur expansion, the barred-supertableau rule, and the
 * classical-contraction formula through the flagged families.  Closed product
 * formulas for one-row/one-column cases are provided for cross-checking.
 */

#include "basis.hpp"
#include "dual_series.hpp"

namespace dsym {

// Coefficient of s_lambda(x||a) in the expansion of the skew double Schur
// function s_{nu/mu}(x||a); zero when mu is not contained in nu.
inline APoly dual_lr_via_skew(const Partition& lam, const Partition& mu, const Partition& nu,
                              ASeq seq = {}) {
    if (!nu.contains(mu)) return APoly();
    int n = nu.length() + 1;
    XPoly P = skew_double_schur(SkewShape(nu, mu), n, SkewMethod::supertableau_A, seq);
    return detail::expand_elimination(P, seq).coeff(lam);
}

// Barred-supertableau rule: sum over growth chains from the empty shape to
// lambda and barred nu/mu-supertableaux on the alphabet {1,1',...,n,n'}.
// Unprimed unbarred cells weigh a_{t - rho(alpha)_t} - a_{t - c}, primed
// cells weigh a_{t - c} - a_t, barred cells weigh 1.  Every column of nu/mu
// must have at most n boxes (enforced); the value also requires n >= l(lambda)
// to be meaningful, since the barred entries realize the Yamanouchi symbol.
inline APoly dual_lr_via_supertableaux(const Partition& lam, const Partition& mu,
                                       const Partition& nu, int n, ASeq seq = {}) {
    if (!nu.contains(mu)) return APoly();
    Partition nuc = nu.conjugate(), muc = mu.conjugate();
    for (int j = 1; j <= nu.part(1); ++j)
        if (nuc.part(j) - muc.part(j) > n)
            throw ColumnBoundViolated("a column of the skew shape exceeds the alphabet size");
    SkewShape shape(nu, mu);
    APoly total;
    for (const auto& R : growth_chains(Partition{}, lam))
        for (const auto& B : barred_supertableaux(shape, R, n)) {
            std::vector<bool> is_barred(B.tab.cells.size(), false);
            for (int k : B.barred) is_barred[k] = true;
            APoly w(Rational(1));
            for (std::size_t k = 0; k < B.tab.cells.size(); ++k) {
                int t = B.tab.entries[k].value;
                int c = B.tab.cells[k].content();
                if (B.tab.entries[k].primed)
                    w *= seq.at(t - c) - seq.at(t);
                else if (!is_barred[k])
                    w *= seq.at(t - B.rho[k].part(t)) - seq.at(t - c);
            }
            total += w;
        }
    return total;
}

// Contraction through the classical structure constants: the triple sum
// sum_{alpha,beta,gamma} (-1)^{n(alpha/lam)+n(beta/mu)+m(nu/gamma)}
// c^gamma_{alpha beta} phi_{alpha/lam} phi_{beta/mu} psi_{nu/gamma}.
inline APoly dual_lr_via_classical(const Partition& lam, const Partition& mu,
                                   const Partition& nu, ASeq seq = {}) {
    APoly total;
    for (const auto& gam : partitions_up_to(nu.size())) {
        if (!nu.contains(gam)) continue;
        APoly psi = flagged_psi(nu, gam, seq);
        if (psi.is_zero()) continue;
        if (SkewShape(nu, gam).boxes_in_top_rows(nu.diagonal_count()) % 2 == 1) psi = -psi;
        for (int sa = lam.size(); sa <= gam.size(); ++sa)
            for (const auto& alpha : partitions_of(sa)) {
                if (!gam.contains(alpha) || !alpha.contains(lam)) continue;
                APoly pa = flagged_phi(alpha, lam, seq);
                if (pa.is_zero()) continue;
                if (SkewShape(alpha, lam).boxes_below_row(alpha.diagonal_count()) % 2 == 1)
                    pa = -pa;
                for (const auto& beta : partitions_of(gam.size() - alpha.size())) {
                    if (!gam.contains(beta) || !beta.contains(mu)) continue;
                    Rational c = Rational(lr_coefficient(alpha, beta, gam));
                    if (c == 0) continue;
                    APoly pb = flagged_phi(beta, mu, seq);
                    if (pb.is_zero()) continue;
                    if (SkewShape(beta, mu).boxes_below_row(beta.diagonal_count()) % 2 == 1)
                        pb = -pb;
                    total += psi * pa * pb * APoly(c);
                }
            }
    }
    return total;
}

// ---------------------------------------------------------------------------
// Closed product formulas for one-row and one-column shapes
// ---------------------------------------------------------------------------

// c-hat^{(m)}_{(k)(l)} = sum_{r+s=m-k-l} (-1)^s h_r(a_0..a_{-k+1})
// e_s(a_{-l}..a_{-m+2}); requires 1 <= k <= l and k + l <= m.
inline APoly dual_lr_row_closed(int k, int l, int m, ASeq seq = {}) {
    std::vector<APoly> hs, es;
    for (int i = 0; i >= -k + 1; --i) hs.push_back(seq.at(i));
    for (int i = -l; i >= -m + 2; --i) es.push_back(seq.at(i));
    APoly total;
    for (int s = 0; s <= m - k - l; ++s) {
        APoly term = complete_sym(hs, m - k - l - s) * elem_sym(es, s);
        if (s % 2 == 1) term = -term;
        total += term;
    }
    return total;
}

// c-hat^{(1^m)}_{(1^k)(1^l)} = sum_{r+s=m-k-l} (-1)^r h_r(a_1..a_k)
// e_s(a_{l+1}..a_{m-1}); requires 1 <= k <= l and k + l <= m.
inline APoly dual_lr_column_closed(int k, int l, int m, ASeq seq = {}) {
    std::vector<APoly> hs, es;
    for (int i = 1; i <= k; ++i) hs.push_back(seq.at(i));
    for (int i = l + 1; i <= m - 1; ++i) es.push_back(seq.at(i));
    APoly total;
    for (int r = 0; r <= m - k - l; ++r) {
        APoly term = complete_sym(hs, r) * elem_sym(es, m - k - l - r);
        if (r % 2 == 1) term = -term;
        total += term;
    }
    return total;
}

// Run-product form of c-hat^{(m)}_{(k)(l)}: sum over index sets
// 0 <= i_1 < ... < i_{k-1} <= m-l-2 of the product over the remaining
// positions t of (a_{-j(t)} - a_{-l-t}), where j(t) counts the chosen
// indices below t; requires k >= 1 and k + l <= m.
inline APoly dual_lr_row_runs(int k, int l, int m, ASeq seq = {}) {
    int top = m - l - 2;
    APoly total;
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(chosen.size()) == k - 1) {
            APoly term(Rational(1));
            std::size_t pos = 0;
            for (int t = 0; t <= top; ++t) {
                if (pos < chosen.size() && chosen[pos] == t) {
                    ++pos;
                    continue;
                }
                term *= seq.at(-static_cast<int>(pos)) - seq.at(-l - t);
            }
            total += term;
            return;
        }
        for (int i = next; i <= top; ++i) {
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return total;
}

} // namespace dsym
