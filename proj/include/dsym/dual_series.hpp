#pragma once

/*
 * dual_series.hpp
 * ---------------
 * The degree-truncated series ring: dual Schur functions by four methods
 * (flagged tableau expansion, determinant formula, combinatorial reverse
 * tableau sum, alternant quotient), the flagged coefficient polynomials
 * phi and psi with their alternative presentations, conversion between the
 * classical Schur and dual Schur bases, dual e/h generators with shifted
 * parameter sequences, dual Jacobi-Trudi / Nagelsbach-Kostka / Giambelli
 * determinants, the omega-hat involution, truncated series multiplication,
 * and the Cauchy-kernel verification harness.
 *
 * Truncation degree D is an explicit argument everywhere; series never
 * report coefficients beyond D.
 */

#include "basis.hpp"

#include <algorithm>
#include <iterator>
#include <string>

namespace dsym {

enum class SeriesBasis { classical_schur, dual_schur };

// Degree-truncated series: a finite map from partitions (|lambda| <= D) to
// APoly coefficients, on the classical or dual Schur basis.
struct SchurSeries {
    SeriesBasis basis = SeriesBasis::classical_schur;
    int D = 0;
    std::map<Partition, APoly> coeffs;

    void add(const Partition& lam, const APoly& c) {
        if (c.is_zero() || lam.size() > D) return;
        auto it = coeffs.find(lam);
        if (it == coeffs.end()) {
            coeffs.emplace(lam, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }

    APoly coeff(const Partition& lam) const {
        auto it = coeffs.find(lam);
        return it == coeffs.end() ? APoly() : it->second;
    }

    friend bool operator==(const SchurSeries& a, const SchurSeries& b) {
        return a.basis == b.basis && a.D == b.D && a.coeffs == b.coeffs;
    }
    friend bool operator!=(const SchurSeries& a, const SchurSeries& b) { return !(a == b); }
};

// ---------------------------------------------------------------------------
// Truncated polynomial arithmetic helpers
// ---------------------------------------------------------------------------

namespace detail {

// Total degree of an exponent vector over the 1-based variable range [lo, hi].
inline int range_degree(const std::vector<int>& e, int lo, int hi) {
    int s = 0;
    for (int i = lo; i <= hi; ++i) s += e[i - 1];
    return s;
}

inline XPoly truncate_range(const XPoly& P, int lo, int hi, int D) {
    XPoly r(P.nvars());
    for (auto& [e, c] : P.terms())
        if (range_degree(e, lo, hi) <= D) r.add_term(e, c);
    return r;
}

// Product truncated to degree D on the variable range [lo, hi].
inline XPoly mul_trunc(const XPoly& p, const XPoly& q, int lo, int hi, int D) {
    XPoly r(p.nvars());
    for (auto& [ep, cp] : p.terms()) {
        int dp = range_degree(ep, lo, hi);
        if (dp > D) continue;
        for (auto& [eq, cq] : q.terms()) {
            if (dp + range_degree(eq, lo, hi) > D) continue;
            std::vector<int> e(static_cast<std::size_t>(p.nvars()));
            for (int i = 0; i < p.nvars(); ++i) e[i] = ep[i] + eq[i];
            r.add_term(e, cp * cq);
        }
    }
    return r;
}

// Truncation of 1 / (1 - c * x_i): sum_{k<=D} c^k x_i^k.
inline XPoly geom_series(int nv, int i, const APoly& c, int D) {
    XPoly r(nv);
    APoly pw(Rational(1));
    for (int k = 0; k <= D; ++k) {
        std::vector<int> e(static_cast<std::size_t>(nv), 0);
        e[i - 1] = k;
        r.add_term(e, pw);
        if (k < D) pw *= c;
    }
    return r;
}

// Truncation of 1 / (1 - x_i x_j): sum_{k<=D} x_i^k x_j^k.
inline XPoly geom_pair(int nv, int i, int j, int D) {
    XPoly r(nv);
    for (int k = 0; k <= D; ++k) {
        std::vector<int> e(static_cast<std::size_t>(nv), 0);
        e[i - 1] += k;
        e[j - 1] += k;
        r.add_term(e, APoly(Rational(1)));
    }
    return r;
}

// Re-index variables: old x_i becomes x_{i+offset} among `total` variables.
inline XPoly embed_vars(const XPoly& P, int total, int offset) {
    XPoly r(total);
    for (auto& [e, c] : P.terms()) {
        std::vector<int> f(static_cast<std::size_t>(total), 0);
        for (std::size_t i = 0; i < e.size(); ++i) f[i + offset] = e[i];
        r.add_term(f, c);
    }
    return r;
}

} // namespace detail

// Expansion of a symmetric polynomial in classical Schur polynomials by
// leading-term elimination.  A degree-truncated symmetric series is exact
// input: classical Schur polynomials are homogeneous, so truncation by total
// degree commutes with the expansion.
inline std::map<Partition, APoly> expand_classical_schur(const XPoly& P) {
    if (!P.is_symmetric()) throw NotSymmetric("expansion input is not symmetric");
    std::map<Partition, APoly> out;
    XPoly rem = P;
    while (!rem.is_zero()) {
        int d = rem.total_degree_x();
        const std::vector<int>* best = nullptr;
        for (auto& [e, c] : rem.terms()) {
            int s = 0;
            for (int v : e) s += v;
            if (s != d) continue;
            if (!best || e > *best) best = &e;
        }
        std::vector<int> exps = *best;
        for (std::size_t i = 0; i + 1 < exps.size(); ++i)
            if (exps[i] < exps[i + 1])
                throw NotSymmetric("leading monomial is not a partition");
        APoly c = rem.coeff(exps);
        Partition lam{std::vector<int>(exps)};
        auto it = out.find(lam);
        if (it == out.end()) out.emplace(lam, c); else it->second += c;
        rem -= classical_schur(SkewShape(lam, Partition{}), P.nvars()) * c;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

// ---------------------------------------------------------------------------
// Flagged coefficient polynomials phi and psi
// ---------------------------------------------------------------------------

namespace detail {

// Sum over flagged fillings of the products of parameter entries.
inline APoly flag_weight_sum(const std::vector<Cell>& cells,
                             const std::vector<std::pair<int, int>>& ranges,
                             Rule along, Rule down, ASeq seq) {
    APoly total;
    for (const auto& F : flagged_fillings(cells, ranges, along, down)) {
        APoly w(Rational(1));
        for (int v : F.values) w *= seq.at(v);
        total += w;
    }
    return total;
}

// Top part (rows 1..d) of the hook tableau family for phi: row i entries in
// {i - mu_i, ..., 0}, rows weakly increase, columns strictly increase.
inline APoly phi_top(const SkewShape& shape, int d, ASeq seq) {
    auto cells = skew_cells_top(shape, d);
    std::vector<std::pair<int, int>> ranges;
    for (const auto& c : cells) ranges.push_back({c.row - shape.inner.part(c.row), 0});
    return flag_weight_sum(cells, ranges, Rule::weak_inc, Rule::strict_inc, seq);
}

// Alternative column-flagged presentation of the same top part: column j
// entries in {mu'_j - j + 2, ..., 0}.
inline APoly phi_top_alt(const SkewShape& shape, int d, ASeq seq) {
    auto cells = skew_cells_top(shape, d);
    Partition muc = shape.inner.conjugate();
    std::vector<std::pair<int, int>> ranges;
    for (const auto& c : cells) ranges.push_back({muc.part(c.col) - c.col + 2, 0});
    return flag_weight_sum(cells, ranges, Rule::weak_inc, Rule::strict_inc, seq);
}

// Left part (columns 1..d) for phi: column j entries in {1, ..., mu'_j-j+1},
// rows strictly decrease, columns weakly decrease.
inline APoly phi_bottom(const SkewShape& shape, int d, ASeq seq) {
    auto cells = skew_cells_bottom(shape, d);
    Partition muc = shape.inner.conjugate();
    std::vector<std::pair<int, int>> ranges;
    for (const auto& c : cells) ranges.push_back({1, muc.part(c.col) - c.col + 1});
    return flag_weight_sum(cells, ranges, Rule::strict_dec, Rule::weak_dec, seq);
}

// Top part for psi: row i entries in {i - lambda_i + 1, ..., 0}, rows
// strictly decrease, columns weakly decrease.
inline APoly psi_top(const SkewShape& shape, int d, ASeq seq) {
    auto cells = skew_cells_top(shape, d);
    std::vector<std::pair<int, int>> ranges;
    for (const auto& c : cells) ranges.push_back({c.row - shape.outer.part(c.row) + 1, 0});
    return flag_weight_sum(cells, ranges, Rule::strict_dec, Rule::weak_dec, seq);
}

// Left part for psi: column j entries in {1, ..., lambda'_j - j}, rows
// weakly increase, columns strictly increase.
inline APoly psi_bottom(const SkewShape& shape, int d, ASeq seq) {
    auto cells = skew_cells_bottom(shape, d);
    Partition lamc = shape.outer.conjugate();
    std::vector<std::pair<int, int>> ranges;
    for (const auto& c : cells) ranges.push_back({1, lamc.part(c.col) - c.col});
    return flag_weight_sum(cells, ranges, Rule::weak_inc, Rule::strict_inc, seq);
}

// Alternative row-flagged presentation of the same left part: row i entries
// in {1, ..., i - lambda_i}.
inline APoly psi_bottom_alt(const SkewShape& shape, int d, ASeq seq) {
    auto cells = skew_cells_bottom(shape, d);
    std::vector<std::pair<int, int>> ranges;
    for (const auto& c : cells) ranges.push_back({1, c.row - shape.outer.part(c.row)});
    return flag_weight_sum(cells, ranges, Rule::weak_inc, Rule::strict_inc, seq);
}

} // namespace detail

// phi_{lambda/mu}(a): zero unless lambda contains mu with equal diagonal
// count; the hook-tableau weight sum, factored over the two disjoint regions.
inline APoly flagged_phi(const Partition& lam, const Partition& mu, ASeq seq = {}) {
    if (!lam.contains(mu)) return APoly();
    int d = lam.diagonal_count();
    if (d != mu.diagonal_count()) return APoly();
    SkewShape shape(lam, mu);
    return detail::phi_top(shape, d, seq) * detail::phi_bottom(shape, d, seq);
}
inline APoly flagged_phi(const SkewShape& shape, ASeq seq = {}) {
    return flagged_phi(shape.outer, shape.inner, seq);
}

// psi_{lambda/mu}(a): the dual hook-tableau weight sum, same conventions.
inline APoly flagged_psi(const Partition& lam, const Partition& mu, ASeq seq = {}) {
    if (!lam.contains(mu)) return APoly();
    int d = lam.diagonal_count();
    if (d != mu.diagonal_count()) return APoly();
    SkewShape shape(lam, mu);
    return detail::psi_top(shape, d, seq) * detail::psi_bottom(shape, d, seq);
}
inline APoly flagged_psi(const SkewShape& shape, ASeq seq = {}) {
    return flagged_psi(shape.outer, shape.inner, seq);
}

// Alternative flagged families (for cross-checks against the primary ones).
inline APoly flagged_phi_alt(const Partition& lam, const Partition& mu, ASeq seq = {}) {
    if (!lam.contains(mu)) return APoly();
    int d = lam.diagonal_count();
    if (d != mu.diagonal_count()) return APoly();
    SkewShape shape(lam, mu);
    return detail::phi_top_alt(shape, d, seq) * detail::phi_bottom(shape, d, seq);
}
inline APoly flagged_psi_alt(const Partition& lam, const Partition& mu, ASeq seq = {}) {
    if (!lam.contains(mu)) return APoly();
    int d = lam.diagonal_count();
    if (d != mu.diagonal_count()) return APoly();
    SkewShape shape(lam, mu);
    return detail::psi_top(shape, d, seq) * detail::psi_bottom_alt(shape, d, seq);
}

// ---------------------------------------------------------------------------
// Dual Schur series: four methods
// ---------------------------------------------------------------------------

enum class DualSchurMethod { flagged, determinant, combinatorial, alternant };

namespace detail {

// Coefficient of s_lambda(x) in the dual Schur series of mu by the
// determinant formula: sign times an h-determinant over the top d rows and
// an e-determinant over the remaining rows.
inline APoly dual_coeff_determinant(const Partition& lam, const Partition& mu, ASeq seq) {
    if (!lam.contains(mu)) return APoly();
    int d = lam.diagonal_count();
    if (d != mu.diagonal_count()) return APoly();
    int n = lam.length();
    // h-block, i,j = 1..d with parameter lists a_0, a_{-1}, ..., a_{j-mu_j}
    std::vector<std::vector<APoly>> H(d, std::vector<APoly>(d));
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            std::vector<APoly> vals;
            for (int k = 0; k >= j - mu.part(j); --k) vals.push_back(seq.at(k));
            H[i - 1][j - 1] = complete_sym(vals, lam.part(i) - mu.part(j) - i + j);
        }
    // e-block, i,j = d+1..n with parameter lists a_1, ..., a_{j-mu_j-1}
    int m = n - d;
    std::vector<std::vector<APoly>> E(m, std::vector<APoly>(m));
    for (int i = d + 1; i <= n; ++i)
        for (int j = d + 1; j <= n; ++j) {
            std::vector<APoly> vals;
            for (int k = 1; k <= j - mu.part(j) - 1; ++k) vals.push_back(seq.at(k));
            E[i - d - 1][j - d - 1] = elem_sym(vals, lam.part(i) - mu.part(j) - i + j);
        }
    APoly c = det_apoly(H) * det_apoly(E);
    if (SkewShape(lam, mu).boxes_below_row(d) % 2 == 1) c = -c;
    return c;
}

// Flagged-tableau coefficient of s_lambda(x) in the dual Schur series of mu.
inline APoly dual_coeff_flagged(const Partition& lam, const Partition& mu, ASeq seq) {
    APoly c = flagged_phi(lam, mu, seq);
    if (c.is_zero()) return c;
    if (SkewShape(lam, mu).boxes_below_row(lam.diagonal_count()) % 2 == 1) c = -c;
    return c;
}

// One factor X_t of the reverse-tableau weight, truncated at total degree D:
// x_t (1 - g x_{t-1}) ... (1 - g x_1) / ((1 - h x_t) ... (1 - h x_1)).
inline XPoly dual_x_factor(int n, int t, const APoly& g, const APoly& h, int D) {
    XPoly w = XPoly::var(n, t);
    for (int r = 1; r <= t - 1; ++r) {
        XPoly f = XPoly::constant(n, APoly(Rational(1))) -
                  XPoly::var(n, r) * g;
        w = mul_trunc(w, f, 1, n, D);
    }
    for (int r = 1; r <= t; ++r) w = mul_trunc(w, geom_series(n, r, h, D), 1, n, D);
    return w;
}

} // namespace detail

// The skew dual Schur series as a concrete truncated polynomial in n
// variables: sum over reverse tableaux of the truncated X-factor products.
inline XPoly skew_dual_schur_poly(const SkewShape& theta, int n, int D, ASeq seq = {}) {
    XPoly total(n);
    for (const auto& T : reverse_tableaux(theta, n)) {
        XPoly w = XPoly::constant(n, APoly(Rational(1)));
        for (std::size_t k = 0; k < T.cells.size(); ++k) {
            int t = T.entries[k].value;
            int c = T.cells[k].content();
            w = detail::mul_trunc(
                w, detail::dual_x_factor(n, t, seq.at(-c + 1), seq.at(-c), D), 1, n, D);
        }
        total += w;
    }
    return total;
}

// The dual Schur series as an alternant quotient: matrix entries are
// truncated at degree D + n(n-1)/2 per variable, the determinant is divided
// exactly by the Vandermonde determinant, and the quotient is truncated to D.
inline XPoly dual_schur_alternant_poly(const Partition& lam, int n, int D, ASeq seq = {}) {
    if (lam.length() > n) return XPoly(n);
    int d = lam.diagonal_count();
    int Dtot = D + n * (n - 1) / 2;
    std::vector<std::vector<XPoly>> M(n, std::vector<XPoly>(n, XPoly(n)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int r = lam.part(j) + n - j;
            XPoly f(n);
            std::vector<int> e(static_cast<std::size_t>(n), 0);
            e[i - 1] = r;
            f.add_term(e, APoly(Rational(1)));
            if (j <= d) {
                // divided by (1 - a_0 x_i)(1 - a_{-1} x_i)...(1 - a_{j-lam_j} x_i)
                for (int k = 0; k >= j - lam.part(j); --k)
                    f = detail::mul_trunc(f, detail::geom_series(n, i, seq.at(k), Dtot),
                                          i, i, Dtot);
            } else {
                // multiplied by (1 - a_1 x_i)...(1 - a_{j-lam_j-1} x_i)
                for (int k = 1; k <= j - lam.part(j) - 1; ++k)
                    f *= (XPoly::constant(n, APoly(Rational(1))) -
                          XPoly::var(n, i) * seq.at(k));
                f = detail::truncate_range(f, i, i, Dtot);
            }
            M[i - 1][j - 1] = f;
        }
    return detail::truncate_range(vandermonde_divide(det_xpoly(M, n)), 1, n, D);
}

// The dual Schur series of mu truncated at D, on the classical Schur basis.
// The flagged and determinant methods are stable (all lambda with |lambda|
// <= D); the combinatorial and alternant methods work at n variables and
// report coefficients on lambda with l(lambda) <= n.
inline SchurSeries dual_schur(const Partition& mu, int D,
                              DualSchurMethod method = DualSchurMethod::flagged,
                              int n = 0, ASeq seq = {}) {
    if (D < mu.size()) throw TruncationTooSmall("dual_schur: D < |mu|");
    SchurSeries out{SeriesBasis::classical_schur, D, {}};
    switch (method) {
    case DualSchurMethod::flagged:
    case DualSchurMethod::determinant: {
        for (const auto& lam : partitions_up_to(D)) {
            APoly c = (method == DualSchurMethod::flagged)
                          ? detail::dual_coeff_flagged(lam, mu, seq)
                          : detail::dual_coeff_determinant(lam, mu, seq);
            out.add(lam, c);
        }
        return out;
    }
    case DualSchurMethod::combinatorial: {
        if (n < mu.length()) throw std::invalid_argument("dual_schur: n < l(mu)");
        XPoly P = skew_dual_schur_poly(SkewShape(mu, Partition{}), n, D, seq);
        for (auto& [lam, c] : expand_classical_schur(P)) out.add(lam, c);
        return out;
    }
    case DualSchurMethod::alternant: {
        if (n < mu.length()) throw std::invalid_argument("dual_schur: n < l(mu)");
        XPoly P = dual_schur_alternant_poly(mu, n, D, seq);
        for (auto& [lam, c] : expand_classical_schur(P)) out.add(lam, c);
        return out;
    }
    }
    throw std::logic_error("unreachable");
}

// Expansion of the classical Schur function s_mu in dual Schur functions:
// sum over lambda containing mu (equal diagonal count) of
// (-1)^{m(lambda/mu)} psi_{lambda/mu}(a) on the dual basis, truncated at D.
inline SchurSeries schur_to_dual(const Partition& mu, int D, ASeq seq = {}) {
    if (D < mu.size()) throw TruncationTooSmall("schur_to_dual: D < |mu|");
    SchurSeries out{SeriesBasis::dual_schur, D, {}};
    for (const auto& lam : partitions_up_to(D)) {
        APoly c = flagged_psi(lam, mu, seq);
        if (c.is_zero()) continue;
        if (SkewShape(lam, mu).boxes_in_top_rows(lam.diagonal_count()) % 2 == 1) c = -c;
        out.add(lam, c);
    }
    return out;
}

// Basis conversions; mutually inverse up to the truncation degree.
inline SchurSeries to_classical_basis(const SchurSeries& s, ASeq seq = {}) {
    if (s.basis == SeriesBasis::classical_schur) return s;
    SchurSeries out{SeriesBasis::classical_schur, s.D, {}};
    for (auto& [mu, c] : s.coeffs)
        for (auto& [lam, t] : dual_schur(mu, s.D, DualSchurMethod::flagged, 0, seq).coeffs)
            out.add(lam, c * t);
    return out;
}

inline SchurSeries to_dual_basis(const SchurSeries& s, ASeq seq = {}) {
    if (s.basis == SeriesBasis::dual_schur) return s;
    SchurSeries out{SeriesBasis::dual_schur, s.D, {}};
    for (auto& [mu, c] : s.coeffs)
        for (auto& [lam, t] : schur_to_dual(mu, s.D, seq).coeffs)
            out.add(lam, c * t);
    return out;
}

// Truncated product.  On the classical basis the structure constants are the
// classical Littlewood-Richardson numbers; on the dual basis the product is
// computed through the classical basis and converted back.
inline SchurSeries series_mul(const SchurSeries& s, const SchurSeries& t, int D,
                              ASeq seq = {}) {
    if (s.basis != t.basis) throw WrongBasis("series_mul: mismatched bases");
    if (s.basis == SeriesBasis::dual_schur)
        return to_dual_basis(
            series_mul(to_classical_basis(s, seq), to_classical_basis(t, seq), D, seq), seq);
    SchurSeries out{SeriesBasis::classical_schur, D, {}};
    for (auto& [lam, cl] : s.coeffs)
        for (auto& [mu, cm] : t.coeffs) {
            int size = lam.size() + mu.size();
            if (size > D) continue;
            APoly c = cl * cm;
            for (const auto& nu : partitions_of(size)) {
                BigInt lr = lr_coefficient(lam, mu, nu);
                if (lr != 0) out.add(nu, c * Rational(lr));
            }
        }
    return out;
}

// ---------------------------------------------------------------------------
// Dual e/h generators and determinant formulas
// ---------------------------------------------------------------------------

enum class DualGen { e, h };

// Dual elementary / complete series with the parameter sequence tau^shift a.
inline SchurSeries dual_ehp(DualGen kind, int k, int shift, int D, ASeq seq = {}) {
    if (k < 0) return SchurSeries{SeriesBasis::classical_schur, D, {}};
    std::vector<int> parts;
    if (kind == DualGen::h && k > 0) parts.push_back(k);
    if (kind == DualGen::e) parts.assign(static_cast<std::size_t>(k), 1);
    return dual_schur(Partition(std::move(parts)), D, DualSchurMethod::flagged, 0,
                      seq.shifted(shift));
}

namespace detail {

// Determinant of a matrix of classical-basis series by cofactor expansion.
inline SchurSeries series_det(const std::vector<std::vector<SchurSeries>>& M, int D,
                              ASeq seq) {
    int k = static_cast<int>(M.size());
    SchurSeries one{SeriesBasis::classical_schur, D, {}};
    one.add(Partition{}, APoly(Rational(1)));
    if (k == 0) return one;
    std::function<SchurSeries(int, std::vector<int>&)> rec =
        [&](int row, std::vector<int>& rem) -> SchurSeries {
        if (row == k) return one;
        SchurSeries total{SeriesBasis::classical_schur, D, {}};
        for (std::size_t p = 0; p < rem.size(); ++p) {
            int c = rem[p];
            if (M[row][c].coeffs.empty()) continue;
            std::vector<int> next;
            for (std::size_t q = 0; q < rem.size(); ++q)
                if (q != p) next.push_back(rem[q]);
            SchurSeries contrib = series_mul(M[row][c], rec(row + 1, next), D, seq);
            for (auto& [lam, v] : contrib.coeffs)
                total.add(lam, p % 2 == 1 ? -v : v);
        }
        return total;
    };
    std::vector<int> cols(k);
    for (int c = 0; c < k; ++c) cols[c] = c;
    return rec(0, cols);
}

} // namespace detail

enum class DualDet { jacobi_trudi, nagelsbach_kostka, giambelli };

// Dual Jacobi-Trudi / Nagelsbach-Kostka / Giambelli determinants as
// classical-basis series truncated at D.
inline SchurSeries dual_determinants(const SkewShape& shape, int D, DualDet kind,
                                     ASeq seq = {}) {
    const Partition& lam = shape.outer;
    const Partition& mu = shape.inner;
    switch (kind) {
    case DualDet::jacobi_trudi: {
        int l = lam.length();
        std::vector<std::vector<SchurSeries>> M(
            l, std::vector<SchurSeries>(l, SchurSeries{SeriesBasis::classical_schur, D, {}}));
        for (int i = 1; i <= l; ++i)
            for (int j = 1; j <= l; ++j)
                M[i - 1][j - 1] = dual_ehp(DualGen::h, lam.part(i) - mu.part(j) - i + j,
                                           -mu.part(j) + j - 1, D, seq);
        return detail::series_det(M, D, seq);
    }
    case DualDet::nagelsbach_kostka: {
        Partition lc = lam.conjugate(), mc = mu.conjugate();
        int m = lc.length();
        std::vector<std::vector<SchurSeries>> M(
            m, std::vector<SchurSeries>(m, SchurSeries{SeriesBasis::classical_schur, D, {}}));
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j)
                M[i - 1][j - 1] = dual_ehp(DualGen::e, lc.part(i) - mc.part(j) - i + j,
                                           mc.part(j) - j + 1, D, seq);
        return detail::series_det(M, D, seq);
    }
    case DualDet::giambelli: {
        if (!mu.parts().empty())
            throw std::invalid_argument("giambelli applies to nonskew shapes");
        FrobeniusCoords f = FrobeniusCoords::of(lam);
        int d = static_cast<int>(f.alpha.size());
        std::vector<std::vector<SchurSeries>> M(
            d, std::vector<SchurSeries>(d, SchurSeries{SeriesBasis::classical_schur, D, {}}));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                M[i][j] = dual_schur(hook_partition(f.alpha[i], f.beta[j]), D,
                                     DualSchurMethod::flagged, 0, seq);
        return detail::series_det(M, D, seq);
    }
    }
    throw std::logic_error("unreachable");
}

// The skew dual Schur series expanded on the classical Schur basis
// (coefficients on lambda with l(lambda) <= n), truncated at D.
//
// This is the reverse-tableau sum over the skew shape multiplied by the
// inner-shape coupling factor prod_{i,t} (1 - a_i x_t)/(1 - a_{i-mu_i} x_t):
// splitting a straight-shape tableau on a concatenated alphabet into an inner
// part (late variables) and a skew part (early variables) leaves exactly this
// factor attached to the inner cells, and it is this product that expands
// through the Littlewood-Richardson polynomials on the dual basis.
inline SchurSeries skew_dual_schur(const SkewShape& theta, int D, int n, ASeq seq = {}) {
    XPoly P = skew_dual_schur_poly(theta, n, D, seq);
    const Partition& mu = theta.inner;
    for (int i = 1; i <= mu.length(); ++i)
        for (int t = 1; t <= n; ++t) {
            XPoly lin = XPoly::constant(n, APoly(Rational(1))) - XPoly::var(n, t) * seq.at(i);
            P = detail::mul_trunc(P, lin, 1, n, D);
            P = detail::mul_trunc(P, detail::geom_series(n, t, seq.at(i - mu.part(i)), D), 1,
                                  n, D);
        }
    SchurSeries out{SeriesBasis::classical_schur, D, {}};
    for (auto& [lam, c] : expand_classical_schur(P)) out.add(lam, c);
    return out;
}

// The omega-hat involution on classical-basis series: s_lambda goes to
// s_{lambda'} with coefficients unchanged as polynomials (the result is
// understood against the primed parameter sequence).
inline SchurSeries omega_hat(const SchurSeries& s) {
    if (s.basis != SeriesBasis::classical_schur)
        throw WrongBasis("omega_hat requires the classical Schur basis");
    SchurSeries out{SeriesBasis::classical_schur, s.D, {}};
    for (auto& [lam, c] : s.coeffs) out.add(lam.conjugate(), c);
    return out;
}

// ---------------------------------------------------------------------------
// Cauchy-kernel verification harness
// ---------------------------------------------------------------------------

namespace detail {

// (y_i, a)^r = y_i^r / ((1 - a_0 y_i)(1 - a_{-1} y_i) ... (1 - a_{1-r} y_i)),
// truncated at degree D; `i` indexes among nv variables.
inline XPoly dual_power_factor(int nv, int i, int r, int D, ASeq seq) {
    XPoly f(nv);
    std::vector<int> e(static_cast<std::size_t>(nv), 0);
    e[i - 1] = r;
    f.add_term(e, APoly(Rational(1)));
    for (int k = 0; k >= 1 - r; --k)
        f = mul_trunc(f, geom_series(nv, i, seq.at(k), D), 1, nv, D);
    return truncate_range(f, 1, nv, D);
}

} // namespace dsym::detail

// The dual monomial series in explicit variables: sum over the distinct
// arrangements of the parts of lambda into n slots of the products of the
// factors (y_i, a)^{beta_i}, truncated at D.
inline XPoly dual_monomial_poly(const Partition& lam, int n, int D, ASeq seq = {}) {
    XPoly total(n);
    if (lam.length() > n) return total;
    std::vector<int> beta(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= lam.length(); ++i) beta[i - 1] = lam.part(i);
    std::sort(beta.begin(), beta.end());
    do {
        XPoly w = XPoly::constant(n, APoly(Rational(1)));
        for (int i = 1; i <= n; ++i) {
            if (beta[i - 1] == 0) continue;
            w = detail::mul_trunc(w, detail::dual_power_factor(n, i, beta[i - 1], D, seq),
                                  1, n, D);
        }
        total += w;
    } while (std::next_permutation(beta.begin(), beta.end()));
    return total;
}

struct CauchyReport {
    struct Item {
        std::string name;
        bool pass = false;
        std::string detail; // first differing coefficient when failing
    };
    std::vector<Item> items;

    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
};

namespace detail {

inline CauchyReport::Item compare_kernels(const std::string& name, const XPoly& lhs,
                                          const XPoly& rhs) {
    CauchyReport::Item item;
    item.name = name;
    XPoly diff = lhs - rhs;
    if (diff.is_zero()) {
        item.pass = true;
        return item;
    }
    auto& [e, c] = *diff.terms().begin();
    std::ostringstream out;
    out << "first differing coefficient at x-exponent (";
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? "," : "") << e[i];
    out << "): " << c.to_string();
    item.detail = out.str();
    return item;
}

} // namespace detail

// Expands the Cauchy kernels at n variables per alphabet to degree D in the
// dual-side variables and compares them against the basis decompositions:
// the Schur pairing, the h / dual-monomial pairing, the power-sum pairing,
// the supersymmetric and conjugated kernels, and the twisted kernels.
inline CauchyReport cauchy_check(int n, int D, ASeq seq = {}) {
    CauchyReport report;
    int nv = 2 * n;
    int ylo = n + 1, yhi = 2 * n;
    auto truncy = [&](const XPoly& P) { return detail::truncate_range(P, ylo, yhi, D); };

    // Kernel prod_{i,j} (1 - a_i y_j) / (1 - x_i y_j), truncated in y.
    XPoly kernel = XPoly::constant(nv, APoly(Rational(1)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            XPoly lin = XPoly::constant(nv, APoly(Rational(1))) -
                        XPoly::var(nv, n + j) * seq.at(i);
            kernel = detail::mul_trunc(kernel, lin, ylo, yhi, D);
            kernel = detail::mul_trunc(kernel, detail::geom_pair(nv, i, n + j, D),
                                       ylo, yhi, D);
        }

    auto partitions = partitions_up_to(D);

    // 1. sum of s_lambda(x||a) shat_lambda(y||a)
    {
        XPoly rhs(nv);
        for (const auto& lam : partitions) {
            XPoly sx = double_schur_tableau(lam, n, seq);
            if (sx.is_zero()) continue;
            XPoly sy = skew_dual_schur_poly(SkewShape(lam, Partition{}), n, D, seq);
            if (sy.is_zero()) continue;
            rhs += detail::mul_trunc(detail::embed_vars(sx, nv, 0),
                                     detail::embed_vars(sy, nv, n), ylo, yhi, D);
        }
        report.items.push_back(detail::compare_kernels("schur_pairing", kernel, truncy(rhs)));
    }

    // 2. sum of h_lambda(x||a) mhat_lambda(y||a)
    {
        XPoly rhs(nv);
        for (const auto& lam : partitions) {
            if (lam.length() > n) continue;
            XPoly my = dual_monomial_poly(lam, n, D, seq);
            if (my.is_zero()) continue;
            XPoly hx = XPoly::constant(n, APoly(Rational(1)));
            for (int part : lam.parts())
                hx *= skew_tableau_poly(SkewShape(Partition{part}, Partition{}), n, seq);
            rhs += detail::mul_trunc(detail::embed_vars(hx, nv, 0),
                                     detail::embed_vars(my, nv, n), ylo, yhi, D);
        }
        report.items.push_back(detail::compare_kernels("h_mhat_pairing", kernel, truncy(rhs)));
    }

    // 3. sum of z_lambda^{-1} p_lambda(x||a) p_lambda(y)
    {
        XPoly rhs(nv);
        for (const auto& lam : partitions) {
            XPoly px = XPoly::constant(n, APoly(Rational(1)));
            XPoly py = XPoly::constant(n, APoly(Rational(1)));
            for (int part : lam.parts()) {
                XPoly pa(n);
                XPoly pk(n);
                for (int i = 1; i <= n; ++i) {
                    pa += XPoly::var(n, i).pow(part) -
                          XPoly::constant(n, seq.at(i).pow(part));
                    pk += XPoly::var(n, i).pow(part);
                }
                px *= pa;
                py *= pk;
            }
            Rational z(z_lambda(lam));
            rhs += detail::mul_trunc(detail::embed_vars(px, nv, 0),
                                     detail::embed_vars(py, nv, n), ylo, yhi, D) *
                   APoly(Rational(1) / z);
        }
        report.items.push_back(detail::compare_kernels("p_p_pairing", kernel, truncy(rhs)));
    }

    // 4/5. supersymmetric kernels in three alphabets x, y, z:
    //      prod (1 + y_i z_j)/(1 - x_i z_j) = sum s_lambda(x/y||a) shat_lambda(z||a)
    //      prod (1 + x_i z_j)/(1 - y_i z_j) = sum s_lambda(x/y||a) shat_{lambda'}(z||a')
    {
        int tv = 3 * n;
        int zlo = 2 * n + 1, zhi = 3 * n;
        XPoly ker_a = XPoly::constant(tv, APoly(Rational(1)));
        XPoly ker_b = XPoly::constant(tv, APoly(Rational(1)));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                XPoly yz(tv), xz(tv);
                {
                    std::vector<int> e(static_cast<std::size_t>(tv), 0);
                    e[n + i - 1] = 1;
                    e[2 * n + j - 1] = 1;
                    yz.add_term(e, APoly(Rational(1)));
                }
                {
                    std::vector<int> e(static_cast<std::size_t>(tv), 0);
                    e[i - 1] = 1;
                    e[2 * n + j - 1] = 1;
                    xz.add_term(e, APoly(Rational(1)));
                }
                XPoly one = XPoly::constant(tv, APoly(Rational(1)));
                ker_a = detail::mul_trunc(ker_a, one + yz, zlo, zhi, D);
                ker_a = detail::mul_trunc(ker_a, detail::geom_pair(tv, i, 2 * n + j, D),
                                          zlo, zhi, D);
                ker_b = detail::mul_trunc(ker_b, one + xz, zlo, zhi, D);
                ker_b = detail::mul_trunc(ker_b, detail::geom_pair(tv, n + i, 2 * n + j, D),
                                          zlo, zhi, D);
            }
        XPoly rhs_a(tv), rhs_b(tv);
        for (const auto& lam : partitions) {
            XPoly sxy = supersymmetric_schur(SkewShape(lam, Partition{}), n, n,
                                             SuperOrder::Aprime, seq);
            if (sxy.is_zero()) continue;
            XPoly sxy3 = detail::embed_vars(sxy, tv, 0);
            XPoly sz = skew_dual_schur_poly(SkewShape(lam, Partition{}), n, D, seq);
            if (!sz.is_zero())
                rhs_a += detail::mul_trunc(sxy3, detail::embed_vars(sz, tv, 2 * n),
                                           zlo, zhi, D);
            XPoly szc = skew_dual_schur_poly(SkewShape(lam.conjugate(), Partition{}), n, D,
                                             seq.primed());
            if (!szc.is_zero())
                rhs_b += detail::mul_trunc(sxy3, detail::embed_vars(szc, tv, 2 * n),
                                           zlo, zhi, D);
        }
        report.items.push_back(detail::compare_kernels(
            "super_kernel", detail::truncate_range(ker_a, zlo, zhi, D),
            detail::truncate_range(rhs_a, zlo, zhi, D)));
        report.items.push_back(detail::compare_kernels(
            "super_kernel_conjugate", detail::truncate_range(ker_b, zlo, zhi, D),
            detail::truncate_range(rhs_b, zlo, zhi, D)));
    }

    // Twisted kernel prod (1 + x_i y_j)/(1 + a_i y_j), truncated in y.
    XPoly twisted = XPoly::constant(nv, APoly(Rational(1)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            XPoly lin = XPoly::constant(nv, APoly(Rational(1)));
            {
                std::vector<int> e(static_cast<std::size_t>(nv), 0);
                e[i - 1] = 1;
                e[n + j - 1] = 1;
                lin.add_term(e, APoly(Rational(1)));
            }
            twisted = detail::mul_trunc(twisted, lin, ylo, yhi, D);
            twisted = detail::mul_trunc(twisted, detail::geom_series(nv, n + j, -seq.at(i), D),
                                        ylo, yhi, D);
        }

    // 6. sum of s_lambda(x||a) shat_{lambda'}(y||a')
    {
        XPoly rhs(nv);
        for (const auto& lam : partitions) {
            XPoly sx = double_schur_tableau(lam, n, seq);
            if (sx.is_zero()) continue;
            XPoly sy = skew_dual_schur_poly(SkewShape(lam.conjugate(), Partition{}), n, D,
                                            seq.primed());
            if (sy.is_zero()) continue;
            rhs += detail::mul_trunc(detail::embed_vars(sx, nv, 0),
                                     detail::embed_vars(sy, nv, n), ylo, yhi, D);
        }
        report.items.push_back(
            detail::compare_kernels("conjugate_kernel", twisted, truncy(rhs)));
    }

    // 7. sum of e_lambda(x||a) mhat_lambda(y||a')
    {
        XPoly rhs(nv);
        for (const auto& lam : partitions) {
            if (lam.part(1) > n) continue; // e_k(x||a) = 0 beyond n
            XPoly my = dual_monomial_poly(lam, n, D, seq.primed());
            if (my.is_zero()) continue;
            XPoly ex = XPoly::constant(n, APoly(Rational(1)));
            for (int part : lam.parts())
                ex *= skew_tableau_poly(
                    SkewShape(Partition(std::vector<int>(static_cast<std::size_t>(part), 1)),
                              Partition{}),
                    n, seq);
            rhs += detail::mul_trunc(detail::embed_vars(ex, nv, 0),
                                     detail::embed_vars(my, nv, n), ylo, yhi, D);
        }
        report.items.push_back(
            detail::compare_kernels("twisted_e_mhat", twisted, truncy(rhs)));
    }

    // 8. sum of epsilon_lambda z_lambda^{-1} p_lambda(x||a) p_lambda(y)
    {
        XPoly rhs(nv);
        for (const auto& lam : partitions) {
            XPoly px = XPoly::constant(n, APoly(Rational(1)));
            XPoly py = XPoly::constant(n, APoly(Rational(1)));
            for (int part : lam.parts()) {
                XPoly pa(n);
                XPoly pk(n);
                for (int i = 1; i <= n; ++i) {
                    pa += XPoly::var(n, i).pow(part) -
                          XPoly::constant(n, seq.at(i).pow(part));
                    pk += XPoly::var(n, i).pow(part);
                }
                px *= pa;
                py *= pk;
            }
            Rational z(z_lambda(lam));
            Rational eps = ((lam.size() - lam.length()) % 2 == 1) ? Rational(-1) : Rational(1);
            rhs += detail::mul_trunc(detail::embed_vars(px, nv, 0),
                                     detail::embed_vars(py, nv, n), ylo, yhi, D) *
                   APoly(eps / z);
        }
        report.items.push_back(
            detail::compare_kernels("twisted_p_p", twisted, truncy(rhs)));
    }

    return report;
}

} // namespace dsym
