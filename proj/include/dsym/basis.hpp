#pragma once

/*
 * basis.hpp
 * ---------
 * Expansion of symmetric polynomials in the double Schur basis (leading-term
 * elimination and the interpolation recurrence), Littlewood-Richardson
 * polynomials, the duality map on expansions, the difference-basis rewriting
 * used for positivity reporting, and numeric evaluation of the rational
 * chain-sum interpolation formulas.
 */

#include "double_schur.hpp"

namespace dsym {

// Finite linear combination of double Schur basis elements at ambient n.
struct DoubleSym {
    int n = 0;
    std::map<Partition, APoly> coeffs;

    void add(const Partition& lam, const APoly& c) {
        if (c.is_zero()) return;
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

    friend bool operator==(const DoubleSym& a, const DoubleSym& b) {
        return a.n == b.n && a.coeffs == b.coeffs;
    }
};

// Materialize a DoubleSym as a concrete polynomial.
inline XPoly double_sym_to_xpoly(const DoubleSym& u, ASeq seq = {}) {
    XPoly total(u.n);
    for (auto& [lam, c] : u.coeffs) total += double_schur_tableau(lam, u.n, seq) * c;
    return total;
}

// |a_nu| - |a_mu| as the finite linear form sum_i (a_{i-nu_i} - a_{i-mu_i}).
inline APoly omega_weight(const Partition& nu, const Partition& mu, ASeq seq = {}) {
    int L = std::max(nu.length(), mu.length());
    APoly w;
    for (int i = 1; i <= L; ++i) w += seq.at(i - nu.part(i)) - seq.at(i - mu.part(i));
    return w;
}

enum class ExpandMethod { elimination, recurrence };

namespace detail {

// Leading-term elimination: repeatedly match the lexicographically largest
// monomial of top x-degree against the classical leading term x^lambda of
// s_lambda(x||a) and subtract.
inline DoubleSym expand_elimination(const XPoly& P, ASeq seq) {
    if (!P.is_symmetric()) throw NotSymmetric("expansion input is not symmetric");
    DoubleSym out;
    out.n = P.nvars();
    XPoly rem = P;
    while (!rem.is_zero()) {
        int d = rem.total_degree_x();
        // lexicographically largest exponent vector among top-degree terms
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
        out.add(lam, c);
        rem -= double_schur_tableau(lam, out.n, seq) * c;
    }
    return out;
}

} // namespace detail

// All coefficients c_{P,mu}^{nu}(a) of P * s_mu = sum_nu c * s_nu via the
// interpolation recurrence; nu runs over partitions with
// |mu| <= |nu| <= |mu| + deg P and l(nu) <= n.
inline std::map<Partition, APoly> interpolation_coeffs(const XPoly& P, const Partition& mu,
                                                       ASeq seq = {}) {
    if (!P.is_symmetric()) throw NotSymmetric("expansion input is not symmetric");
    int n = P.nvars();
    int maxgap = std::max(0, P.total_degree_x());
    std::map<std::pair<Partition, Partition>, APoly> cache;
    std::function<APoly(const Partition&, const Partition&)> c =
        [&](const Partition& sig, const Partition& nu) -> APoly {
        if (!nu.contains(sig)) return APoly();
        auto key = std::make_pair(sig, nu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        APoly val;
        if (sig == nu) {
            val = evaluate_at(P, a_mu_point(sig, n, seq));
        } else {
            APoly num;
            for (const auto& sp : sig.add_box())
                if (nu.contains(sp)) num += c(sp, nu);
            for (const auto& nm : nu.remove_box())
                if (nm.contains(sig)) num -= c(sig, nm);
            val = num.is_zero() ? APoly() : exact_div_linear(num, omega_weight(nu, sig, seq));
        }
        cache.emplace(key, val);
        return val;
    };
    std::map<Partition, APoly> out;
    for (int s = mu.size(); s <= mu.size() + maxgap; ++s)
        for (const auto& nu : partitions_of(s)) {
            if (nu.length() > n || !nu.contains(mu)) continue;
            APoly v = c(mu, nu);
            if (!v.is_zero()) out.emplace(nu, v);
        }
    return out;
}

inline DoubleSym expand_in_double_schur(const XPoly& P,
                                        ExpandMethod method = ExpandMethod::elimination,
                                        ASeq seq = {}) {
    if (method == ExpandMethod::elimination) return detail::expand_elimination(P, seq);
    DoubleSym out;
    out.n = P.nvars();
    for (auto& [nu, c] : interpolation_coeffs(P, Partition{}, seq)) out.add(nu, c);
    return out;
}

// Product of two double-Schur expansions, re-expanded in the basis.
inline DoubleSym double_sym_mul(const DoubleSym& u, const DoubleSym& v, ASeq seq = {}) {
    return expand_in_double_schur(double_sym_to_xpoly(u, seq) * double_sym_to_xpoly(v, seq),
                                  ExpandMethod::elimination, seq);
}

// Littlewood-Richardson polynomial c_{lambda mu}^{nu}(a).
inline APoly lr_polynomial(const Partition& lam, const Partition& mu, const Partition& nu,
                           ASeq seq = {}) {
    if (!nu.contains(mu) || !nu.contains(lam)) return APoly();
    if (nu.size() > lam.size() + mu.size()) return APoly();
    int n = std::max({lam.length(), mu.length(), nu.length()}) + 1;
    XPoly prod = double_schur_tableau(lam, n, seq) * double_schur_tableau(mu, n, seq);
    return detail::expand_elimination(prod, seq).coeff(nu);
}

// The duality map on expansions: s_lambda(x||a) -> s_{lambda'}(x||a') with
// coefficients passed through a -> a'.  The result is understood in the
// primed basis; applying the map twice gives back the input.
inline DoubleSym omega_a(const DoubleSym& u) {
    DoubleSym out;
    out.n = u.n;
    for (auto& [lam, c] : u.coeffs) out.add(lam.conjugate(), c.dualize());
    return out;
}

// ---------------------------------------------------------------------------
// Difference-basis rewriting (positivity reporting)
// ---------------------------------------------------------------------------

// Rewrite p in the differences d_j = a_j - a_{j+1}: substitute
// a_i = d_i + d_{i+1} + ... + d_{M-1} with M the largest index present
// (a_M -> 0).  The returned APoly's variable index j stands for d_j.
inline APoly graham_rewrite(const APoly& p) {
    auto top = p.max_index();
    if (!top) return p;
    int M = *top;
    APoly out;
    for (auto& [m, c] : p.terms()) {
        APoly term(c);
        for (auto& [i, e] : m.exps) {
            APoly repl;
            for (int j = i; j <= M - 1; ++j) repl += APoly::var(j);
            term *= repl.pow(e);
        }
        out += term;
    }
    return out;
}

// Substitute d_j = a_j - a_{j+1} back; inverse of graham_rewrite up to the
// a_M = 0 normalization (exact inverse on polynomials in the differences).
inline APoly graham_unrewrite(const APoly& q) {
    APoly out;
    for (auto& [m, c] : q.terms()) {
        APoly term(c);
        for (auto& [j, e] : m.exps) term *= (APoly::var(j) - APoly::var(j + 1)).pow(e);
        out += term;
    }
    return out;
}

// True when every coefficient of the difference-basis form is a nonnegative
// integer.  Round-trip consistency is asserted.
inline bool graham_positive(const APoly& p) {
    APoly g = graham_rewrite(p);
    if (graham_unrewrite(g) != p)
        throw std::logic_error("difference-basis rewrite failed to round-trip");
    for (auto& [m, c] : g.terms())
        if (c < 0 || rat_den(c) != 1) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Rational chain-sum interpolation formulas, evaluated numerically
// ---------------------------------------------------------------------------

enum class InterpKind { kostka_dual, character, dual_lr, lr };

namespace detail {

inline Rational a_rho_sum_value(const Partition& rho, const ASpec& spec, int L) {
    Rational s = 0;
    for (int i = 1; i <= L; ++i) s += spec.value(i - rho.part(i));
    return s;
}

// Chain sum: sum over chains start -> ... -> end of sum_k
// P(a_{rho^{(k)}}) / prod_{j != k} (|a_{rho^{(k)}}| - |a_{rho^{(j)}}|).
inline Rational chain_sum(const XPoly& P, const Partition& start, const Partition& end,
                          const ASpec& spec) {
    int n = P.nvars();
    Rational total = 0;
    for (const auto& R : growth_chains(start, end)) {
        int l = R.length();
        std::vector<Rational> omega; // |a_{rho^{(k)}}|, common truncation
        int L = std::max(n, end.length());
        for (const auto& rho : R.chain) omega.push_back(a_rho_sum_value(rho, spec, L));
        for (int k = 0; k <= l; ++k) {
            const Partition& rho = R.chain[k];
            std::vector<Rational> pt;
            for (int i = 1; i <= n; ++i) pt.push_back(spec.value(i - rho.part(i)));
            Rational num = P.evaluate_numeric(pt, spec);
            Rational den = 1;
            for (int j = 0; j <= l; ++j) {
                if (j == k) continue;
                Rational d = omega[k] - omega[j];
                if (d == 0) throw DegenerateSpec("vanishing denominator |a_rho| - |a_sigma|");
                den *= d;
            }
            total += num / den;
        }
    }
    return total;
}

} // namespace detail

// Numeric evaluation of the rational interpolation expressions for the
// transition coefficients.  Meaning of the partition arguments:
//   kostka_dual: K-hat_{lambda mu}(a), chains empty -> lambda, P = h_mu
//   character:   chi^lambda_mu(a),    chains empty -> lambda, P = p_mu
//   dual_lr:     c-hat^nu_{lambda mu}(a), chains empty -> lambda, P = s_{nu/mu}
//   lr:          c^nu_{lambda mu}(a), chains mu -> nu, P = s_lambda
inline Rational rational_interpolation_eval(InterpKind kind, const Partition& lam,
                                            const Partition& mu, const Partition& nu,
                                            const ASpec& spec) {
    switch (kind) {
    case InterpKind::kostka_dual: {
        int n = std::max(lam.length(), mu.length()) + 1;
        XPoly P = XPoly::constant(n, APoly(Rational(1)));
        for (int part : mu.parts()) P *= double_h(part, n);
        return detail::chain_sum(P, Partition{}, lam, spec);
    }
    case InterpKind::character: {
        int n = std::max(lam.length(), mu.length()) + 1;
        XPoly P = XPoly::constant(n, APoly(Rational(1)));
        for (int part : mu.parts()) P *= double_p(part, n);
        return detail::chain_sum(P, Partition{}, lam, spec);
    }
    case InterpKind::dual_lr: {
        if (!nu.contains(mu)) return 0;
        int n = std::max({lam.length(), mu.length(), nu.length()}) + 1;
        XPoly P = skew_double_schur(SkewShape(nu, mu), n);
        return detail::chain_sum(P, Partition{}, lam, spec);
    }
    case InterpKind::lr: {
        if (!nu.contains(mu)) return 0;
        int n = std::max({lam.length(), mu.length(), nu.length()}) + 1;
        XPoly P = double_schur_tableau(lam, n);
        return detail::chain_sum(P, mu, nu, spec);
    }
    }
    throw std::logic_error("unreachable");
}

} // namespace dsym
