#pragma once

/*
 * transition.hpp
 * --------------
 * Kostka-type and character polynomials, double monomial and forgotten
 * functions, supersymmetric <-> classical expansion coefficients, graded
 * transition matrices, and the hook-product summation identities, together
 * with the pairing between the two rings.
 */

#include "duallr.hpp"

namespace dsym {

// ---------------------------------------------------------------------------
// Kostka-type polynomials
// ---------------------------------------------------------------------------

enum class KostkaDualMethod { expansion, iterated_lr };

// K-hat_{lam,mu}(a): coefficient of s_lam(x||a) in h_mu(x||a).  Zero unless
// |lam| <= |mu|; equals the classical Kostka number when |lam| = |mu|.
// The expansion method multiplies out the h-generators and eliminates; the
// iterated method contracts mu one row at a time through the
// Littlewood-Richardson polynomials.
inline APoly kostka_dual(const Partition& lam, const Partition& mu,
                         KostkaDualMethod method = KostkaDualMethod::expansion,
                         ASeq seq = {}) {
    if (lam.size() > mu.size()) return APoly();
    if (method == KostkaDualMethod::expansion) {
        int n = std::max({1, mu.size(), lam.length()});
        XPoly P = XPoly::constant(n, APoly(Rational(1)));
        for (int i = 1; i <= mu.length(); ++i)
            P = P * skew_tableau_poly(SkewShape(Partition{mu.part(i)}, Partition{}), n, seq);
        return detail::expand_elimination(P, seq).coeff(lam);
    }
    // iterated LR: K-hat_{lam,mu} = sum_rho c^lam_{(mu_1) rho}(a) K-hat_{rho, mu-}
    std::function<APoly(const Partition&, std::size_t)> rec =
        [&](const Partition& target, std::size_t row) -> APoly {
        if (row == static_cast<std::size_t>(mu.length()))
            return target.length() == 0 ? APoly(Rational(1)) : APoly();
        Partition head{mu.part(static_cast<int>(row) + 1)};
        APoly total;
        for (const auto& rho : partitions_up_to(target.size())) {
            if (!target.contains(rho)) continue;
            APoly c = lr_polynomial(head, rho, target, seq);
            if (c.is_zero()) continue;
            APoly tail = rec(rho, row + 1);
            if (!tail.is_zero()) total += c * tail;
        }
        return total;
    };
    return rec(lam, 0);
}

// K_{lam,mu}(a): coefficient of shat_lam(y||a) in hhat_mu(y||a), computed by
// dual-series multiplication followed by conversion to the dual basis.
// Zero unless |lam| >= |mu|; classical Kostka number when |lam| = |mu|.
inline APoly kostka(const Partition& lam, const Partition& mu, int D, ASeq seq = {}) {
    if (D < lam.size()) throw TruncationTooSmall("kostka: D < |lambda|");
    if (lam.size() < mu.size()) return APoly();
    SchurSeries prod{SeriesBasis::classical_schur, D, {}};
    prod.add(Partition{}, APoly(Rational(1)));
    for (int i = 1; i <= mu.length(); ++i)
        prod = series_mul(prod, dual_ehp(DualGen::h, mu.part(i), 0, D, seq), D, seq);
    return to_dual_basis(prod, seq).coeff(lam);
}

// ---------------------------------------------------------------------------
// Character polynomials
// ---------------------------------------------------------------------------

// chi^lam_mu(a): coefficient of s_lam(x||a) in p_mu(x||a); zero unless
// |lam| <= |mu|, classical character when |lam| = |mu|.
inline APoly char_poly(const Partition& lam, const Partition& mu, ASeq seq = {}) {
    if (lam.size() > mu.size()) return APoly();
    int n = std::max({1, mu.size(), lam.length()});
    XPoly P = XPoly::constant(n, APoly(Rational(1)));
    for (int i = 1; i <= mu.length(); ++i) {
        int k = mu.part(i);
        XPoly pk(n);
        for (int t = 1; t <= n; ++t)
            pk += XPoly::var(n, t).pow(k) - XPoly::constant(n, seq.at(t).pow(k));
        P = P * pk;
    }
    return detail::expand_elimination(P, seq).coeff(lam);
}

// chi-hat^lam_mu(a): coefficient of shat_lam(y||a) in p_mu(y), via the signed
// psi-contraction of classical characters over rho contained in lam with
// |rho| = |mu| and equal diagonal count.  Zero unless |lam| >= |mu|.
inline APoly char_dual(const Partition& lam, const Partition& mu, ASeq seq = {}) {
    if (lam.size() < mu.size()) return APoly();
    int d = lam.diagonal_count();
    APoly total;
    for (const auto& rho : partitions_of(mu.size())) {
        if (!lam.contains(rho)) continue;
        BigInt chi = mn_character(rho, mu);
        if (chi == 0) continue;
        APoly psi = flagged_psi(lam, rho, seq);
        if (psi.is_zero()) continue;
        if (SkewShape(lam, rho).boxes_in_top_rows(d) % 2 == 1) psi = -psi;
        total += psi * APoly(Rational(chi));
    }
    return total;
}

// ---------------------------------------------------------------------------
// Double monomial and forgotten functions
// ---------------------------------------------------------------------------

// m_lam(x||a) on the double Schur basis, solved from the graded-triangular
// system s_nu(x||a) = sum_mu K_{nu,mu}(a) m_mu(x||a) by back-substitution.
inline DoubleSym double_monomial(const Partition& lam, ASeq seq = {}) {
    int n = std::max(1, lam.size());
    std::map<Partition, DoubleSym> memo;
    std::function<const DoubleSym&(const Partition&)> solve =
        [&](const Partition& nu) -> const DoubleSym& {
        auto it = memo.find(nu);
        if (it != memo.end()) return it->second;
        DoubleSym m;
        m.n = n;
        m.add(nu, APoly(Rational(1)));
        for (const auto& mu : partitions_up_to(nu.size())) {
            if (mu == nu) continue;
            APoly k = kostka(nu, mu, nu.size(), seq);
            if (k.is_zero()) continue;
            for (auto& [kap, c] : solve(mu).coeffs) m.add(kap, -(k * c));
        }
        return memo.emplace(nu, std::move(m)).first->second;
    };
    return solve(lam);
}

// f_lam(x||a) on the double Schur basis: the omega-image of the double
// monomial function over the primed sequence, so that <f_lam, ehat_mu> =
// delta.  Since the primed expansion already carries its coefficients as
// plain polynomials in the a-variables, the omega step only conjugates the
// basis partitions (the coefficients are transported identically).
inline DoubleSym double_forgotten(const Partition& lam, ASeq seq = {}) {
    DoubleSym m = double_monomial(lam, seq.primed());
    DoubleSym f;
    f.n = m.n;
    for (auto& [kap, c] : m.coeffs) f.add(kap.conjugate(), c);
    return f;
}

// ---------------------------------------------------------------------------
// Pairing
// ---------------------------------------------------------------------------

// <u, v> for u on the double Schur basis and v a dual-basis series:
// sum over lam of u_lam * v_lam, using <s_lam(x||a), shat_mu(y||a)> = delta.
inline APoly pairing(const DoubleSym& u, const SchurSeries& v) {
    if (v.basis != SeriesBasis::dual_schur)
        throw WrongBasis("pairing: series must be on the dual basis");
    APoly total;
    for (auto& [lam, c] : u.coeffs) {
        if (lam.size() > v.D)
            throw TruncationTooSmall("pairing: series truncated below |lambda|");
        total += c * v.coeff(lam);
    }
    return total;
}

// ---------------------------------------------------------------------------
// Graded transition matrices
// ---------------------------------------------------------------------------

// Square matrix indexed by all partitions of size <= s in graded order
// (by size, then reverse-lexicographic).
struct TransitionMatrix {
    std::vector<Partition> shapes;
    std::vector<std::vector<APoly>> entries;

    int index(const Partition& p) const {
        for (std::size_t i = 0; i < shapes.size(); ++i)
            if (shapes[i] == p) return static_cast<int>(i);
        throw std::invalid_argument("partition not in matrix range");
    }

    const APoly& entry(const Partition& r, const Partition& c) const {
        return entries[static_cast<std::size_t>(index(r))][static_cast<std::size_t>(index(c))];
    }
};

inline std::vector<Partition> graded_partitions(int s) {
    std::vector<Partition> all = partitions_up_to(s);
    std::sort(all.begin(), all.end(), graded_less);
    return all;
}

namespace detail {

inline TransitionMatrix build_matrix(int s,
                                     const std::function<APoly(const Partition&,
                                                               const Partition&)>& f) {
    TransitionMatrix M;
    M.shapes = graded_partitions(s);
    M.entries.assign(M.shapes.size(), std::vector<APoly>(M.shapes.size()));
    for (std::size_t r = 0; r < M.shapes.size(); ++r)
        for (std::size_t c = 0; c < M.shapes.size(); ++c)
            M.entries[r][c] = f(M.shapes[r], M.shapes[c]);
    return M;
}

} // namespace detail

// Rows lam, columns mu; K-hat_{lam,mu}(a).
inline TransitionMatrix kostka_dual_matrix(int s, ASeq seq = {}) {
    return detail::build_matrix(
        s, [&](const Partition& l, const Partition& m) { return kostka_dual(l, m, KostkaDualMethod::expansion, seq); });
}

// Rows lam, columns mu; K_{lam,mu}(a) at truncation degree s.
inline TransitionMatrix kostka_matrix(int s, ASeq seq = {}) {
    return detail::build_matrix(
        s, [&](const Partition& l, const Partition& m) { return kostka(l, m, s, seq); });
}

// Rows = outer shape lam, columns = inner shape mu.  psi_matrix holds the
// signed coefficients (-1)^{m(lam/mu)} psi_{lam/mu}(a) (which expand
// s_lam(x/y||a) over s_mu(x/y), and equally s_mu(y) over shat_lam(y||a));
// phi_matrix holds (-1)^{n(lam/mu)} phi_{lam/mu}(a) (expanding shat_mu(y||a)
// over s_lam(y)).  The two matrices are mutually inverse: Phi * Psi =
// Psi * Phi = identity.
inline TransitionMatrix psi_matrix(int s, ASeq seq = {}) {
    return detail::build_matrix(s, [&](const Partition& l, const Partition& m) {
        if (!l.contains(m) || l.diagonal_count() != m.diagonal_count()) return APoly();
        APoly c = flagged_psi(l, m, seq);
        if (SkewShape(l, m).boxes_in_top_rows(l.diagonal_count()) % 2 == 1) c = -c;
        return c;
    });
}

inline TransitionMatrix phi_matrix(int s, ASeq seq = {}) {
    return detail::build_matrix(s, [&](const Partition& l, const Partition& m) {
        if (!l.contains(m) || l.diagonal_count() != m.diagonal_count()) return APoly();
        APoly c = flagged_phi(l, m, seq);
        if (SkewShape(l, m).boxes_below_row(l.diagonal_count()) % 2 == 1) c = -c;
        return c;
    });
}

inline TransitionMatrix transpose(const TransitionMatrix& M) {
    TransitionMatrix T;
    T.shapes = M.shapes;
    T.entries.assign(M.shapes.size(), std::vector<APoly>(M.shapes.size()));
    for (std::size_t r = 0; r < M.shapes.size(); ++r)
        for (std::size_t c = 0; c < M.shapes.size(); ++c) T.entries[r][c] = M.entries[c][r];
    return T;
}

inline TransitionMatrix matrix_mul(const TransitionMatrix& A, const TransitionMatrix& B) {
    if (A.shapes != B.shapes) throw std::invalid_argument("matrix_mul: index mismatch");
    TransitionMatrix C;
    C.shapes = A.shapes;
    C.entries.assign(A.shapes.size(), std::vector<APoly>(A.shapes.size()));
    for (std::size_t r = 0; r < A.shapes.size(); ++r)
        for (std::size_t k = 0; k < A.shapes.size(); ++k) {
            if (A.entries[r][k].is_zero()) continue;
            for (std::size_t c = 0; c < A.shapes.size(); ++c)
                C.entries[r][c] += A.entries[r][k] * B.entries[k][c];
        }
    return C;
}

inline bool is_identity(const TransitionMatrix& M) {
    for (std::size_t r = 0; r < M.shapes.size(); ++r)
        for (std::size_t c = 0; c < M.shapes.size(); ++c) {
            if (r == c && !(M.entries[r][c] == APoly(Rational(1)))) return false;
            if (r != c && !M.entries[r][c].is_zero()) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Supersymmetric <-> classical expansion coefficients
// ---------------------------------------------------------------------------

// For a fixed outer shape lam: psi[mu] = (-1)^{m(lam/mu)} psi_{lam/mu}(a) so
// that s_lam(x/y||a) = sum_mu psi[mu] s_mu(x/y), and
// phi[mu] = (-1)^{n(lam/mu)} phi_{lam/mu}(a) so that
// s_mu(x/y) = sum_lam phi[mu](for each outer lam) s_lam(x/y||a).
// Both families range over mu contained in lam with equal diagonal count.
struct SuperExpansion {
    std::map<Partition, APoly> psi;
    std::map<Partition, APoly> phi;
};

inline SuperExpansion super_expansions(const Partition& lam, ASeq seq = {}) {
    SuperExpansion out;
    int d = lam.diagonal_count();
    for (const auto& mu : partitions_up_to(lam.size())) {
        if (!lam.contains(mu) || mu.diagonal_count() != d) continue;
        APoly ps = flagged_psi(lam, mu, seq);
        if (!ps.is_zero()) {
            if (SkewShape(lam, mu).boxes_in_top_rows(d) % 2 == 1) ps = -ps;
            out.psi.emplace(mu, ps);
        }
        APoly ph = flagged_phi(lam, mu, seq);
        if (!ph.is_zero()) {
            if (SkewShape(lam, mu).boxes_below_row(d) % 2 == 1) ph = -ph;
            out.phi.emplace(mu, ph);
        }
    }
    return out;
}

// Classical supersymmetric Schur polynomial s_theta(x/y) at (nx, ny)
// variables: the multiparameter polynomial with every a_i set to zero.
inline XPoly classical_super_schur(const SkewShape& theta, int nx, int ny) {
    ASpec zero = ASpec::zero();
    return supersymmetric_schur(theta, nx, ny, SuperOrder::A)
        .map_coeffs([&](const APoly& c) { return APoly(c.evaluate(zero)); });
}

// s_mu(x / -a^+) at nx x-variables: the classical supersymmetric polynomial
// in (x_1..x_nx / y_1..y_ny) with y_j = -a_j substituted.
inline XPoly super_schur_neg_a(const Partition& mu, int nx, int ny, ASeq seq = {}) {
    XPoly P = classical_super_schur(SkewShape(mu, Partition{}), nx, ny);
    for (int j = ny; j >= 1; --j) {
        P = P.substitute_var(nx + j, -seq.at(j));
        P = P.drop_last_var();
    }
    return P;
}

// ---------------------------------------------------------------------------
// Hook-product summation identities
// ---------------------------------------------------------------------------

// pi_mu(rho) = prod over part sizes k of mu (with multiplicity) of
// (1-rho_1)^k + ... + (l-rho_l)^k - 1^k - ... - l^k, with l = l(rho).
inline Rational pi_mu(const Partition& mu, const Partition& rho) {
    int l = rho.length();
    Rational total(1);
    for (int idx = 1; idx <= mu.length(); ++idx) {
        int k = mu.part(idx);
        Rational base(0);
        for (int i = 1; i <= l; ++i) {
            base += rat_pow(Rational(i - rho.part(i)), k);
            base -= rat_pow(Rational(i), k);
        }
        total *= base;
    }
    return total;
}

// kappa_mu(rho) = prod over part sizes k of mu (with multiplicity) of
// sum_{l(rho) >= i_1 >= ... >= i_k >= 1} rho_{i_1}(rho_{i_2}-1)...(rho_{i_k}-k+1).
inline Rational kappa_mu(const Partition& mu, const Partition& rho) {
    int l = rho.length();
    Rational total(1);
    for (int idx = 1; idx <= mu.length(); ++idx) {
        int k = mu.part(idx);
        std::function<Rational(int, int)> rec = [&](int bound, int depth) -> Rational {
            if (depth == k) return Rational(1);
            Rational sum(0);
            for (int i = 1; i <= bound; ++i)
                sum += Rational(rho.part(i) - depth) * rec(i, depth + 1);
            return sum;
        };
        total *= rec(l, 0);
    }
    return total;
}

// chi^lam_mu = sum_{rho in lam} (-1)^{|rho|} pi_mu(rho) / (H_rho H_{lam/rho});
// requires |lam| = |mu|.
inline Rational hook_chi(const Partition& lam, const Partition& mu) {
    Rational total(0);
    for (const auto& rho : partitions_up_to(lam.size())) {
        if (!lam.contains(rho)) continue;
        Rational term = pi_mu(mu, rho) /
                        (hook_product(SkewShape(rho, Partition{})) *
                         hook_product(SkewShape(lam, rho)));
        total += (rho.size() % 2 == 1) ? -term : term;
    }
    return total;
}

// K_{lam,mu} = sum_{rho in lam} (-1)^{|lam/rho|} kappa_mu(rho) /
// (H_rho H_{lam/rho}); requires |lam| = |mu|.
inline Rational hook_kostka(const Partition& lam, const Partition& mu) {
    Rational total(0);
    for (const auto& rho : partitions_up_to(lam.size())) {
        if (!lam.contains(rho)) continue;
        Rational term = kappa_mu(mu, rho) /
                        (hook_product(SkewShape(rho, Partition{})) *
                         hook_product(SkewShape(lam, rho)));
        total += ((lam.size() - rho.size()) % 2 == 1) ? -term : term;
    }
    return total;
}

// c^nu_{lam,mu} = sum over rho with lam, mu in rho in nu of
// (-1)^{|nu/rho|} H_rho / (H_{nu/rho} H_{rho/lam} H_{rho/mu});
// requires |nu| = |lam| + |mu|.
inline Rational hook_lr(const Partition& lam, const Partition& mu, const Partition& nu) {
    Rational total(0);
    for (const auto& rho : partitions_up_to(nu.size())) {
        if (!nu.contains(rho) || !rho.contains(lam) || !rho.contains(mu)) continue;
        Rational term = hook_product(SkewShape(rho, Partition{})) /
                        (hook_product(SkewShape(nu, rho)) *
                         hook_product(SkewShape(rho, lam)) *
                         hook_product(SkewShape(rho, mu)));
        total += ((nu.size() - rho.size()) % 2 == 1) ? -term : term;
    }
    return total;
}

// Number of semistandard tableaux of shape lam and content mu (classical
// Kostka number), as an independent oracle.
inline BigInt classical_kostka_count(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size()) return 0;
    int n = std::max(1, mu.length());
    BigInt count = 0;
    for (const auto& T : semistandard_tableaux(SkewShape(lam, Partition{}), n)) {
        std::vector<int> content(static_cast<std::size_t>(n), 0);
        for (const auto& e : T.entries) ++content[static_cast<std::size_t>(e.value - 1)];
        bool match = true;
        for (int i = 1; i <= n; ++i)
            if (content[static_cast<std::size_t>(i - 1)] != mu.part(i)) {
                match = false;
                break;
            }
        if (match) ++count;
    }
    return count;
}

// Report comparing the hook-sum identities against independent oracles
// (Murnaghan-Nakayama characters and semistandard tableau counts).
struct HookReport {
    struct Item {
        std::string name;
        Rational computed;
        Rational oracle;
        bool pass = false;
    };
    std::vector<Item> items;

    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
};

inline HookReport hook_identities(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size())
        throw std::invalid_argument("hook_identities: |lambda| != |mu|");
    HookReport rep;
    Rational chi = hook_chi(lam, mu);
    rep.items.push_back({"character", chi, Rational(mn_character(lam, mu)),
                         chi == Rational(mn_character(lam, mu))});
    Rational ko = hook_kostka(lam, mu);
    rep.items.push_back({"kostka", ko, Rational(classical_kostka_count(lam, mu)),
                         ko == Rational(classical_kostka_count(lam, mu))});
    return rep;
}

inline HookReport::Item hook_lr_identity(const Partition& lam, const Partition& mu,
                                         const Partition& nu) {
    if (nu.size() != lam.size() + mu.size())
        throw std::invalid_argument("hook_lr_identity: |nu| != |lambda| + |mu|");
    Rational c = hook_lr(lam, mu, nu);
    Rational oracle(lr_coefficient(lam, mu, nu));
    return {"littlewood-richardson", c, oracle, c == oracle};
}

// s_mu(a_nu || a) under the shifted specialization a_i = -i + 1; for
// mu contained in nu this equals H_nu / H_{nu/mu}.
inline Rational shifted_schur_value(const Partition& mu, const Partition& nu) {
    int n = std::max({1, mu.length(), nu.length()});
    XPoly P = double_schur_tableau(mu, n);
    return evaluate_at(P, a_mu_point(nu, n)).evaluate(ASpec::shifted());
}

} // namespace dsym
