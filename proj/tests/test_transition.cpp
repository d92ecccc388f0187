#include <doctest.h>

#include "dsym/transition.hpp"

using namespace dsym;

namespace {
APoly a(int i) { return APoly::var(i); }

// Classical monomial symmetric polynomial m_lam(x_1..x_n) with rational
// coefficients, built directly from the distinct permutations of lam.
XPoly classical_monomial(const Partition& lam, int n) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= lam.length(); ++i) e[static_cast<std::size_t>(i - 1)] = lam.part(i);
    std::sort(e.begin(), e.end());
    XPoly total(n);
    do {
        total.add_term(e, APoly(Rational(1)));
    } while (std::next_permutation(e.begin(), e.end()));
    return total;
}
} // namespace

TEST_CASE("kostka dual polynomials") {
    // golden value by both methods: the three-term contraction
    // sum_rho c^{(3,2)}_{(3) rho}(a) c^rho_{(2)(1)}(a) over rho = (2), (2,1), (3)
    APoly expect = APoly(Rational(2)) * a(-2) - a(1) - a(2);
    CHECK(lr_polynomial(Partition{2}, Partition{1}, Partition{2}) == a(-1) - a(1));
    CHECK(lr_polynomial(Partition{3}, Partition{2, 1}, Partition{3, 2}) == a(-2) - a(2));
    CHECK(lr_polynomial(Partition{3}, Partition{3}, Partition{3, 2}) == a(-2) - a(-1));
    CHECK(kostka_dual(Partition{3, 2}, Partition{3, 2, 1}) == expect);
    CHECK(kostka_dual(Partition{3, 2}, Partition{3, 2, 1},
                      KostkaDualMethod::iterated_lr) == expect);
    CHECK(kostka_dual(Partition{1}, Partition{1}) == APoly(Rational(1)));
    // the two methods agree, with triangularity and classical limits
    for (const auto& mu : partitions_up_to(4))
        for (const auto& lam : partitions_up_to(4)) {
            APoly k = kostka_dual(lam, mu);
            CHECK(k == kostka_dual(lam, mu, KostkaDualMethod::iterated_lr));
            if (!k.is_zero()) CHECK(lam.size() <= mu.size());
            if (lam.size() == mu.size())
                CHECK(k == APoly(Rational(classical_kostka_count(lam, mu))));
            else
                CHECK(k.evaluate(ASpec::zero()) == 0);
        }
}

TEST_CASE("kostka polynomials") {
    // golden values: coefficients of hhat_1^2 on the dual basis
    CHECK(kostka(Partition{2}, Partition{1, 1}, 2) == APoly(Rational(1)));
    CHECK(kostka(Partition{1, 1}, Partition{1, 1}, 2) == APoly(Rational(1)));
    CHECK(kostka(Partition{3}, Partition{1, 1}, 3) == a(0) - a(-1));
    CHECK(kostka(Partition{2, 1}, Partition{1, 1}, 3) == a(0) - a(1));
    CHECK(kostka(Partition{1, 1, 1}, Partition{1, 1}, 3) == a(2) - a(1));
    CHECK(kostka(Partition{4}, Partition{1, 1}, 4) == (a(0) - a(-2)) * (a(0) - a(-1)));
    CHECK(kostka(Partition{3, 1}, Partition{1, 1}, 4) == (a(0) - a(1)) * (a(0) - a(-1)));
    CHECK(kostka(Partition{2, 2}, Partition{1, 1}, 4) == (a(0) - a(1)) * (a(0) - a(1)));
    CHECK(kostka(Partition{2, 1, 1}, Partition{1, 1}, 4) == (a(1) - a(0)) * (a(1) - a(2)));
    CHECK(kostka(Partition{1, 1, 1, 1}, Partition{1, 1}, 4) == (a(1) - a(2)) * (a(1) - a(3)));
    CHECK_THROWS_AS(kostka(Partition{3}, Partition{1, 1}, 2), TruncationTooSmall);
    // classical-basis coefficients of hhat_1^2 up to degree 4
    SchurSeries h1 = dual_ehp(DualGen::h, 1, 0, 4);
    SchurSeries sq = series_mul(h1, h1, 4);
    CHECK(sq.coeff(Partition{2}) == APoly(Rational(1)));
    CHECK(sq.coeff(Partition{1, 1}) == APoly(Rational(1)));
    CHECK(sq.coeff(Partition{3}) == APoly(Rational(2)) * a(0));
    CHECK(sq.coeff(Partition{2, 1}) == APoly(Rational(2)) * (a(0) - a(1)));
    CHECK(sq.coeff(Partition{1, 1, 1}) == APoly(Rational(-2)) * a(1));
    CHECK(sq.coeff(Partition{4}) == APoly(Rational(3)) * a(0) * a(0));
    CHECK(sq.coeff(Partition{3, 1}) ==
          APoly(Rational(3)) * a(0) * a(0) - APoly(Rational(4)) * a(0) * a(1));
    CHECK(sq.coeff(Partition{2, 2}) ==
          a(0) * a(0) + a(1) * a(1) - APoly(Rational(2)) * a(0) * a(1));
    CHECK(sq.coeff(Partition{2, 1, 1}) ==
          APoly(Rational(3)) * a(1) * a(1) - APoly(Rational(4)) * a(0) * a(1));
    CHECK(sq.coeff(Partition{1, 1, 1, 1}) == APoly(Rational(3)) * a(1) * a(1));
    // triangularity and classical limits
    for (const auto& mu : partitions_up_to(4))
        for (const auto& lam : partitions_up_to(4)) {
            APoly k = kostka(lam, mu, 4);
            if (!k.is_zero()) CHECK(lam.size() >= mu.size());
            if (lam.size() == mu.size())
                CHECK(k == APoly(Rational(classical_kostka_count(lam, mu))));
            else
                CHECK(k.evaluate(ASpec::zero()) == 0);
        }
}

TEST_CASE("character polynomials") {
    CHECK(char_poly(Partition{1}, Partition{1}) == APoly(Rational(1)));
    CHECK(char_poly(Partition{3, 2}, Partition{2, 1, 1, 1}) == APoly(Rational(1)));
    CHECK(char_dual(Partition{3, 2}, Partition{2, 1, 1, 1}) == APoly(Rational(1)));
    // classical limits: both reduce to Murnaghan-Nakayama when sizes match,
    // and chi^lam_{(1^n)} is the number of standard tableaux
    for (int s = 1; s <= 4; ++s)
        for (const auto& lam : partitions_of(s)) {
            std::vector<int> ones(static_cast<std::size_t>(s), 1);
            Partition col{std::move(ones)};
            CHECK(char_poly(lam, col) ==
                  APoly(Rational(dim_skew_enumerate(SkewShape(lam, Partition{})))));
            for (const auto& mu : partitions_of(s)) {
                APoly chi(Rational(mn_character(lam, mu)));
                CHECK(char_poly(lam, mu) == chi);
                CHECK(char_dual(lam, mu) == chi);
            }
        }
    // orthogonality through the pairing:
    // sum_lam chi^lam_mu(a) chi-hat^lam_nu(a) = delta_{mu nu} z_mu
    for (const auto& mu : partitions_up_to(4)) {
        if (mu.length() == 0) continue;
        for (const auto& nu : partitions_up_to(mu.size())) {
            if (nu.length() == 0) continue;
            APoly sum;
            for (int s = nu.size(); s <= mu.size(); ++s)
                for (const auto& lam : partitions_of(s))
                    sum += char_poly(lam, mu) * char_dual(lam, nu);
            APoly expect = (mu == nu) ? APoly(Rational(z_lambda(mu))) : APoly();
            CHECK(sum == expect);
        }
    }
}

TEST_CASE("double monomial functions") {
    auto unit = [](const Partition& p, int n) {
        DoubleSym u;
        u.n = n;
        u.add(p, APoly(Rational(1)));
        return u;
    };
    CHECK(double_monomial(Partition{1}) == unit(Partition{1}, 1));
    CHECK(double_monomial(Partition{1, 1}) == unit(Partition{1, 1}, 2));
    DoubleSym m2 = double_monomial(Partition{2});
    CHECK(m2.coeff(Partition{2}) == APoly(Rational(1)));
    CHECK(m2.coeff(Partition{1, 1}) == APoly(Rational(-1)));
    CHECK(m2.coeffs.size() == 2);
    DoubleSym m111 = double_monomial(Partition{1, 1, 1});
    CHECK(m111.coeff(Partition{1, 1, 1}) == APoly(Rational(1)));
    CHECK(m111.coeff(Partition{1, 1}) == a(1) - a(2));
    CHECK(m111.coeffs.size() == 2);
    DoubleSym m21 = double_monomial(Partition{2, 1});
    CHECK(m21.coeff(Partition{2, 1}) == APoly(Rational(1)));
    CHECK(m21.coeff(Partition{1, 1, 1}) == APoly(Rational(-2)));
    CHECK(m21.coeff(Partition{1, 1}) == APoly(Rational(2)) * a(2) - a(1) - a(0));
    CHECK(m21.coeffs.size() == 3);
    DoubleSym m3 = double_monomial(Partition{3});
    CHECK(m3.coeff(Partition{3}) == APoly(Rational(1)));
    CHECK(m3.coeff(Partition{2, 1}) == APoly(Rational(-1)));
    CHECK(m3.coeff(Partition{1, 1, 1}) == APoly(Rational(1)));
    // forced by the values K_{(3)(2,1)} = K_{(3)(1^3)} = 1, K_{(3)(1^2)} =
    // a_0 - a_{-1} together with the smaller monomial expansions
    CHECK(m3.coeff(Partition{1, 1}) == a(-1) - a(2));
    CHECK(m3.coeffs.size() == 4);
    // the K matrix and the m expansions are mutually inverse:
    // sum_mu K_{lam,mu}(a) m_mu = s_lam, sizes <= 4
    for (const auto& lam : partitions_up_to(4)) {
        std::map<Partition, APoly> total;
        for (const auto& mu : partitions_up_to(lam.size())) {
            APoly k = kostka(lam, mu, lam.size());
            if (k.is_zero()) continue;
            for (auto& [kap, c] : double_monomial(mu).coeffs) {
                total[kap] += k * c;
                if (total[kap].is_zero()) total.erase(kap);
            }
        }
        CHECK(total.size() == 1);
        CHECK(total[lam] == APoly(Rational(1)));
    }
    // specialization a = 0 recovers the classical monomial polynomials
    for (const auto& lam : partitions_up_to(4)) {
        if (lam.length() == 0) continue;
        DoubleSym m = double_monomial(lam);
        ASpec zero = ASpec::zero();
        XPoly val = double_sym_to_xpoly(m).map_coeffs(
            [&](const APoly& c) { return APoly(c.evaluate(zero)); });
        CHECK(val == classical_monomial(lam, m.n));
    }
}

TEST_CASE("double forgotten functions and pairing") {
    DoubleSym f1 = double_forgotten(Partition{1});
    CHECK(f1.coeff(Partition{1}) == APoly(Rational(1)));
    CHECK(f1.coeffs.size() == 1);
    // pairing orthogonality <m_lam, hhat_mu> = delta and <f_lam, ehat_mu> = delta
    int D = 3;
    auto gen_series = [&](DualGen kind, const Partition& mu) {
        SchurSeries prod{SeriesBasis::classical_schur, D, {}};
        prod.add(Partition{}, APoly(Rational(1)));
        for (int i = 1; i <= mu.length(); ++i)
            prod = series_mul(prod, dual_ehp(kind, mu.part(i), 0, D), D);
        return to_dual_basis(prod);
    };
    for (const auto& lam : partitions_up_to(3))
        for (const auto& mu : partitions_up_to(3)) {
            APoly expect = (lam == mu) ? APoly(Rational(1)) : APoly();
            CHECK(pairing(double_monomial(lam), gen_series(DualGen::h, mu)) == expect);
            CHECK(pairing(double_forgotten(lam), gen_series(DualGen::e, mu)) == expect);
        }
    CHECK_THROWS_AS(pairing(double_monomial(Partition{2}),
                            dual_schur(Partition{1}, 2)),
                    WrongBasis);
    // omega sends p_lam(x||a) to epsilon_lam p_lam(x||a'): the coefficient
    // of s_{kappa'}(x||a') in the image equals epsilon_lam times the
    // coefficient of s_kappa(x||a) in the source, with the coefficient
    // polynomials transported identically
    for (const auto& lam : partitions_up_to(3)) {
        if (lam.length() == 0) continue;
        int n = std::max(1, lam.size());
        auto p_product = [&](ASeq seq) {
            XPoly P = XPoly::constant(n, APoly(Rational(1)));
            for (int i = 1; i <= lam.length(); ++i) {
                int k = lam.part(i);
                XPoly pk(n);
                for (int t = 1; t <= n; ++t)
                    pk += XPoly::var(n, t).pow(k) - XPoly::constant(n, seq.at(t).pow(k));
                P = P * pk;
            }
            return P;
        };
        DoubleSym src = detail::expand_elimination(p_product(ASeq{}), ASeq{});
        DoubleSym img;
        img.n = src.n;
        for (auto& [kap, c] : src.coeffs) img.add(kap.conjugate(), c);
        DoubleSym expect =
            detail::expand_elimination(p_product(ASeq{}.primed()), ASeq{}.primed());
        if ((lam.size() - lam.length()) % 2 == 1)
            for (auto& [kap, c] : expect.coeffs) c = -c;
        CHECK(img == expect);
    }
}

TEST_CASE("phi and psi transition matrices") {
    // the signed psi and phi matrices are mutually inverse up to degree 6
    TransitionMatrix Psi = psi_matrix(6);
    TransitionMatrix Phi = phi_matrix(6);
    CHECK(is_identity(matrix_mul(Phi, Psi)));
    CHECK(is_identity(matrix_mul(Psi, Phi)));
    // diagonal entries are 1
    for (const auto& lam : Psi.shapes) {
        CHECK(Psi.entry(lam, lam) == APoly(Rational(1)));
        CHECK(Phi.entry(lam, lam) == APoly(Rational(1)));
    }
    // frobenius specialization gives rationals with power-of-two denominators
    ASpec fr = ASpec::frobenius();
    for (const auto& lam : partitions_up_to(4))
        for (const auto& mu : partitions_up_to(lam.size())) {
            if (!lam.contains(mu) || lam.diagonal_count() != mu.diagonal_count())
                continue;
            if (lam.size() - mu.size() > 3) continue;
            BigInt den = boost::multiprecision::denominator(
                flagged_psi(lam, mu).evaluate(fr));
            while (den % 2 == 0) den /= 2;
            CHECK(den == 1);
        }
}

TEST_CASE("supersymmetric expansions") {
    int n = 2;
    for (const auto& lam : partitions_up_to(3)) {
        SuperExpansion ex = super_expansions(lam);
        CHECK(ex.psi.at(lam) == APoly(Rational(1)));
        CHECK(ex.phi.at(lam) == APoly(Rational(1)));
        // s_lam(x/y||a) = sum_mu psi[mu] s_mu(x/y) at nx = ny = 2
        XPoly lhs = supersymmetric_schur(SkewShape(lam, Partition{}), n, n, SuperOrder::A);
        XPoly rhs(2 * n);
        for (auto& [mu, c] : ex.psi)
            rhs += classical_super_schur(SkewShape(mu, Partition{}), n, n) * c;
        CHECK(lhs == rhs);
        // s_lam(x||a) = sum_mu psi[mu] s_mu(x/-a^+) at nx = 2
        XPoly dbl(n);
        for (auto& [mu, c] : ex.psi) dbl += super_schur_neg_a(mu, n, n) * c;
        CHECK(dbl == double_schur_tableau(lam, n));
    }
}

TEST_CASE("hook identities") {
    // pi and kappa spot values
    CHECK(pi_mu(Partition{2, 1, 1, 1}, Partition{1}) == Rational(1));
    CHECK(pi_mu(Partition{2, 1, 1, 1}, Partition{1, 1}) == Rational(32));
    CHECK(pi_mu(Partition{2, 1, 1, 1}, Partition{3, 2}) == Rational(125));
    CHECK(pi_mu(Partition{}, Partition{2}) == Rational(1));
    // the six-term evaluation of chi^{(3,2)}_{(2,1,1,1)}
    CHECK(hook_chi(Partition{3, 2}, Partition{2, 1, 1, 1}) == Rational(1));
    // full reports against the oracles at size 4
    for (const auto& lam : partitions_of(4))
        for (const auto& mu : partitions_of(4))
            CHECK(hook_identities(lam, mu).all_pass());
    // Littlewood-Richardson hook identity for |nu| <= 4
    for (const auto& nu : partitions_up_to(4))
        for (const auto& lam : partitions_up_to(nu.size()))
            for (const auto& mu : partitions_of(nu.size() - lam.size()))
                CHECK(hook_lr_identity(lam, mu, nu).pass);
    // shifted specialization: s_mu(a_nu||a) = H_nu / H_{nu/mu} at a_i = -i+1
    for (const auto& nu : partitions_up_to(5))
        for (const auto& mu : partitions_up_to(nu.size())) {
            if (!nu.contains(mu)) continue;
            Rational expect = hook_product(SkewShape(nu, Partition{})) /
                              hook_product(SkewShape(nu, mu));
            CHECK(shifted_schur_value(mu, nu) == expect);
        }
}
