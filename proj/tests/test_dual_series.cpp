#include <doctest.h>

#include "dsym/dual_series.hpp"

using namespace dsym;

namespace {
APoly a(int i) { return APoly::var(i); }

// h_p(a_{i0}, a_{i0-1}, ..., a_{i1}) over a descending index range.
APoly h_range(int p, int i0, int i1) {
    std::vector<APoly> vals;
    for (int k = i0; k >= i1; --k) vals.push_back(a(k));
    return complete_sym(vals, p);
}
// e_q(a_{i0}, a_{i0+1}, ..., a_{i1}) over an ascending index range.
APoly e_range(int q, int i0, int i1) {
    std::vector<APoly> vals;
    for (int k = i0; k <= i1; ++k) vals.push_back(a(k));
    return elem_sym(vals, q);
}
} // namespace

TEST_CASE("flagged phi and psi golden values") {
    // empty skew shapes
    for (const auto& lam : partitions_up_to(4)) {
        CHECK(flagged_phi(lam, lam) == APoly(Rational(1)));
        CHECK(flagged_psi(lam, lam) == APoly(Rational(1)));
    }
    // mismatched diagonal counts or non-containment give zero
    CHECK(flagged_phi(Partition{2, 2}, Partition{1}) == APoly());
    CHECK(flagged_psi(Partition{2, 2}, Partition{1}) == APoly());
    CHECK(flagged_phi(Partition{1}, Partition{2}) == APoly());

    // hook case phi_{(p+1,1^q)/(1)} = a_0^p a_1^q
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; p + q <= 3; ++q) {
            std::vector<int> parts{p + 1};
            for (int i = 0; i < q; ++i) parts.push_back(1);
            Partition lam(parts);
            CHECK(flagged_phi(lam, Partition{1}) == a(0).pow(p) * a(1).pow(q));
            // psi_{(p+1,1^q)/(1)} = a_0 a_{-1}...a_{1-p} * a_1 a_2...a_q
            APoly expect(Rational(1));
            for (int k = 0; k >= 1 - p; --k) expect *= a(k);
            for (int k = 1; k <= q; ++k) expect *= a(k);
            CHECK(flagged_psi(lam, Partition{1}) == expect);
        }
}

TEST_CASE("flagged families: alternative presentations agree") {
    for (const auto& lam : partitions_up_to(5))
        for (const auto& mu : partitions_up_to(lam.size())) {
            if (!lam.contains(mu)) continue;
            CHECK(flagged_phi(lam, mu) == flagged_phi_alt(lam, mu));
            CHECK(flagged_psi(lam, mu) == flagged_psi_alt(lam, mu));
        }
}

TEST_CASE("flagged families: conjugation factorizations") {
    // phi_{lam/mu}(a) = (-1)^{n(lam/mu)} phi_top(lam/mu)(a) phi_top(lam'/mu')(a')
    // and the dual psi statement with the bottom parts and m(lam/mu).
    for (const auto& lam : partitions_up_to(5))
        for (const auto& mu : partitions_up_to(lam.size())) {
            if (!lam.contains(mu)) continue;
            int d = lam.diagonal_count();
            if (d != mu.diagonal_count()) continue;
            SkewShape shape(lam, mu);
            SkewShape cshape(lam.conjugate(), mu.conjugate());
            {
                APoly lhs = detail::phi_bottom(shape, d, ASeq{});
                APoly rhs = detail::phi_top(cshape, d, ASeq{}.primed());
                if (shape.boxes_below_row(d) % 2 == 1) rhs = -rhs;
                CHECK(lhs == rhs);
            }
            {
                APoly lhs = detail::psi_top(shape, d, ASeq{});
                APoly rhs = detail::psi_bottom(cshape, d, ASeq{}.primed());
                if (shape.boxes_in_top_rows(d) % 2 == 1) rhs = -rhs;
                CHECK(lhs == rhs);
            }
        }
}

TEST_CASE("dual schur series golden values") {
    // shat_emptyset = 1
    SchurSeries one = dual_schur(Partition{}, 3);
    CHECK(one.coeffs.size() == 1);
    CHECK(one.coeff(Partition{}) == APoly(Rational(1)));

    // shat_(1): coefficient of s_(p+1,1^q) is (-1)^q a_0^p a_1^q
    SchurSeries s1 = dual_schur(Partition{1}, 5);
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; p + q <= 4; ++q) {
            APoly expect = a(0).pow(p) * a(1).pow(q);
            if (q % 2 == 1) expect = -expect;
            CHECK(s1.coeff(hook_partition(p, q)) == expect);
        }
    // only hooks appear
    for (auto& [lam, c] : s1.coeffs) CHECK(lam.diagonal_count() == 1);

    // lowest term is s_mu with coefficient 1; a = 0 collapses the series
    ASpec zero = ASpec::zero();
    for (const auto& mu : partitions_up_to(4)) {
        SchurSeries s = dual_schur(mu, 5);
        CHECK(s.coeff(mu) == APoly(Rational(1)));
        for (auto& [lam, c] : s.coeffs) {
            CHECK(lam.contains(mu));
            CHECK(lam.diagonal_count() == mu.diagonal_count());
            if (lam != mu) CHECK(c.evaluate(zero) == 0);
            if (!c.is_zero() && lam != mu)
                CHECK(c.total_degree() == lam.size() - mu.size());
        }
    }

    CHECK_THROWS_AS(dual_schur(Partition{2, 1}, 2), TruncationTooSmall);
}

TEST_CASE("dual schur series: four methods agree") {
    int D = 5, n = 3;
    for (const auto& mu : partitions_up_to(3)) {
        if (mu.length() > n) continue;
        SchurSeries f = dual_schur(mu, D, DualSchurMethod::flagged);
        SchurSeries det = dual_schur(mu, D, DualSchurMethod::determinant);
        SchurSeries comb = dual_schur(mu, D, DualSchurMethod::combinatorial, n);
        SchurSeries alt = dual_schur(mu, D, DualSchurMethod::alternant, n);
        CHECK(f == det);
        CHECK(comb == alt);
        // finite-n methods report exactly the coefficients with l(lambda) <= n
        for (auto& [lam, c] : f.coeffs) {
            if (lam.length() <= n) {
                CHECK(comb.coeff(lam) == c);
            }
        }
        for (auto& [lam, c] : comb.coeffs) CHECK(lam.length() <= n);
        CHECK(comb.coeffs.size() ==
              static_cast<std::size_t>(std::count_if(
                  f.coeffs.begin(), f.coeffs.end(),
                  [&](const auto& kv) { return kv.first.length() <= n; })));
    }
}

TEST_CASE("schur_to_dual golden values and round trip") {
    SchurSeries s1 = schur_to_dual(Partition{1}, 4);
    CHECK(s1.coeff(Partition{1}) == APoly(Rational(1)));
    CHECK(s1.coeff(Partition{1, 1}) == a(1));
    CHECK(s1.coeff(Partition{2}) == -a(0));
    // s_(1) = sum (-1)^p a_0 a_{-1}...a_{-p+1} a_1...a_q shat_{(p|q)}
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; p + q <= 3; ++q) {
            APoly expect(Rational(1));
            for (int k = 0; k >= 1 - p; --k) expect *= a(k);
            for (int k = 1; k <= q; ++k) expect *= a(k);
            if (p % 2 == 1) expect = -expect;
            CHECK(s1.coeff(hook_partition(p, q)) == expect);
        }

    // round trip: classical -> dual -> classical = identity up to D
    int D = 5;
    for (const auto& mu : partitions_up_to(3)) {
        SchurSeries back = to_classical_basis(schur_to_dual(mu, D));
        SchurSeries expect{SeriesBasis::classical_schur, D, {}};
        expect.add(mu, APoly(Rational(1)));
        CHECK(back == expect);
        // and the other composition
        SchurSeries fwd = to_dual_basis(dual_schur(mu, D));
        SchurSeries dexpect{SeriesBasis::dual_schur, D, {}};
        dexpect.add(mu, APoly(Rational(1)));
        CHECK(fwd == dexpect);
    }
}

TEST_CASE("dual e and h generators") {
    int D = 4;
    CHECK(dual_ehp(DualGen::h, 0, 0, D) == dual_schur(Partition{}, D));
    CHECK(dual_ehp(DualGen::e, 0, 0, D) == dual_schur(Partition{}, D));
    CHECK(dual_ehp(DualGen::h, 1, 0, D) == dual_ehp(DualGen::e, 1, 0, D));
    CHECK(dual_ehp(DualGen::h, 2, 0, D) == dual_schur(Partition{2}, D));
    CHECK(dual_ehp(DualGen::e, 2, 0, D) == dual_schur(Partition{1, 1}, D));
    // shifted sequence: coefficients are the shift images
    SchurSeries h2 = dual_ehp(DualGen::h, 2, 0, D);
    SchurSeries h2s = dual_ehp(DualGen::h, 2, 3, D);
    for (auto& [lam, c] : h2.coeffs) CHECK(h2s.coeff(lam) == c.shift(3));
}

TEST_CASE("generating series for dual e and h") {
    // 1 + sum_k ehat_k(x||a)(t+a_0)...(t+a_{k-1}) = prod (1+t x_i)/(1-a_0 x_i)
    // 1 + sum_k hhat_k(x||a)(t-a_1)(t-a_0)...(t-a_{-k+2}) =
    //     prod (1-a_1 x_i)/(1-t x_i)
    // checked at n variables, truncated at total x-degree D, t = x_{n+1}.
    int n = 2, D = 4;
    int nv = n + 1;
    auto materialize = [&](DualGen kind, int k) {
        std::vector<int> parts;
        if (kind == DualGen::h && k > 0) parts.push_back(k);
        if (kind == DualGen::e) parts.assign(static_cast<std::size_t>(k), 1);
        return skew_dual_schur_poly(SkewShape(Partition(std::move(parts)), Partition{}), n, D);
    };
    {
        XPoly lhs = XPoly::constant(nv, APoly(Rational(1)));
        for (int k = 1; k <= D; ++k) {
            XPoly term = detail::embed_vars(materialize(DualGen::e, k), nv, 0);
            for (int m = 0; m <= k - 1; ++m)
                term *= (XPoly::var(nv, nv) + XPoly::constant(nv, a(m)));
            lhs += term;
        }
        lhs = detail::truncate_range(lhs, 1, n, D);
        XPoly rhs = XPoly::constant(nv, APoly(Rational(1)));
        for (int i = 1; i <= n; ++i) {
            XPoly tx(nv);
            {
                std::vector<int> e(static_cast<std::size_t>(nv), 0);
                e[i - 1] = 1;
                e[nv - 1] = 1;
                tx.add_term(e, APoly(Rational(1)));
            }
            rhs = detail::mul_trunc(rhs, XPoly::constant(nv, APoly(Rational(1))) + tx, 1, n, D);
            rhs = detail::mul_trunc(rhs, detail::geom_series(nv, i, a(0), D), 1, n, D);
        }
        CHECK(lhs == rhs);
    }
    {
        XPoly lhs = XPoly::constant(nv, APoly(Rational(1)));
        for (int k = 1; k <= D; ++k) {
            XPoly term = detail::embed_vars(materialize(DualGen::h, k), nv, 0);
            for (int m = 1; m >= -k + 2; --m)
                term *= (XPoly::var(nv, nv) - XPoly::constant(nv, a(m)));
            lhs += term;
        }
        lhs = detail::truncate_range(lhs, 1, n, D);
        XPoly rhs = XPoly::constant(nv, APoly(Rational(1)));
        for (int i = 1; i <= n; ++i) {
            rhs = detail::mul_trunc(
                rhs, XPoly::constant(nv, APoly(Rational(1))) - XPoly::var(nv, i) * a(1),
                1, n, D);
            // 1/(1 - t x_i) = sum_k t^k x_i^k, x-degree bounded by D
            XPoly g(nv);
            for (int k = 0; k <= D; ++k) {
                std::vector<int> e(static_cast<std::size_t>(nv), 0);
                e[i - 1] = k;
                e[nv - 1] = k;
                g.add_term(e, APoly(Rational(1)));
            }
            rhs = detail::mul_trunc(rhs, g, 1, n, D);
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("dual determinant formulas") {
    int D = 5;
    // 1x1 cases
    CHECK(dual_determinants(SkewShape(Partition{3}, Partition{}), D, DualDet::jacobi_trudi) ==
          dual_schur(Partition{3}, D));
    CHECK(dual_determinants(SkewShape(Partition{1, 1}, Partition{}), D,
                            DualDet::nagelsbach_kostka) == dual_schur(Partition{1, 1}, D));
    CHECK(dual_determinants(SkewShape(Partition{2, 1}, Partition{}), D, DualDet::giambelli) ==
          dual_schur(Partition{2, 1}, D));
    // straight shapes: all three determinants give the dual Schur series
    for (const auto& lam : partitions_up_to(4)) {
        if (lam.size() == 0) continue;
        SchurSeries expect = dual_schur(lam, D);
        CHECK(dual_determinants(SkewShape(lam, Partition{}), D, DualDet::jacobi_trudi) ==
              expect);
        CHECK(dual_determinants(SkewShape(lam, Partition{}), D, DualDet::nagelsbach_kostka) ==
              expect);
        CHECK(dual_determinants(SkewShape(lam, Partition{}), D, DualDet::giambelli) == expect);
    }
}

TEST_CASE("skew dual schur series") {
    int D = 5, n = 3;
    // theta = nu/emptyset agrees with the straight series (l(lambda) <= n part)
    for (const auto& nu : partitions_up_to(3)) {
        SchurSeries skew = skew_dual_schur(SkewShape(nu, Partition{}), D, n);
        SchurSeries direct = dual_schur(nu, D, DualSchurMethod::combinatorial, n);
        CHECK(skew == direct);
    }
    // determinants agree with the reverse-tableau sum on l <= n
    for (const auto& nu : partitions_up_to(4))
        for (const auto& mu : partitions_up_to(nu.size())) {
            if (!nu.contains(mu) || mu == nu || nu.length() > n) continue;
            SkewShape theta(nu, mu);
            SchurSeries comb{SeriesBasis::classical_schur, D, {}};
            for (auto& [lam, c] : expand_classical_schur(skew_dual_schur_poly(theta, n, D)))
                comb.add(lam, c);
            for (DualDet kind : {DualDet::jacobi_trudi, DualDet::nagelsbach_kostka}) {
                SchurSeries det = dual_determinants(theta, D, kind);
                for (auto& [lam, c] : det.coeffs)
                    if (lam.length() <= n) CHECK(comb.coeff(lam) == c);
                for (auto& [lam, c] : comb.coeffs) CHECK(det.coeff(lam) == c);
            }
        }
}

TEST_CASE("skew dual schur decomposes through LR polynomials") {
    // shat_{nu/mu} = sum_lambda c^nu_{lambda mu}(a) shat_lambda, compared on
    // the classical basis over partitions of length <= n.
    int D = 5, n = 3;
    for (const auto& nu : partitions_up_to(4))
        for (const auto& mu : partitions_up_to(nu.size())) {
            if (!nu.contains(mu)) continue;
            SchurSeries lhs = skew_dual_schur(SkewShape(nu, mu), D, n);
            SchurSeries rhs{SeriesBasis::classical_schur, D, {}};
            for (const auto& lam : partitions_up_to(nu.size())) {
                APoly c = lr_polynomial(lam, mu, nu);
                if (c.is_zero()) continue;
                for (auto& [kap, v] : dual_schur(lam, D).coeffs) rhs.add(kap, v * c);
            }
            for (const auto& [kap, v] : rhs.coeffs)
                if (kap.length() <= n) CHECK(lhs.coeff(kap) == v);
            for (const auto& [kap, v] : lhs.coeffs) CHECK(rhs.coeff(kap) == v);
        }
}

TEST_CASE("omega_hat involution") {
    int D = 4;
    // omega_hat(shat_{lam}(x||a)) = shat_{lam'}(x||a'): the image coincides
    // coefficientwise with the primed-sequence series of the conjugate shape.
    for (const auto& lam : partitions_up_to(3)) {
        SchurSeries img = omega_hat(dual_schur(lam, D));
        SchurSeries expect = dual_schur(lam.conjugate(), D, DualSchurMethod::flagged, 0,
                                        ASeq{}.primed());
        CHECK(img == expect);
    }
    // involution
    SchurSeries s = dual_schur(Partition{2, 1}, D);
    CHECK(omega_hat(omega_hat(s)) == s);
    // wrong basis raises
    CHECK_THROWS_AS(omega_hat(schur_to_dual(Partition{1}, 3)), WrongBasis);
}

TEST_CASE("series multiplication") {
    int D = 4;
    // neutral element
    SchurSeries one = dual_schur(Partition{}, D);
    SchurSeries s21 = dual_schur(Partition{2, 1}, D);
    CHECK(series_mul(one, s21, D) == s21);

    // dual-basis product: shat_(1) shat_(2) has coefficient a_0 - a_1 at (2,2)
    SchurSeries d1 = to_dual_basis(dual_schur(Partition{1}, D));
    SchurSeries d2 = to_dual_basis(dual_schur(Partition{2}, D));
    SchurSeries prod = series_mul(d1, d2, D);
    CHECK(prod.coeff(Partition{2, 2}) == a(0) - a(1));
    CHECK(prod.coeff(Partition{3}) == APoly(Rational(1)));
    CHECK(prod.coeff(Partition{2, 1}) == APoly(Rational(1)));

    // hhat_1^2: all ten coefficients
    SchurSeries h1 = to_dual_basis(dual_ehp(DualGen::h, 1, 0, D));
    SchurSeries sq = series_mul(h1, h1, D);
    CHECK(sq.coeff(Partition{2}) == APoly(Rational(1)));
    CHECK(sq.coeff(Partition{1, 1}) == APoly(Rational(1)));
    CHECK(sq.coeff(Partition{3}) == a(0) - a(-1));
    CHECK(sq.coeff(Partition{2, 1}) == a(0) - a(1));
    CHECK(sq.coeff(Partition{1, 1, 1}) == a(2) - a(1));
    CHECK(sq.coeff(Partition{4}) == (a(0) - a(-2)) * (a(0) - a(-1)));
    CHECK(sq.coeff(Partition{3, 1}) == (a(0) - a(1)) * (a(0) - a(-1)));
    CHECK(sq.coeff(Partition{2, 2}) == (a(0) - a(1)) * (a(0) - a(1)));
    CHECK(sq.coeff(Partition{2, 1, 1}) == (a(1) - a(0)) * (a(1) - a(2)));
    CHECK(sq.coeff(Partition{1, 1, 1, 1}) == (a(1) - a(2)) * (a(1) - a(3)));
    CHECK(sq.coeffs.size() == 10);

    // classical-basis intermediate of hhat_1^2 (selected coefficients)
    SchurSeries cl = series_mul(to_classical_basis(h1), to_classical_basis(h1), D);
    CHECK(cl.coeff(Partition{2}) == APoly(Rational(1)));
    CHECK(cl.coeff(Partition{1, 1}) == APoly(Rational(1)));
    CHECK(cl.coeff(Partition{3}) == a(0) * Rational(2));
    CHECK(cl.coeff(Partition{2, 1}) == (a(0) - a(1)) * Rational(2));
    CHECK(cl.coeff(Partition{1, 1, 1}) == -a(1) * Rational(2));
    CHECK(cl.coeff(Partition{4}) == a(0) * a(0) * Rational(3));
    CHECK(cl.coeff(Partition{3, 1}) == a(0) * a(0) * Rational(3) - a(0) * a(1) * Rational(4));
    CHECK(cl.coeff(Partition{2, 2}) ==
          a(0) * a(0) + a(1) * a(1) - a(0) * a(1) * Rational(2));
    CHECK(cl.coeff(Partition{2, 1, 1}) ==
          a(1) * a(1) * Rational(3) - a(0) * a(1) * Rational(4));
    CHECK(cl.coeff(Partition{1, 1, 1, 1}) == a(1) * a(1) * Rational(3));

    // mismatched bases raise
    CHECK_THROWS_AS(series_mul(one, d1, D), WrongBasis);
}

TEST_CASE("dual basis product against skew expansion") {
    // shat_lambda shat_mu = sum_nu chat^nu_{lambda mu}(a) shat_nu with chat
    // also the coefficient of shat_lambda in the skew series nu/mu.
    int D = 4;
    for (const auto& lam : partitions_up_to(2))
        for (const auto& mu : partitions_up_to(2)) {
            SchurSeries prod =
                series_mul(to_dual_basis(dual_schur(lam, D)),
                           to_dual_basis(dual_schur(mu, D)), D);
            for (auto& [nu, c] : prod.coeffs) {
                CHECK(nu.contains(lam));
                CHECK(nu.contains(mu));
                if (nu.size() == lam.size() + mu.size())
                    CHECK(c == APoly(Rational(lr_coefficient(lam, mu, nu))));
                // chat is homogeneous of degree |nu| - |lambda| - |mu|
                CHECK(nu.size() >= lam.size() + mu.size());
                if (!c.is_zero())
                    CHECK(c.total_degree() == nu.size() - lam.size() - mu.size());
            }
        }
}

TEST_CASE("cauchy identities") {
    for (auto [n, D] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}}) {
        CauchyReport r = cauchy_check(n, D);
        for (const auto& item : r.items) {
            INFO(item.name << " at n=" << n << ", D=" << D << ": " << item.detail);
            CHECK(item.pass);
        }
    }
}
