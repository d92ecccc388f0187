#pragma once

/*
 * xpoly.hpp
 * ---------
 * Polynomials in x_1..x_n with APoly coefficients: the concrete image of the
 * ring of double symmetric functions at a finite number of variables.
 *
 * Exponent vectors have fixed length n; coefficients are exact.  Symmetry is
 * not enforced on construction (alternants are antisymmetric intermediates);
 * is_symmetric() is an explicit check used at API boundaries.
 */

#include "apoly.hpp"

#include <functional>
#include <vector>

namespace dsym {

class XPoly {
public:
    explicit XPoly(int n = 0) : n_(n) {}

    static XPoly constant(int n, const APoly& c) {
        XPoly p(n);
        p.add_term(std::vector<int>(n, 0), c);
        return p;
    }

    // x_i, 1-based.
    static XPoly var(int n, int i) {
        XPoly p(n);
        std::vector<int> e(n, 0);
        e[i - 1] = 1;
        p.add_term(e, APoly(Rational(1)));
        return p;
    }

    int nvars() const { return n_; }
    const std::map<std::vector<int>, APoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<int>& exps, const APoly& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            terms_.emplace(exps, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    APoly coeff(const std::vector<int>& exps) const {
        auto it = terms_.find(exps);
        return it == terms_.end() ? APoly() : it->second;
    }

    XPoly operator-() const {
        XPoly r(n_);
        for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    XPoly& operator+=(const XPoly& q) {
        for (auto& [e, c] : q.terms_) add_term(e, c);
        return *this;
    }
    XPoly& operator-=(const XPoly& q) {
        for (auto& [e, c] : q.terms_) add_term(e, -c);
        return *this;
    }
    friend XPoly operator+(XPoly p, const XPoly& q) { p += q; return p; }
    friend XPoly operator-(XPoly p, const XPoly& q) { p -= q; return p; }

    friend XPoly operator*(const XPoly& p, const XPoly& q) {
        XPoly r(p.n_);
        for (auto& [ep, cp] : p.terms_)
            for (auto& [eq, cq] : q.terms_) {
                std::vector<int> e(p.n_);
                for (int i = 0; i < p.n_; ++i) e[i] = ep[i] + eq[i];
                r.add_term(e, cp * cq);
            }
        return r;
    }
    XPoly& operator*=(const XPoly& q) { *this = *this * q; return *this; }

    XPoly& operator*=(const APoly& c) {
        XPoly r(n_);
        for (auto& [e, v] : terms_) r.add_term(e, v * c);
        *this = std::move(r);
        return *this;
    }
    friend XPoly operator*(XPoly p, const APoly& c) { p *= c; return p; }
    friend XPoly operator*(const APoly& c, XPoly p) { p *= c; return p; }

    friend bool operator==(const XPoly& p, const XPoly& q) {
        return p.n_ == q.n_ && p.terms_ == q.terms_;
    }
    friend bool operator!=(const XPoly& p, const XPoly& q) { return !(p == q); }

    XPoly pow(int e) const {
        XPoly acc = constant(n_, APoly(Rational(1)));
        for (int i = 0; i < e; ++i) acc *= *this;
        return acc;
    }

    int degree_in(int i) const {
        int d = 0;
        for (auto& [e, c] : terms_) d = std::max(d, e[i - 1]);
        return d;
    }

    int total_degree_x() const {
        int d = -1;
        for (auto& [e, c] : terms_) {
            int s = 0;
            for (int v : e) s += v;
            d = std::max(d, s);
        }
        return d;
    }

    // Exchange the roles of x_i and x_j.
    XPoly swap_vars(int i, int j) const {
        XPoly r(n_);
        for (auto& [e, c] : terms_) {
            std::vector<int> f = e;
            std::swap(f[i - 1], f[j - 1]);
            r.add_term(f, c);
        }
        return r;
    }

    bool is_symmetric() const {
        for (int i = 1; i < n_; ++i)
            if (swap_vars(i, i + 1) != *this) return false;
        return true;
    }

    // Substitute an APoly value for x_i; the result no longer involves x_i.
    XPoly substitute_var(int i, const APoly& value) const {
        XPoly r(n_);
        for (auto& [e, c] : terms_) {
            std::vector<int> f = e;
            int k = f[i - 1];
            f[i - 1] = 0;
            APoly v = c;
            for (int t = 0; t < k; ++t) v *= value;
            r.add_term(f, v);
        }
        return r;
    }

    // Substitute x_j for x_i (variable renaming).
    XPoly rename_var(int i, int j) const {
        XPoly r(n_);
        for (auto& [e, c] : terms_) {
            std::vector<int> f = e;
            f[j - 1] += f[i - 1];
            f[i - 1] = 0;
            r.add_term(f, c);
        }
        return r;
    }

    // Full evaluation at a point (length n).
    APoly substitute_all(const std::vector<APoly>& point) const {
        APoly total;
        for (auto& [e, c] : terms_) {
            APoly v = c;
            for (int i = 0; i < n_; ++i)
                for (int t = 0; t < e[i]; ++t) v *= point[i];
            total += v;
        }
        return total;
    }

    // Numeric evaluation: x_i = point[i], a's under spec.
    Rational evaluate_numeric(const std::vector<Rational>& point, const ASpec& spec) const {
        Rational total = 0;
        for (auto& [e, c] : terms_) {
            Rational v = c.evaluate(spec);
            for (int i = 0; i < n_; ++i)
                if (e[i] != 0) v *= rat_pow(point[i], e[i]);
            total += v;
        }
        return total;
    }

    // Drop the last variable; requires that it does not occur.
    XPoly drop_last_var() const {
        XPoly r(n_ - 1);
        for (auto& [e, c] : terms_) {
            if (e[n_ - 1] != 0) throw std::logic_error("drop_last_var: variable occurs");
            r.add_term(std::vector<int>(e.begin(), e.end() - 1), c);
        }
        return r;
    }

    // Map every coefficient through f (e.g. shift or dualize of the a's).
    XPoly map_coeffs(const std::function<APoly(const APoly&)>& f) const {
        XPoly r(n_);
        for (auto& [e, c] : terms_) r.add_term(e, f(c));
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto& [e, c] : terms_) {
            if (!first) out << " + ";
            first = false;
            std::string mono;
            for (int i = 0; i < n_; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += "x" + std::to_string(i + 1);
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) mono = "1";
            out << "[" << c.to_string() << "]*" << mono;
        }
        return out.str();
    }

    nlohmann::json to_json() const {
        nlohmann::json terms = nlohmann::json::array();
        for (auto& [e, c] : terms_) {
            nlohmann::json t = c.to_json();
            t["xexp"] = e;
            terms.push_back(t);
        }
        return nlohmann::json{{"n", n_}, {"terms", terms}};
    }

private:
    int n_;
    std::map<std::vector<int>, APoly> terms_;
};

// Exact division of P by (x_i - x_j); throws NotDivisible if P does not
// vanish under x_i = x_j.
inline XPoly exact_div_xdiff(const XPoly& P, int i, int j) {
    if (!P.rename_var(i, j).is_zero())
        throw NotDivisible("polynomial not divisible by x_i - x_j");
    // P = sum_k c_k x_i^k with remainder sum_k c_k x_j^k = 0, so
    // P = (x_i - x_j) * sum_k c_k * sum_{t=0}^{k-1} x_i^t x_j^{k-1-t}.
    XPoly q(P.nvars());
    for (auto& [e, c] : P.terms()) {
        int k = e[i - 1];
        if (k == 0) continue; // absorbed by the zero remainder
        std::vector<int> base = e;
        base[i - 1] = 0;
        for (int t = 0; t < k; ++t) {
            std::vector<int> f = base;
            f[i - 1] += t;
            f[j - 1] += k - 1 - t;
            q.add_term(f, c);
        }
    }
    return q;
}

// Divide an antisymmetric polynomial by the Vandermonde determinant
// prod_{i<j} (x_i - x_j).
inline XPoly vandermonde_divide(XPoly P) {
    int n = P.nvars();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) P = exact_div_xdiff(P, i, j);
    return P;
}

// Determinant of a square XPoly matrix by cofactor expansion (desk scale).
inline XPoly det_xpoly(const std::vector<std::vector<XPoly>>& M, int n) {
    int k = static_cast<int>(M.size());
    if (k == 0) return XPoly::constant(n, APoly(Rational(1)));
    std::vector<int> cols(k);
    for (int c = 0; c < k; ++c) cols[c] = c;
    std::function<XPoly(int, std::vector<int>&)> rec = [&](int row, std::vector<int>& rem) -> XPoly {
        if (row == k) return XPoly::constant(n, APoly(Rational(1)));
        XPoly total(n);
        for (std::size_t p = 0; p < rem.size(); ++p) {
            int c = rem[p];
            if (M[row][c].is_zero()) continue;
            std::vector<int> next;
            for (std::size_t q = 0; q < rem.size(); ++q)
                if (q != p) next.push_back(rem[q]);
            XPoly sub = rec(row + 1, next);
            XPoly contrib = M[row][c] * sub;
            if (p % 2 == 1) contrib = -contrib;
            total += contrib;
        }
        return total;
    };
    return rec(0, cols);
}

// Determinant of a square APoly matrix (used by the dual-series formulas).
inline APoly det_apoly(const std::vector<std::vector<APoly>>& M) {
    int k = static_cast<int>(M.size());
    if (k == 0) return APoly(Rational(1));
    std::function<APoly(int, std::vector<int>&)> rec = [&](int row, std::vector<int>& rem) -> APoly {
        if (row == k) return APoly(Rational(1));
        APoly total;
        for (std::size_t p = 0; p < rem.size(); ++p) {
            int c = rem[p];
            if (M[row][c].is_zero()) continue;
            std::vector<int> next;
            for (std::size_t q = 0; q < rem.size(); ++q)
                if (q != p) next.push_back(rem[q]);
            APoly contrib = M[row][c] * rec(row + 1, next);
            if (p % 2 == 1) contrib = -contrib;
            total += contrib;
        }
        return total;
    };
    std::vector<int> cols(k);
    for (int c = 0; c < k; ++c) cols[c] = c;
    return rec(0, cols);
}

} // namespace dsym
