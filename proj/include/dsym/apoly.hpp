#pragma once

/*
 * apoly.hpp
 * ---------
 * Sparse exact polynomials in the doubly infinite parameter family a_i, i in Z.
 *
 * AMonomial maps variable index -> positive exponent.  APoly maps monomials to
 * rational coefficients.  The monomial order (total degree, then lexicographic
 * on the sorted (index, exponent) pairs) is the canonical printing order, so
 * iteration over an APoly is already deterministic.
 *
 * The two substitutions the theory needs are built in:
 *   shift(p, k)  : a_i -> a_{i+k}     (the operator tau^k)
 *   dualize(p)   : a_i -> -a_{-i+1}   (passage to the sequence a')
 * together with exact division by a linear form and evaluation under a
 * numeric specialization of the sequence.
 */

#include "errors.hpp"
#include "rational.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace dsym {

// ---------------------------------------------------------------------------
// AMonomial
// ---------------------------------------------------------------------------

struct AMonomial {
    // index -> exponent, no zero exponents stored
    std::map<int, int> exps;

    int total_degree() const {
        int d = 0;
        for (auto& [i, e] : exps) d += e;
        return d;
    }

    bool is_unit() const { return exps.empty(); }

    friend bool operator==(const AMonomial& a, const AMonomial& b) { return a.exps == b.exps; }

    // Canonical order: total degree first, then lexicographic on the
    // (index, exponent) pairs in increasing index order.
    friend bool operator<(const AMonomial& a, const AMonomial& b) {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return std::lexicographical_compare(a.exps.begin(), a.exps.end(),
                                            b.exps.begin(), b.exps.end());
    }

    friend AMonomial operator*(const AMonomial& a, const AMonomial& b) {
        AMonomial r = a;
        for (auto& [i, e] : b.exps) {
            int& slot = r.exps[i];
            slot += e;
            if (slot == 0) r.exps.erase(i);
        }
        return r;
    }
};

// ---------------------------------------------------------------------------
// ASpec: numeric specialization of the sequence a
// ---------------------------------------------------------------------------

struct ASpec {
    enum class Kind { zero, shifted, frobenius, custom, generic };

    Kind kind = Kind::zero;

    // custom: explicit values plus an optional affine default p*i + q
    std::map<int, Rational> custom;
    std::optional<std::pair<Rational, Rational>> affine_default; // (p, q)

    // generic: deterministic seed
    std::uint64_t seed = 0;

    static ASpec zero() { return ASpec{}; }
    static ASpec shifted() { ASpec s; s.kind = Kind::shifted; return s; }
    static ASpec frobenius() { ASpec s; s.kind = Kind::frobenius; return s; }
    static ASpec generic(std::uint64_t seed) {
        ASpec s;
        s.kind = Kind::generic;
        s.seed = seed;
        return s;
    }

    Rational value(int i) const {
        switch (kind) {
        case Kind::zero:
            return 0;
        case Kind::shifted:
            return Rational(-i + 1);
        case Kind::frobenius:
            return Rational(BigInt(-2 * i + 1), BigInt(2));
        case Kind::custom: {
            auto it = custom.find(i);
            if (it != custom.end()) return it->second;
            if (affine_default) return affine_default->first * i + affine_default->second;
            throw MissingIndex("custom spec has no value for index " + std::to_string(i));
        }
        case Kind::generic:
            return generic_value(i);
        }
        throw std::logic_error("unreachable");
    }

private:
    // Deterministic pseudorandom rational, pairwise distinct across indices:
    // a_i = (1000003*i + mix(seed,i) mod 1000000) / 977.  The linear term
    // dominates the bounded mixing term, so distinct indices always yield
    // distinct values.
    Rational generic_value(int i) const {
        std::uint64_t x = seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(static_cast<std::int64_t>(i)) * 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 30; x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27; x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        BigInt m = static_cast<std::uint64_t>(x % 1000000ULL);
        BigInt num = BigInt(1000003) * i + m;
        return Rational(num, BigInt(977));
    }
};

// ---------------------------------------------------------------------------
// APoly
// ---------------------------------------------------------------------------

class APoly {
public:
    APoly() = default;
    /*implicit*/ APoly(const Rational& c) {
        if (c != 0) terms_[AMonomial{}] = c;
    }
    /*implicit*/ APoly(long long c) : APoly(Rational(c)) {}

    // The generator a_i.
    static APoly var(int i) {
        APoly p;
        AMonomial m;
        m.exps[i] = 1;
        p.terms_[m] = 1;
        return p;
    }

    const std::map<AMonomial, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }

    Rational constant_term() const {
        auto it = terms_.find(AMonomial{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int total_degree() const {
        int d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return terms_.empty() ? -1 : d;
    }

    Rational coeff(const AMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const AMonomial& m, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    APoly operator-() const {
        APoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    APoly& operator+=(const APoly& q) {
        for (auto& [m, c] : q.terms_) add_term(m, c);
        return *this;
    }
    APoly& operator-=(const APoly& q) {
        for (auto& [m, c] : q.terms_) add_term(m, -c);
        return *this;
    }
    friend APoly operator+(APoly p, const APoly& q) { p += q; return p; }
    friend APoly operator-(APoly p, const APoly& q) { p -= q; return p; }

    friend APoly operator*(const APoly& p, const APoly& q) {
        APoly r;
        for (auto& [mp, cp] : p.terms_)
            for (auto& [mq, cq] : q.terms_)
                r.add_term(mp * mq, cp * cq);
        return r;
    }
    APoly& operator*=(const APoly& q) { *this = *this * q; return *this; }

    APoly& operator*=(const Rational& c) {
        if (c == 0) { terms_.clear(); return *this; }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }
    friend APoly operator*(APoly p, const Rational& c) { p *= c; return p; }
    friend APoly operator*(const Rational& c, APoly p) { p *= c; return p; }

    friend bool operator==(const APoly& p, const APoly& q) { return p.terms_ == q.terms_; }
    friend bool operator!=(const APoly& p, const APoly& q) { return !(p == q); }
    // Order only used for deterministic containers.
    friend bool operator<(const APoly& p, const APoly& q) { return p.terms_ < q.terms_; }

    APoly pow(int e) const {
        APoly acc = Rational(1);
        for (int i = 0; i < e; ++i) acc *= *this;
        return acc;
    }

    // a_i -> a_{i+k}
    APoly shift(int k) const {
        if (k == 0) return *this;
        APoly r;
        for (auto& [m, c] : terms_) {
            AMonomial sm;
            for (auto& [i, e] : m.exps) sm.exps[i + k] = e;
            r.add_term(sm, c);
        }
        return r;
    }

    // a_i -> -a_{-i+1}
    APoly dualize() const {
        APoly r;
        for (auto& [m, c] : terms_) {
            AMonomial dm;
            int deg = 0;
            for (auto& [i, e] : m.exps) {
                dm.exps[-i + 1] = e;
                deg += e;
            }
            r.add_term(dm, (deg % 2 == 0) ? c : -c);
        }
        return r;
    }

    Rational evaluate(const ASpec& spec) const {
        Rational total = 0;
        for (auto& [m, c] : terms_) {
            Rational v = c;
            for (auto& [i, e] : m.exps) v *= rat_pow(spec.value(i), e);
            total += v;
        }
        return total;
    }

    // Largest / smallest variable index appearing anywhere.
    std::optional<int> max_index() const {
        std::optional<int> r;
        for (auto& [m, c] : terms_)
            if (!m.exps.empty()) {
                int i = m.exps.rbegin()->first;
                if (!r || i > *r) r = i;
            }
        return r;
    }
    std::optional<int> min_index() const {
        std::optional<int> r;
        for (auto& [m, c] : terms_)
            if (!m.exps.empty()) {
                int i = m.exps.begin()->first;
                if (!r || i < *r) r = i;
            }
        return r;
    }

    // Degree in one particular variable.
    int degree_in(int var) const {
        int d = 0;
        for (auto& [m, c] : terms_) {
            auto it = m.exps.find(var);
            if (it != m.exps.end()) d = std::max(d, it->second);
        }
        return d;
    }

    // Substitute an arbitrary APoly for the variable a_var.
    APoly substitute(int var, const APoly& value) const {
        APoly r;
        for (auto& [m, c] : terms_) {
            auto it = m.exps.find(var);
            if (it == m.exps.end()) {
                r.add_term(m, c);
                continue;
            }
            AMonomial rest = m;
            int e = it->second;
            rest.exps.erase(var);
            APoly piece;
            piece.add_term(rest, c);
            r += piece * value.pow(e);
        }
        return r;
    }

    std::string to_string() const;
    nlohmann::json to_json() const;

private:
    std::map<AMonomial, Rational> terms_;
};

inline std::string amonomial_to_string(const AMonomial& m) {
    if (m.is_unit()) return "1";
    std::ostringstream out;
    bool first = true;
    for (auto& [i, e] : m.exps) {
        if (!first) out << "*";
        first = false;
        out << "a[" << i << "]";
        if (e > 1) out << "^" << e;
    }
    return out.str();
}

inline std::string APoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (m.is_unit()) {
            out << rat_to_string(mag);
        } else {
            if (mag != 1) out << rat_to_string(mag) << "*";
            out << amonomial_to_string(m);
        }
    }
    return out.str();
}

inline nlohmann::json APoly::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [m, c] : terms_) {
        nlohmann::json vars = nlohmann::json::object();
        for (auto& [i, e] : m.exps) vars[std::to_string(i)] = e;
        terms.push_back({{"coeff", rat_to_string(c)}, {"vars", vars}});
    }
    return nlohmann::json{{"terms", terms}};
}

// ---------------------------------------------------------------------------
// Exact division by a linear form
// ---------------------------------------------------------------------------

// Divides p exactly by a nonzero linear form L = c1*a_{i1} + ... + ck*a_{ik}.
// Division is performed as univariate division in the highest-index variable
// of L; the remainder must vanish identically.
inline APoly exact_div_linear(const APoly& p, const APoly& L) {
    if (L.is_zero()) throw NotLinear("division by zero form");
    for (auto& [m, c] : L.terms())
        if (m.total_degree() != 1)
            throw NotLinear("divisor is not a linear form: " + L.to_string());
    int top = *L.max_index();
    // L = c * a_top + L0
    AMonomial mtop;
    mtop.exps[top] = 1;
    Rational c = L.coeff(mtop);
    APoly L0 = L;
    L0.add_term(mtop, -c);

    APoly rem = p, quot;
    while (!rem.is_zero()) {
        int d = rem.degree_in(top);
        if (d == 0) throw NotDivisible("nonzero remainder dividing by " + L.to_string());
        // Collect the a_top^d part: rem = a_top^d * h + lower.
        APoly h;
        for (auto& [m, cf] : rem.terms()) {
            auto it = m.exps.find(top);
            if (it != m.exps.end() && it->second == d) {
                AMonomial rest = m;
                rest.exps.erase(top);
                h.add_term(rest, cf);
            }
        }
        // Quotient step: (a_top^{d-1} * h / c).
        APoly step;
        for (auto& [m, cf] : h.terms()) {
            AMonomial sm = m;
            if (d - 1 > 0) sm.exps[top] += d - 1;
            step.add_term(sm, cf / c);
        }
        quot += step;
        rem -= step * L;
    }
    return quot;
}

// ---------------------------------------------------------------------------
// ASeq: an affine view of the sequence a (shifts and the primed sequence)
// ---------------------------------------------------------------------------

// Represents one of the sequences tau^k a or tau^k a' so formulas can be
// written once against an abstract sequence.  at(i) returns the i-th entry
// as an APoly in the underlying a variables.
struct ASeq {
    int shift = 0;
    bool dual = false;

    APoly at(int i) const {
        if (!dual) return APoly::var(i + shift);
        return -APoly::var(1 - i - shift);
    }

    // tau^k of this sequence.
    ASeq shifted(int k) const { return ASeq{shift + k, dual}; }

    // The primed sequence: (a')_i = -a_{-i+1} applied on top of this view.
    ASeq primed() const { return ASeq{-shift, !dual}; }
};

// Classical complete/elementary symmetric polynomials of a finite list of
// APoly values (used by the determinant formulas for dual Schur series).
inline APoly elem_sym(const std::vector<APoly>& vals, int k) {
    if (k < 0) return APoly();
    if (k == 0) return APoly(Rational(1));
    if (k > static_cast<int>(vals.size())) return APoly();
    // dp[j] = e_j of the prefix processed so far
    std::vector<APoly> dp(k + 1);
    dp[0] = APoly(Rational(1));
    for (std::size_t m = 0; m < vals.size(); ++m)
        for (int j = std::min<int>(k, static_cast<int>(m) + 1); j >= 1; --j)
            dp[j] += dp[j - 1] * vals[m];
    return dp[k];
}

inline APoly complete_sym(const std::vector<APoly>& vals, int k) {
    if (k < 0) return APoly();
    if (k == 0) return APoly(Rational(1));
    if (vals.empty()) return APoly();
    // dp over h_j with variables added one at a time:
    // h_j(v1..vm) = h_j(v1..v{m-1}) + vm * h_{j-1}(v1..vm)
    std::vector<APoly> dp(k + 1);
    dp[0] = APoly(Rational(1));
    for (const auto& v : vals)
        for (int j = 1; j <= k; ++j) dp[j] += dp[j - 1] * v;
    return dp[k];
}

} // namespace dsym
