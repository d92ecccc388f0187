#pragma once

/*
 * partition.hpp
 * -------------
 * Integer partitions, skew shapes, Frobenius coordinates and growth chains,
 * together with the classical combinatorics used as independent oracles:
 * standard-tableau dimensions (enumeration and determinant), hook products,
 * Kostka numbers, the lattice-word Littlewood-Richardson rule, and
 * Murnaghan-Nakayama characters.
 *
 * Cells are 1-based (row, col); the content of a cell is col - row.
 */

#include "rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace dsym {

struct Cell {
    int row = 0; // 1-based
    int col = 0; // 1-based
    int content() const { return col - row; }
    friend bool operator==(const Cell& a, const Cell& b) { return a.row == b.row && a.col == b.col; }
    friend bool operator<(const Cell& a, const Cell& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    }
};

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
            if (parts_[i] < parts_[i + 1]) throw std::invalid_argument("parts not weakly decreasing");
        if (!parts_.empty() && parts_.back() < 0) throw std::invalid_argument("negative part");
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    // 1-based part access; zero beyond the length.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    Partition conjugate() const {
        if (parts_.empty()) return {};
        std::vector<int> c(parts_[0], 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++c[j];
        return Partition(std::move(c));
    }

    bool contains(const Partition& mu) const {
        for (int i = 1; i <= mu.length(); ++i)
            if (part(i) < mu.part(i)) return false;
        return true;
    }

    // Number of diagonal cells (i, i).
    int diagonal_count() const {
        int d = 0;
        while (part(d + 1) >= d + 1) ++d;
        return d;
    }

    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        for (int i = 1; i <= length(); ++i)
            for (int j = 1; j <= part(i); ++j) out.push_back({i, j});
        return out;
    }

    // Partitions obtained by adding one box, in row order.
    std::vector<Partition> add_box() const {
        std::vector<Partition> out;
        for (int i = 1; i <= length() + 1; ++i) {
            if (i == 1 || part(i) < part(i - 1)) {
                std::vector<int> p = parts_;
                if (i <= length()) ++p[i - 1]; else p.push_back(1);
                out.emplace_back(std::move(p));
            }
        }
        return out;
    }

    // Partitions obtained by removing one box, in row order.
    std::vector<Partition> remove_box() const {
        std::vector<Partition> out;
        for (int i = 1; i <= length(); ++i) {
            if (i == length() || part(i) > part(i + 1)) {
                std::vector<int> p = parts_;
                --p[i - 1];
                out.emplace_back(std::move(p));
            }
        }
        return out;
    }

    // True when this/mu is a horizontal strip: at most one box per column.
    bool horizontal_strip_over(const Partition& mu) const {
        if (!contains(mu)) return false;
        for (int i = 1; i <= length(); ++i)
            if (part(i + 1) > mu.part(i)) return false;
        return true;
    }

    std::string to_string() const {
        std::ostringstream out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out << ",";
            out << parts_[i];
        }
        return out.str();
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
};

// Graded order used for deterministic matrix layouts: by size, then
// reverse-lexicographic within a size class ((3) before (2,1) before (1,1,1)).
inline bool graded_less(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() > b.parts();
}

struct SkewShape {
    Partition outer, inner;

    SkewShape() = default;
    SkewShape(Partition o, Partition i) : outer(std::move(o)), inner(std::move(i)) {
        if (!outer.contains(inner)) throw std::invalid_argument("inner not contained in outer");
    }

    int size() const { return outer.size() - inner.size(); }
    bool empty_shape() const { return size() == 0; }

    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        for (int i = 1; i <= outer.length(); ++i)
            for (int j = inner.part(i) + 1; j <= outer.part(i); ++j) out.push_back({i, j});
        return out;
    }

    bool contains_cell(int row, int col) const {
        return row >= 1 && col >= 1 && col <= outer.part(row) && col > inner.part(row);
    }

    // Number of boxes below row d (used for the signs (-1)^{n(lambda/mu)}).
    int boxes_below_row(int d) const {
        int c = 0;
        for (const auto& cell : cells())
            if (cell.row > d) ++c;
        return c;
    }
    // Number of boxes in rows 1..d (the signs (-1)^{m(lambda/mu)}).
    int boxes_in_top_rows(int d) const { return size() - boxes_below_row(d); }

    std::string to_string() const {
        return inner.empty() ? outer.to_string() : outer.to_string() + "/" + inner.to_string();
    }
};

// ---------------------------------------------------------------------------
// Frobenius coordinates
// ---------------------------------------------------------------------------

struct FrobeniusCoords {
    std::vector<int> alpha, beta; // strictly decreasing, equal length

    static FrobeniusCoords of(const Partition& lam) {
        FrobeniusCoords f;
        int d = lam.diagonal_count();
        Partition conj = lam.conjugate();
        for (int i = 1; i <= d; ++i) {
            f.alpha.push_back(lam.part(i) - i);
            f.beta.push_back(conj.part(i) - i);
        }
        return f;
    }

    Partition to_partition() const {
        // Rebuild rows: row i has alpha_i + i boxes for i <= d; the columns
        // below the diagonal come from beta.
        int d = static_cast<int>(alpha.size());
        std::vector<int> rows;
        for (int i = 1; i <= d; ++i) rows.push_back(alpha[i - 1] + i);
        // column lengths below/at diagonal: column j has beta_j + j boxes
        int maxrow = 0;
        for (int j = 1; j <= d; ++j) maxrow = std::max(maxrow, beta[j - 1] + j);
        for (int r = d + 1; r <= maxrow; ++r) {
            int len = 0;
            for (int j = 1; j <= d; ++j)
                if (beta[j - 1] + j >= r) len = j;
            rows.push_back(len);
        }
        return Partition(rows);
    }

    std::string to_string() const {
        std::ostringstream out;
        out << "(";
        for (std::size_t i = 0; i < alpha.size(); ++i) out << (i ? "," : "") << alpha[i];
        out << "|";
        for (std::size_t i = 0; i < beta.size(); ++i) out << (i ? "," : "") << beta[i];
        out << ")";
        return out.str();
    }
};

// Hook partition (alpha | beta) with single Frobenius coordinate pair.
inline Partition hook_partition(int alpha, int beta) {
    std::vector<int> rows;
    rows.push_back(alpha + 1);
    for (int i = 0; i < beta; ++i) rows.push_back(1);
    return Partition(rows);
}

// ---------------------------------------------------------------------------
// Growth chains (standard tableaux as paths in the Young lattice)
// ---------------------------------------------------------------------------

struct GrowthChain {
    std::vector<Partition> chain;  // from (possibly empty) start to end, one box per step
    std::vector<int> yamanouchi;   // row index of each added box

    int length() const { return static_cast<int>(yamanouchi.size()); }
};

// All chains from `from` to `to` adding one box at a time, deterministic order.
inline std::vector<GrowthChain> growth_chains(const Partition& from, const Partition& to) {
    std::vector<GrowthChain> out;
    if (!to.contains(from)) return out;
    GrowthChain cur;
    cur.chain.push_back(from);
    auto rec = [&](auto&& self, const Partition& p) -> void {
        if (p == to) {
            out.push_back(cur);
            return;
        }
        auto nexts = p.add_box();
        for (const auto& q : nexts) {
            if (!to.contains(q)) continue;
            int row = 0;
            for (int i = 1; i <= q.length(); ++i)
                if (q.part(i) != p.part(i)) { row = i; break; }
            cur.chain.push_back(q);
            cur.yamanouchi.push_back(row);
            self(self, q);
            cur.chain.pop_back();
            cur.yamanouchi.pop_back();
        }
    };
    rec(rec, from);
    return out;
}

// ---------------------------------------------------------------------------
// Partition enumeration
// ---------------------------------------------------------------------------

// All partitions of n in reverse-lexicographic order ((n) first).
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// All partitions with size <= N, graded (empty partition first).
inline std::vector<Partition> partitions_up_to(int N) {
    std::vector<Partition> out;
    for (int n = 0; n <= N; ++n) {
        auto layer = partitions_of(n);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

// a_mu index sequence (1 - mu_1, 2 - mu_2, ..., n - mu_n).
inline std::vector<int> a_mu_indices(const Partition& mu, int n) {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i) out.push_back(i - mu.part(i));
    return out;
}

// z_lambda = prod_i i^{m_i} m_i! for lambda = (1^{m_1} 2^{m_2} ...).
inline BigInt z_lambda(const Partition& lam) {
    std::map<int, int> mult;
    for (int p : lam.parts()) ++mult[p];
    BigInt z = 1;
    for (auto& [part, m] : mult) {
        for (int i = 0; i < m; ++i) z *= part;
        z *= factorial(m);
    }
    return z;
}

// ---------------------------------------------------------------------------
// Dimensions and hook products
// ---------------------------------------------------------------------------

// Number of standard tableaux of the skew shape, by exhaustive enumeration
// (independent oracle; fine for |theta| <= 12).
inline BigInt dim_skew_enumerate(const SkewShape& theta) {
    std::map<Partition, BigInt> memo;
    auto rec = [&](auto&& self, const Partition& outer) -> BigInt {
        if (outer == theta.inner) return 1;
        auto it = memo.find(outer);
        if (it != memo.end()) return it->second;
        BigInt total = 0;
        for (const auto& prev : outer.remove_box())
            if (prev.contains(theta.inner)) total += self(self, prev);
        memo[outer] = total;
        return total;
    };
    if (!theta.outer.contains(theta.inner)) return 0;
    return rec(rec, theta.outer);
}

// Aitken determinant: dim theta = |theta|! * det[ 1/(lambda_i - mu_j - i + j)! ].
inline BigInt dim_skew_determinant(const SkewShape& theta) {
    if (!theta.outer.contains(theta.inner)) return 0;
    int l = theta.outer.length();
    if (l == 0) return 1;
    std::vector<std::vector<Rational>> M(l, std::vector<Rational>(l));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) {
            int arg = theta.outer.part(i) - theta.inner.part(j) - i + j;
            M[i - 1][j - 1] = arg < 0 ? Rational(0) : Rational(BigInt(1), factorial(arg));
        }
    // Gaussian elimination over Q.
    Rational det = 1;
    for (int col = 0; col < l; ++col) {
        int pivot = -1;
        for (int r = col; r < l; ++r)
            if (M[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) return 0;
        if (pivot != col) { std::swap(M[pivot], M[col]); det = -det; }
        det *= M[col][col];
        Rational inv = Rational(1) / M[col][col];
        for (int r = col + 1; r < l; ++r) {
            if (M[r][col] == 0) continue;
            Rational f = M[r][col] * inv;
            for (int c = col; c < l; ++c) M[r][c] -= f * M[col][c];
        }
    }
    Rational d = det * Rational(factorial(theta.size()));
    return rat_num(d) / rat_den(d); // exact integer
}

// Hook product H_theta = |theta|! / dim theta.
inline Rational hook_product(const SkewShape& theta) {
    BigInt dim = dim_skew_determinant(theta);
    if (dim == 0) throw std::invalid_argument("hook product of a shape with no standard tableaux");
    return Rational(factorial(theta.size()), dim);
}

// ---------------------------------------------------------------------------
// Classical oracles: Kostka numbers, LR rule, Murnaghan-Nakayama
// ---------------------------------------------------------------------------

namespace detail {

// Enumerates semistandard fillings of outer/inner with given content
// (content[i] copies of letter i+1), invoking visit(word) with the filling
// as a row-major list of letters; returns the count if visit is null-like.
// Used by both kostka_count and lr_coefficient.
template <typename Visit>
void enumerate_ssyt_content(const SkewShape& shape, const std::vector<int>& content, Visit&& visit) {
    auto cells = shape.cells();
    std::vector<int> fill(cells.size(), 0);
    std::vector<int> remaining = content;
    auto letter_at = [&](int row, int col) -> int {
        for (std::size_t k = 0; k < cells.size(); ++k)
            if (cells[k].row == row && cells[k].col == col) return fill[k];
        return 0;
    };
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            visit(fill);
            return;
        }
        const Cell& c = cells[idx];
        int lo = 1;
        if (shape.contains_cell(c.row, c.col - 1)) lo = std::max(lo, letter_at(c.row, c.col - 1));
        if (shape.contains_cell(c.row - 1, c.col)) lo = std::max(lo, letter_at(c.row - 1, c.col) + 1);
        for (int v = lo; v <= static_cast<int>(content.size()); ++v) {
            if (remaining[v - 1] == 0) continue;
            fill[idx] = v;
            --remaining[v - 1];
            self(self, idx + 1);
            ++remaining[v - 1];
            fill[idx] = 0;
        }
    };
    rec(rec, 0);
}

} // namespace detail

// Classical Kostka number: semistandard tableaux of shape lambda, content mu.
inline BigInt kostka_count(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size()) return 0;
    BigInt count = 0;
    std::vector<int> content;
    for (int p : mu.parts()) content.push_back(p);
    detail::enumerate_ssyt_content(SkewShape(lam, Partition{}), content,
                                   [&](const std::vector<int>&) { ++count; });
    return count;
}

// Classical Littlewood-Richardson coefficient via the lattice-word rule on
// gamma/alpha with content beta.
inline BigInt lr_coefficient(const Partition& alpha, const Partition& beta, const Partition& gamma) {
    if (gamma.size() != alpha.size() + beta.size()) return 0;
    if (!gamma.contains(alpha) || !gamma.contains(beta)) return 0;
    SkewShape shape(gamma, alpha);
    auto cells = shape.cells();
    std::vector<int> content;
    for (int p : beta.parts()) content.push_back(p);
    if (content.empty()) return shape.size() == 0 ? 1 : 0;

    BigInt count = 0;
    detail::enumerate_ssyt_content(shape, content, [&](const std::vector<int>& fill) {
        // Reverse reading word: right-to-left within each row, top to bottom.
        // Cells are produced row-major left-to-right, so walk each row block backwards.
        std::vector<int> seen(content.size(), 0);
        std::size_t k = 0;
        bool ok = true;
        while (k < cells.size() && ok) {
            std::size_t rowend = k;
            while (rowend + 1 < cells.size() && cells[rowend + 1].row == cells[k].row) ++rowend;
            for (std::size_t t = rowend + 1; t-- > k && ok;) {
                int v = fill[t];
                ++seen[v - 1];
                if (v > 1 && seen[v - 1] > seen[v - 2]) ok = false;
                if (t == k) break;
            }
            k = rowend + 1;
        }
        if (ok) ++count;
    });
    return count;
}

// Murnaghan-Nakayama: the irreducible character chi^lambda on class mu.
inline BigInt mn_character(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size()) return 0;
    // Recursive rim-hook removal on border strips of size mu_k.
    auto rec = [&](auto&& self, const Partition& shape, std::size_t k) -> BigInt {
        if (k == mu.parts().size()) return shape.empty() ? 1 : 0;
        int strip = mu.parts()[k];
        BigInt total = 0;
        // Remove every border strip of length `strip` from shape.
        // A border strip is determined by its starting row; use the beta-number
        // formulation: first-column hook lengths.
        int l = shape.length();
        std::vector<int> beta(l);
        for (int i = 0; i < l; ++i) beta[i] = shape.part(i + 1) + (l - 1 - i);
        for (int i = 0; i < l; ++i) {
            int nb = beta[i] - strip;
            if (nb < 0) continue;
            bool taken = false;
            for (int j = 0; j < l; ++j)
                if (j != i && beta[j] == nb) { taken = true; break; }
            if (taken) continue;
            // Height = number of beta entries strictly between nb and beta[i].
            int height = 0;
            for (int j = 0; j < l; ++j)
                if (j != i && beta[j] > nb && beta[j] < beta[i]) ++height;
            std::vector<int> nbeta = beta;
            nbeta[i] = nb;
            std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
            std::vector<int> nparts(l);
            for (int j = 0; j < l; ++j) nparts[j] = nbeta[j] - (l - 1 - j);
            Partition nshape{std::vector<int>(nparts)};
            BigInt sub = self(self, nshape, k + 1);
            total += (height % 2 == 0) ? sub : -sub;
        }
        return total;
    };
    return rec(rec, lam, 0);
}

} // namespace dsym
