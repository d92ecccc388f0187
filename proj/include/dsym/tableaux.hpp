#pragma once

/*
 * tableaux.hpp
 * ------------
 * Deterministic enumerators for the tableau families used throughout:
 *
 *   - reverse tableaux        rows weakly decrease, columns strictly decrease
 *   - semistandard tableaux   rows weakly increase, columns strictly increase
 *   - A / A' supertableaux    primed-unprimed alphabet under the two orderings
 *                             1' < 1 < 2' < 2 < ...  and  1 < 1' < 2 < 2' < ...
 *   - flagged integer fillings with per-cell ranges (hook and dual hook
 *     tableaux and their column/row-flagged alternatives)
 *   - barred supertableaux    the Yamanouchi-marked fillings weighting the
 *                             dual Littlewood-Richardson formula
 *
 * Every enumerator fills cells in row-major order trying entries in
 * increasing (family-)order, so the output order is lexicographic and
 * byte-stable across runs.
 */

#include "partition.hpp"

#include <functional>
#include <vector>

namespace dsym {

struct Entry {
    int value = 0;
    bool primed = false;
    friend bool operator==(const Entry& a, const Entry& b) {
        return a.value == b.value && a.primed == b.primed;
    }
};

// A filling of a shape: entries aligned with shape.cells() (row-major).
struct Tableau {
    std::vector<Cell> cells;
    std::vector<Entry> entries;

    // Entry at (row, col); cell must belong to the shape.
    const Entry& at(int row, int col) const {
        for (std::size_t k = 0; k < cells.size(); ++k)
            if (cells[k].row == row && cells[k].col == col) return entries[k];
        throw std::out_of_range("cell not in tableau");
    }
};

namespace detail {

// Generic row-major backtracking over entries drawn from `alphabet` (already
// in the family's increasing order); `ok(idx, entry)` checks the candidate
// against the already-filled prefix.
template <typename Ok, typename Emit>
void fill_cells(const std::vector<Cell>& cells, const std::vector<Entry>& alphabet,
                Ok&& ok, Emit&& emit) {
    std::vector<Entry> fill(cells.size());
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            emit(fill);
            return;
        }
        for (const Entry& e : alphabet) {
            if (!ok(fill, idx, e)) continue;
            fill[idx] = e;
            self(self, idx + 1);
        }
    };
    rec(rec, 0);
}

inline int find_cell(const std::vector<Cell>& cells, int row, int col) {
    for (std::size_t k = 0; k < cells.size(); ++k)
        if (cells[k].row == row && cells[k].col == col) return static_cast<int>(k);
    return -1;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Reverse and semistandard tableaux with entries 1..n
// ---------------------------------------------------------------------------

inline std::vector<Tableau> reverse_tableaux(const SkewShape& shape, int n) {
    auto cells = shape.cells();
    std::vector<Entry> alphabet;
    for (int v = 1; v <= n; ++v) alphabet.push_back({v, false});
    std::vector<Tableau> out;
    detail::fill_cells(cells, alphabet,
        [&](const std::vector<Entry>& fill, std::size_t idx, const Entry& e) {
            const Cell& c = cells[idx];
            int left = detail::find_cell(cells, c.row, c.col - 1);
            if (left >= 0 && !(fill[left].value >= e.value)) return false;
            int up = detail::find_cell(cells, c.row - 1, c.col);
            if (up >= 0 && !(fill[up].value > e.value)) return false;
            return true;
        },
        [&](const std::vector<Entry>& fill) { out.push_back({cells, fill}); });
    return out;
}

inline std::vector<Tableau> semistandard_tableaux(const SkewShape& shape, int n) {
    auto cells = shape.cells();
    std::vector<Entry> alphabet;
    for (int v = 1; v <= n; ++v) alphabet.push_back({v, false});
    std::vector<Tableau> out;
    detail::fill_cells(cells, alphabet,
        [&](const std::vector<Entry>& fill, std::size_t idx, const Entry& e) {
            const Cell& c = cells[idx];
            int left = detail::find_cell(cells, c.row, c.col - 1);
            if (left >= 0 && !(fill[left].value <= e.value)) return false;
            int up = detail::find_cell(cells, c.row - 1, c.col);
            if (up >= 0 && !(fill[up].value < e.value)) return false;
            return true;
        },
        [&](const std::vector<Entry>& fill) { out.push_back({cells, fill}); });
    return out;
}

// ---------------------------------------------------------------------------
// A / A' supertableaux (supersymmetric Schur functions)
// ---------------------------------------------------------------------------

enum class SuperOrder { A, Aprime };

// Rank of an entry in the chosen alphabet order (1-based, increasing).
inline int super_rank(const Entry& e, SuperOrder order) {
    if (order == SuperOrder::A) return e.primed ? 2 * e.value - 1 : 2 * e.value;
    return e.primed ? 2 * e.value : 2 * e.value - 1;
}

// Entries weakly increase along rows and down columns in the alphabet order;
// at most one i' per row and at most one i per column.
inline std::vector<Tableau> super_tableaux(const SkewShape& shape, int n, SuperOrder order) {
    auto cells = shape.cells();
    std::vector<Entry> alphabet;
    for (int r = 1; r <= 2 * n; ++r)
        for (int v = 1; v <= n; ++v)
            for (bool primed : {false, true}) {
                Entry e{v, primed};
                if (super_rank(e, order) == r) alphabet.push_back(e);
            }
    std::vector<Tableau> out;
    detail::fill_cells(cells, alphabet,
        [&](const std::vector<Entry>& fill, std::size_t idx, const Entry& e) {
            const Cell& c = cells[idx];
            int left = detail::find_cell(cells, c.row, c.col - 1);
            if (left >= 0) {
                const Entry& L = fill[left];
                if (super_rank(L, order) > super_rank(e, order)) return false;
                if (L == e && e.primed) return false; // one i' per row
            }
            int up = detail::find_cell(cells, c.row - 1, c.col);
            if (up >= 0) {
                const Entry& U = fill[up];
                if (super_rank(U, order) > super_rank(e, order)) return false;
                if (U == e && !e.primed) return false; // one i per column
            }
            return true;
        },
        [&](const std::vector<Entry>& fill) { out.push_back({cells, fill}); });
    return out;
}

// ---------------------------------------------------------------------------
// Flagged integer fillings (hook / dual hook tableau building blocks)
// ---------------------------------------------------------------------------

enum class Rule { weak_inc, strict_inc, weak_dec, strict_dec };

inline bool rule_ok(Rule r, int prev, int next) {
    switch (r) {
    case Rule::weak_inc: return prev <= next;
    case Rule::strict_inc: return prev < next;
    case Rule::weak_dec: return prev >= next;
    case Rule::strict_dec: return prev > next;
    }
    return false;
}

// An integer filling of an explicit cell list: fillings[k] is the entry of
// cells[k].  Ranges give the inclusive [lo, hi] alphabet per cell.
struct IntFilling {
    std::vector<Cell> cells;
    std::vector<int> values;
};

// Enumerates fillings of `cells` with values[k] in ranges[k], `along` the row
// rule for horizontal neighbors and `down` for vertical neighbors.
inline std::vector<IntFilling> flagged_fillings(const std::vector<Cell>& cells,
                                                const std::vector<std::pair<int, int>>& ranges,
                                                Rule along, Rule down) {
    std::vector<IntFilling> out;
    std::vector<int> fill(cells.size(), 0);
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            out.push_back({cells, fill});
            return;
        }
        const Cell& c = cells[idx];
        int left = detail::find_cell(cells, c.row, c.col - 1);
        int up = detail::find_cell(cells, c.row - 1, c.col);
        for (int v = ranges[idx].first; v <= ranges[idx].second; ++v) {
            if (left >= 0 && !rule_ok(along, fill[left], v)) continue;
            if (up >= 0 && !rule_ok(down, fill[up], v)) continue;
            fill[idx] = v;
            self(self, idx + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// Splits lambda/mu (equal diagonal count d) into the part in rows 1..d and
// the part in rows > d (equivalently columns 1..d).
inline std::vector<Cell> skew_cells_top(const SkewShape& shape, int d) {
    std::vector<Cell> out;
    for (const auto& c : shape.cells())
        if (c.row <= d) out.push_back(c);
    return out;
}
inline std::vector<Cell> skew_cells_bottom(const SkewShape& shape, int d) {
    std::vector<Cell> out;
    for (const auto& c : shape.cells())
        if (c.row > d) out.push_back(c);
    return out;
}

// ---------------------------------------------------------------------------
// Barred supertableaux (Yamanouchi-marked fillings)
// ---------------------------------------------------------------------------

// The column order: columns left to right, bottom to top within each column.
inline std::vector<int> column_order(const std::vector<Cell>& cells) {
    std::vector<int> idx(cells.size());
    for (std::size_t k = 0; k < cells.size(); ++k) idx[k] = static_cast<int>(k);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (cells[a].col != cells[b].col) return cells[a].col < cells[b].col;
        return cells[a].row > cells[b].row;
    });
    return idx;
}

// Supertableaux of the second kind (the dual LR formula): primed left/above
// unprimed in every row/column; unprimed weakly decrease along rows and
// strictly decrease down columns; primed strictly increase along rows and
// weakly increase down columns.
inline std::vector<Tableau> dual_lr_supertableaux(const SkewShape& shape, int n) {
    auto cells = shape.cells();
    std::vector<Entry> alphabet;
    for (int v = 1; v <= n; ++v) alphabet.push_back({v, true});
    for (int v = 1; v <= n; ++v) alphabet.push_back({v, false});
    auto pair_ok_row = [](const Entry& L, const Entry& R) {
        if (!L.primed && R.primed) return false;
        if (!L.primed && !R.primed) return L.value >= R.value;
        if (L.primed && R.primed) return L.value < R.value;
        return true; // primed then unprimed
    };
    auto pair_ok_col = [](const Entry& U, const Entry& B) {
        if (!U.primed && B.primed) return false;
        if (!U.primed && !B.primed) return U.value > B.value;
        if (U.primed && B.primed) return U.value <= B.value;
        return true;
    };
    std::vector<Tableau> out;
    detail::fill_cells(cells, alphabet,
        [&](const std::vector<Entry>& fill, std::size_t idx, const Entry& e) {
            const Cell& c = cells[idx];
            int left = detail::find_cell(cells, c.row, c.col - 1);
            if (left >= 0 && !pair_ok_row(fill[left], e)) return false;
            int up = detail::find_cell(cells, c.row - 1, c.col);
            if (up >= 0 && !pair_ok_col(fill[up], e)) return false;
            return true;
        },
        [&](const std::vector<Entry>& fill) { out.push_back({cells, fill}); });
    return out;
}

// A barred supertableau: a dual-LR supertableau plus the chosen barred cells
// (indices into tab.cells, listed in column order) and, for each unbarred
// unprimed cell, the partition rho(alpha) determined by its position between
// consecutive barred cells.
struct BarredSupertableau {
    Tableau tab;
    std::vector<int> barred;                  // cell indices, in column order
    std::vector<Partition> rho;               // per cell; meaningful for unbarred unprimed cells
};

inline std::vector<BarredSupertableau> barred_supertableaux(const SkewShape& shape,
                                                            const GrowthChain& R, int n) {
    std::vector<BarredSupertableau> out;
    int l = R.length();
    if (l > shape.size()) return out;
    auto tabs = dual_lr_supertableaux(shape, n);
    for (const auto& tab : tabs) {
        auto corder = column_order(tab.cells);
        // Positions of unprimed cells in column order.
        std::vector<int> unprimed;
        for (int k : corder)
            if (!tab.entries[k].primed) unprimed.push_back(k);
        // Choose an increasing subsequence of unprimed positions with
        // entries matching the Yamanouchi symbol.
        std::vector<int> choice(l, -1);
        auto rec = [&](auto&& self, int i, std::size_t from) -> void {
            if (i == l) {
                BarredSupertableau b;
                b.tab = tab;
                for (int c : choice) b.barred.push_back(c);
                // rho(alpha) for unbarred unprimed cells.
                b.rho.assign(tab.cells.size(), Partition{});
                int seen = 0; // number of barred cells passed in column order
                std::size_t bar_pos = 0;
                std::vector<bool> is_barred(tab.cells.size(), false);
                for (int c : choice) is_barred[c] = true;
                (void)bar_pos;
                for (int k : unprimed) {
                    if (is_barred[k]) { ++seen; continue; }
                    b.rho[k] = R.chain[seen];
                }
                out.push_back(std::move(b));
                return;
            }
            for (std::size_t p = from; p < unprimed.size(); ++p) {
                int k = unprimed[p];
                if (tab.entries[k].value != R.yamanouchi[i]) continue;
                choice[i] = k;
                self(self, i + 1, p + 1);
            }
            choice[i] = -1;
        };
        rec(rec, 0, 0);
    }
    return out;
}

} // namespace dsym
