#pragma once

// Independent test oracles. Everything here recomputes expectations from
// first principles (brute force scans, exhaustive searches, classical
// formulas) and deliberately avoids the code paths under test.

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "ktq/algebra.hpp"
#include "ktq/homology.hpp"
#include "ktq/intlinalg.hpp"

namespace ktq::oracle {

// Unique solution of the division equation found by scanning all candidates.
inline std::optional<Elem> divide_scan(const TernaryQuasigroup& T, Division which, Elem a,
                                       Elem b, Elem c) {
    std::optional<Elem> found;
    for (Elem t = 0; t < T.size(); ++t) {
        bool hit = false;
        switch (which) {
            case Division::left: hit = T.at(t, b, c) == a; break;
            case Division::middle: hit = T.at(a, t, c) == b; break;
            case Division::right: hit = T.at(a, b, t) == c; break;
        }
        if (hit) {
            if (found) return std::nullopt; // not unique
            found = t;
        }
    }
    return found;
}

// The inductive face definition: the left face replaces coordinate i by the
// bracket of its neighborhood and recurses downward until d_0 drops the first
// coordinate; the right face replaces coordinate i+1 and recurses upward
// until d_n drops the last.
inline Tuple face_inductive(const TernaryQuasigroup& T, Side side, int i, int n,
                            const Tuple& t) {
    if (side == Side::L) {
        if (i == 0) return Tuple(t.begin() + 1, t.end());
        Tuple u = t;
        u[i] = T.at(t[i - 1], t[i], t[i + 1]);
        return face_inductive(T, side, i - 1, n, u);
    }
    if (i == n) return Tuple(t.begin(), t.end() - 1);
    Tuple u = t;
    u[i + 1] = T.at(t[i], t[i + 1], t[i + 2]);
    return face_inductive(T, side, i + 1, n, u);
}

// Determinant by cofactor expansion; fine for the tiny matrices used in
// oracle checks.
inline BigInt determinant(const std::vector<std::vector<BigInt>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    BigInt det = 0;
    for (int j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<BigInt>> minor;
        for (int r = 1; r < n; ++r) {
            std::vector<BigInt> row;
            for (int c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        BigInt term = m[0][j] * determinant(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

// Invariant factors from the classical minor-gcd formula: d_k = gcd of all
// k x k minors, invariant factor f_k = d_k / d_{k-1}.
inline std::vector<BigInt> invariant_factors_by_minors(const IntegerMatrix& M) {
    const int rows = M.rows(), cols = M.cols();
    std::vector<std::vector<BigInt>> dense(rows, std::vector<BigInt>(cols, 0));
    for (int r = 0; r < rows; ++r)
        for (const auto& [c, v] : M.row(r)) dense[r][c] = v;

    std::vector<BigInt> gcds; // gcds[k-1] = gcd of k x k minors
    const int kmax = std::min(rows, cols);
    for (int k = 1; k <= kmax; ++k) {
        BigInt g = 0;
        std::vector<int> rsel(k), csel(k);
        // enumerate k-subsets of rows and columns
        for (int i = 0; i < k; ++i) rsel[i] = i;
        while (true) {
            for (int i = 0; i < k; ++i) csel[i] = i;
            while (true) {
                std::vector<std::vector<BigInt>> sub(k, std::vector<BigInt>(k));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) sub[i][j] = dense[rsel[i]][csel[j]];
                g = gcd(g, determinant(sub));
                int pos = k - 1;
                while (pos >= 0 && csel[pos] == cols - k + pos) --pos;
                if (pos < 0) break;
                ++csel[pos];
                for (int i = pos + 1; i < k; ++i) csel[i] = csel[i - 1] + 1;
            }
            int pos = k - 1;
            while (pos >= 0 && rsel[pos] == rows - k + pos) --pos;
            if (pos < 0) break;
            ++rsel[pos];
            for (int i = pos + 1; i < k; ++i) rsel[i] = rsel[i - 1] + 1;
        }
        if (g == 0) break;
        gcds.push_back(g);
    }

    std::vector<BigInt> factors;
    for (std::size_t k = 0; k < gcds.size(); ++k)
        factors.push_back(k == 0 ? gcds[0] : BigInt(gcds[k] / gcds[k - 1]));
    return factors;
}

// Does v lie in the column lattice of M? Exhaustive search over coefficient
// vectors with entries in [-bound, bound]; only usable on tiny instances.
inline bool membership_by_search(const std::vector<BigInt>& v, const IntegerMatrix& M,
                                 int bound) {
    const int rows = M.rows(), cols = M.cols();
    std::vector<int> coef(cols, -bound);
    while (true) {
        bool match = true;
        for (int r = 0; r < rows && match; ++r) {
            BigInt sum = 0;
            for (const auto& [c, w] : M.row(r)) sum += BigInt(coef[c]) * w;
            match = sum == v[r];
        }
        if (match) return true;
        int pos = cols - 1;
        while (pos >= 0 && coef[pos] == bound) coef[pos--] = -bound;
        if (pos < 0) break;
        ++coef[pos];
    }
    return false;
}

// Exhaustive Latin cube enumeration (no axiom pruning); the census
// cross-check for tiny sizes.
inline void all_latin_cubes(int n, const std::function<void(const std::vector<Elem>&)>& visit) {
    std::vector<Elem> cube(static_cast<std::size_t>(n) * n * n, -1);
    auto rec = [&](auto&& self, int cell) -> void {
        if (cell == static_cast<int>(cube.size())) {
            visit(cube);
            return;
        }
        const int z = cell % n, xy = cell / n, x = xy / n, y = xy % n;
        for (Elem v = 0; v < n; ++v) {
            bool ok = true;
            for (int t = 0; t < n && ok; ++t) {
                if (t != z && cube[cube_index(n, x, y, t)] == v) ok = false;
                if (t != y && cube[cube_index(n, x, t, z)] == v) ok = false;
                if (t != x && cube[cube_index(n, t, y, z)] == v) ok = false;
            }
            if (!ok) continue;
            cube[cell] = v;
            self(self, cell + 1);
            cube[cell] = -1;
        }
    };
    rec(rec, 0);
}

// Direct check of both nesting axioms by full scan.
inline bool satisfies_axioms(int n, const std::vector<Elem>& cube) {
    auto at = [&](Elem x, Elem y, Elem z) { return cube[cube_index(n, x, y, z)]; };
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                for (Elem d = 0; d < n; ++d) {
                    const Elem bcd = at(b, c, d), abc = at(a, b, c);
                    if (at(a, b, bcd) != at(a, abc, at(abc, c, d))) return false;
                    if (at(abc, c, d) != at(at(a, b, bcd), bcd, d)) return false;
                }
    return true;
}

} // namespace ktq::oracle
