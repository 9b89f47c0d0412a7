#include "ktq/intlinalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ktq {

namespace {

// Quotient with remainder rounded to nearest (|a - q*d| <= |d|/2), which keeps
// coefficient growth down during elimination.
BigInt round_quot(const BigInt& a, const BigInt& d) {
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    BigInt ad = abs(d);
    if (r * 2 > ad) q += sgn(d);
    return q;
}

BigInt floor_quot(const BigInt& a, const BigInt& d) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
}

} // namespace

IntegerMatrix::IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

IntegerMatrix IntegerMatrix::identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

BigInt IntegerMatrix::get(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    auto it = data_[r].find(c);
    return it == data_[r].end() ? BigInt(0) : it->second;
}

void IntegerMatrix::set(int r, int c, BigInt v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    if (v == 0)
        data_[r].erase(c);
    else
        data_[r][c] = std::move(v);
}

void IntegerMatrix::add(int r, int c, const BigInt& v) {
    if (v == 0) return;
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    auto [it, inserted] = data_[r].try_emplace(c, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) data_[r].erase(it);
    }
}

long long IntegerMatrix::nonzero_count() const {
    long long total = 0;
    for (const auto& row : data_) total += static_cast<long long>(row.size());
    return total;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    IntegerMatrix out(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [k, v] : data_[r])
            for (const auto& [c, w] : other.data_[k]) out.add(r, c, v * w);
    return out;
}

bool IntegerMatrix::operator==(const IntegerMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::vector<BigInt> SmithResult::torsion() const {
    std::vector<BigInt> out;
    for (const auto& f : factors)
        if (f > 1) out.push_back(f);
    return out;
}

namespace {

// Shared sparse elimination state: rows as maps plus a per-column index of the
// rows holding a nonzero entry.
struct SnfWorkspace {
    std::vector<std::map<int, BigInt>> rows;
    std::vector<std::set<int>> col_rows;

    explicit SnfWorkspace(const IntegerMatrix& m)
        : rows(m.rows()), col_rows(m.cols()) {
        for (int r = 0; r < m.rows(); ++r) {
            rows[r] = m.row(r);
            for (const auto& [c, v] : rows[r]) col_rows[c].insert(r);
        }
    }

    void set_entry(int r, int c, BigInt v) {
        if (v == 0) {
            rows[r].erase(c);
            col_rows[c].erase(r);
        } else {
            rows[r][c] = std::move(v);
            col_rows[c].insert(r);
        }
    }

    // rows[dst] -= q * rows[src]
    void row_subtract(int dst, int src, const BigInt& q) {
        for (const auto& [c, w] : rows[src]) {
            auto it = rows[dst].find(c);
            if (it == rows[dst].end()) {
                rows[dst][c] = -q * w;
                col_rows[c].insert(dst);
            } else {
                it->second -= q * w;
                if (it->second == 0) {
                    rows[dst].erase(it);
                    col_rows[c].erase(dst);
                }
            }
        }
    }

    // Pivot choice: smallest magnitude, then least Markowitz fill count, then
    // lowest row and column index. The first unit entry with fill count zero
    // cannot be beaten, which makes the common case cheap.
    bool select_pivot(int& pr, int& pc) const {
        bool found = false;
        BigInt best_mag;
        long long best_fill = 0;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            for (const auto& [c, v] : rows[r]) {
                BigInt mag = abs(v);
                long long fill = static_cast<long long>(rows[r].size() - 1) *
                                 static_cast<long long>(col_rows[c].size() - 1);
                if (!found || mag < best_mag || (mag == best_mag && fill < best_fill)) {
                    found = true;
                    best_mag = mag;
                    best_fill = fill;
                    pr = r;
                    pc = c;
                    if (best_mag == 1 && best_fill == 0) return true;
                }
            }
        }
        return found;
    }
};

void enforce_divisibility_chain(std::vector<BigInt>& factors) {
    std::sort(factors.begin(), factors.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
            if (factors[i + 1] % factors[i] != 0) {
                BigInt g = gcd(factors[i], factors[i + 1]);
                BigInt l = factors[i] / g * factors[i + 1];
                factors[i] = g;
                factors[i + 1] = l;
                changed = true;
            }
        }
        if (changed) std::sort(factors.begin(), factors.end());
    }
}

} // namespace

SmithResult smith_normal_form(const IntegerMatrix& M) {
    SnfWorkspace ws(M);
    std::vector<BigInt> factors;

    int pr = 0, pc = 0;
    while (ws.select_pivot(pr, pc)) {
        const BigInt v = ws.rows[pr].at(pc);

        // Clear the pivot column by row operations; remainders smaller than
        // the pivot force a global reselect, which is the Euclidean step.
        std::vector<int> col(ws.col_rows[pc].begin(), ws.col_rows[pc].end());
        for (int r : col) {
            if (r == pr) continue;
            BigInt q = round_quot(ws.rows[r].at(pc), v);
            if (q != 0) ws.row_subtract(r, pr, q);
        }
        if (ws.col_rows[pc].size() != 1) continue;

        // Column is clear, so implicit column operations only touch the pivot
        // row: reduce its remaining entries modulo the pivot.
        bool lone = true;
        std::vector<std::pair<int, BigInt>> entries(ws.rows[pr].begin(), ws.rows[pr].end());
        for (auto& [c, b] : entries) {
            if (c == pc) continue;
            BigInt q = round_quot(b, v);
            BigInt rem = b - q * v;
            if (rem != 0) lone = false;
            ws.set_entry(pr, c, std::move(rem));
        }
        if (!lone) continue;

        factors.push_back(abs(v));
        ws.set_entry(pr, pc, 0);
    }

    enforce_divisibility_chain(factors);
    SmithResult result;
    result.rank = static_cast<int>(factors.size());
    result.factors = std::move(factors);
    return result;
}

namespace {

struct HnfWorkspace {
    int nrows, ncols;
    std::vector<std::map<int, BigInt>> cols;
    std::vector<std::set<int>> row_cols;
    std::vector<char> active;
    bool track;
    std::vector<std::map<int, BigInt>> tcols; // transform columns, identity at start

    HnfWorkspace(const IntegerMatrix& m, bool want_transform)
        : nrows(m.rows()), ncols(m.cols()), cols(m.cols()), row_cols(m.rows()),
          active(m.cols(), 1), track(want_transform), tcols(want_transform ? m.cols() : 0) {
        for (int r = 0; r < nrows; ++r)
            for (const auto& [c, v] : m.row(r)) {
                cols[c][r] = v;
                row_cols[r].insert(c);
            }
        if (track)
            for (int c = 0; c < ncols; ++c) tcols[c][c] = 1;
    }

    void col_update(int c, int r, BigInt v) {
        if (v == 0) {
            cols[c].erase(r);
            row_cols[r].erase(c);
        } else {
            cols[c][r] = std::move(v);
            row_cols[r].insert(c);
        }
    }

    // cols[dst] -= q * cols[src]
    void col_subtract(int dst, int src, const BigInt& q) {
        for (const auto& [r, w] : cols[src]) {
            auto it = cols[dst].find(r);
            if (it == cols[dst].end()) {
                cols[dst][r] = -q * w;
                row_cols[r].insert(dst);
            } else {
                it->second -= q * w;
                if (it->second == 0) {
                    cols[dst].erase(it);
                    row_cols[r].erase(dst);
                }
            }
        }
        if (track)
            for (const auto& [r, w] : tcols[src]) {
                auto it = tcols[dst].find(r);
                if (it == tcols[dst].end()) {
                    tcols[dst][r] = -q * w;
                } else {
                    it->second -= q * w;
                    if (it->second == 0) tcols[dst].erase(it);
                }
            }
    }

    void col_negate(int c) {
        for (auto& [r, w] : cols[c]) w = -w;
        if (track)
            for (auto& [r, w] : tcols[c]) w = -w;
    }
};

} // namespace

HermiteForm hermite_normal_form(const IntegerMatrix& M, bool want_transform) {
    HnfWorkspace ws(M, want_transform);
    std::vector<std::pair<int, int>> pivots; // (row, workspace column)

    for (int r = 0; r < ws.nrows; ++r) {
        // Gather active columns with a nonzero entry on this row and combine
        // them until one survives; it becomes the pivot column for the row.
        while (true) {
            std::vector<int> cand(ws.row_cols[r].begin(), ws.row_cols[r].end());
            if (cand.empty()) break;
            if (cand.size() == 1) {
                int j = cand[0];
                if (ws.cols[j].begin()->second < 0) ws.col_negate(j);
                pivots.emplace_back(r, j);
                ws.active[j] = 0;
                // Retired columns leave the row index so later rows skip them.
                std::vector<std::pair<int, BigInt>> seen(ws.cols[j].begin(), ws.cols[j].end());
                for (const auto& [rr, vv] : seen) ws.row_cols[rr].erase(j);
                break;
            }
            int best = cand[0];
            BigInt best_mag = abs(ws.cols[best].at(r));
            for (std::size_t i = 1; i < cand.size(); ++i) {
                BigInt mag = abs(ws.cols[cand[i]].at(r));
                if (mag < best_mag) {
                    best = cand[i];
                    best_mag = mag;
                }
            }
            const BigInt v = ws.cols[best].at(r);
            for (int j : cand) {
                if (j == best) continue;
                BigInt q = round_quot(ws.cols[j].at(r), v);
                if (q != 0) ws.col_subtract(j, best, q);
            }
        }
    }

    HermiteForm H;
    H.rows = ws.nrows;
    std::vector<int> pivot_cols;
    for (const auto& [r, j] : pivots) {
        H.pivot_rows.push_back(r);
        pivot_cols.push_back(j);
        std::vector<BigInt> dense(ws.nrows, 0);
        for (const auto& [rr, vv] : ws.cols[j]) dense[rr] = vv;
        H.columns.push_back(std::move(dense));
    }

    // Canonical reduction: entries of earlier columns on each pivot row are
    // brought into [0, pivot).
    std::vector<std::map<int, BigInt>>* tc = want_transform ? &ws.tcols : nullptr;
    for (std::size_t j = 0; j < H.columns.size(); ++j) {
        const int rj = H.pivot_rows[j];
        const BigInt& d = H.columns[j][rj];
        for (std::size_t i = 0; i < j; ++i) {
            BigInt q = floor_quot(H.columns[i][rj], d);
            if (q == 0) continue;
            for (int rr = rj; rr < ws.nrows; ++rr)
                if (H.columns[j][rr] != 0) H.columns[i][rr] -= q * H.columns[j][rr];
            if (tc) {
                for (const auto& [rr, w] : (*tc)[pivot_cols[j]]) {
                    auto it = (*tc)[pivot_cols[i]].find(rr);
                    if (it == (*tc)[pivot_cols[i]].end())
                        (*tc)[pivot_cols[i]][rr] = -q * w;
                    else {
                        it->second -= q * w;
                        if (it->second == 0) (*tc)[pivot_cols[i]].erase(it);
                    }
                }
            }
        }
    }

    if (want_transform) {
        IntegerMatrix U(ws.ncols, ws.ncols);
        int out = 0;
        for (int j : pivot_cols) {
            for (const auto& [r, w] : ws.tcols[j]) U.set(r, out, w);
            ++out;
        }
        for (int j = 0; j < ws.ncols; ++j) {
            if (!ws.active[j]) continue;
            for (const auto& [r, w] : ws.tcols[j]) U.set(r, out, w);
            ++out;
        }
        H.transform = std::move(U);
    }
    return H;
}

std::vector<BigInt> HermiteForm::residue(std::vector<BigInt> v) const {
    if (static_cast<int>(v.size()) != rows) {
        std::ostringstream os;
        os << "vector has " << v.size() << " entries, lattice lives in dimension " << rows;
        throw std::invalid_argument(os.str());
    }
    for (std::size_t j = 0; j < columns.size(); ++j) {
        const int rj = pivot_rows[j];
        BigInt q = floor_quot(v[rj], columns[j][rj]);
        if (q == 0) continue;
        for (int r = rj; r < rows; ++r)
            if (columns[j][r] != 0) v[r] -= q * columns[j][r];
    }
    return v;
}

bool HermiteForm::contains(std::vector<BigInt> v) const {
    v = residue(std::move(v));
    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

IntegerMatrix HermiteForm::matrix() const {
    IntegerMatrix H(rows, rank());
    for (int j = 0; j < rank(); ++j)
        for (int r = 0; r < rows; ++r)
            if (columns[j][r] != 0) H.set(r, j, columns[j][r]);
    return H;
}

std::vector<BigInt> lattice_residue(std::vector<BigInt> v, const IntegerMatrix& M) {
    if (static_cast<int>(v.size()) != M.rows())
        throw std::invalid_argument("residue vector dimension mismatch");
    return hermite_normal_form(M).residue(std::move(v));
}

} // namespace ktq
