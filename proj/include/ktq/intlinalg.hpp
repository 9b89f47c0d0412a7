#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <vector>

#include "ktq/errors.hpp"

namespace ktq {

// All linear algebra in this module is exact. Entries are arbitrary-precision
// integers; normal-form pivoting can blow up fixed-width types even on
// moderately sized boundary matrices.
using BigInt = mpz_class;

// Sparse integer matrix (row-major maps). Absent entries are zero; stored
// entries are never zero.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(int rows, int cols);

    static IntegerMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt get(int r, int c) const;
    void set(int r, int c, BigInt v); // setting zero erases the entry
    void add(int r, int c, const BigInt& v);

    const std::map<int, BigInt>& row(int r) const { return data_[r]; }
    long long nonzero_count() const;

    IntegerMatrix operator*(const IntegerMatrix& other) const;
    bool operator==(const IntegerMatrix& other) const;
    bool is_zero() const { return nonzero_count() == 0; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::map<int, BigInt>> data_;
};

struct SmithResult {
    std::vector<BigInt> factors; // nonzero invariant factors, d1 | d2 | ...
    int rank = 0;                // == factors.size()

    std::vector<BigInt> torsion() const; // factors > 1
};

// Diagonalizes by unimodular row/column operations. Pivot choice: smallest
// nonzero magnitude, then least fill (Markowitz count), then lowest row and
// column index, which keeps runs reproducible.
SmithResult smith_normal_form(const IntegerMatrix& M);

// Column-style Hermite normal form of the column lattice of a matrix. Columns
// are kept in pivot-row order; the pivot entry of each column is positive and
// entries of earlier columns on a pivot row are reduced into [0, pivot).
// This form is the unique canonical basis of the lattice, so it doubles as a
// membership and coset-representative oracle.
struct HermiteForm {
    int rows = 0;
    std::vector<int> pivot_rows;              // strictly increasing
    std::vector<std::vector<BigInt>> columns; // dense, one per pivot

    // Optional unimodular U with M*U = [H | 0] (wide matrices make it large,
    // so it is only recorded on request).
    std::optional<IntegerMatrix> transform;

    int rank() const { return static_cast<int>(columns.size()); }

    // Canonical representative of v modulo the lattice: entries at pivot rows
    // reduced into [0, pivot). residue(v) == residue(w) iff v - w lies in the
    // lattice; residue zero iff v does.
    std::vector<BigInt> residue(std::vector<BigInt> v) const;

    bool contains(std::vector<BigInt> v) const;

    IntegerMatrix matrix() const;
};

HermiteForm hermite_normal_form(const IntegerMatrix& M, bool want_transform = false);

// One-shot convenience around HermiteForm::residue.
std::vector<BigInt> lattice_residue(std::vector<BigInt> v, const IntegerMatrix& M);

} // namespace ktq
