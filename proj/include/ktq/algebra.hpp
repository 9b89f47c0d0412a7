#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ktq/errors.hpp"

namespace ktq {

// Elements are 0-based everywhere in the library. File formats and reports
// use 1-based values; conversion happens at the I/O boundary only.
using Elem = int;

enum class Division { left, middle, right };
enum class Axiom { LN, RN };

inline std::size_t cube_index(int n, Elem x, Elem y, Elem z) {
    return (static_cast<std::size_t>(x) * n + y) * n + z;
}

struct LatinViolation {
    int axis;    // 0: x varies (line fixed by y,z), 1: y varies (x,z), 2: z varies (x,y)
    Elem c1, c2; // fixed coordinates of the offending line
    Elem value;  // value appearing more than once on that line
    std::string describe() const;
};

// Checks that every axis-parallel line of the n*n*n table is a permutation
// of {0..n-1}. Values outside that range are an input error, not a violation.
std::optional<LatinViolation> check_latin(int size, const std::vector<Elem>& cube);

// A finite ternary quasigroup: a Latin cube together with its three division
// tables, materialized eagerly so each division is a single lookup.
class TernaryQuasigroup {
public:
    // Validates the Latin property; throws std::invalid_argument otherwise.
    static TernaryQuasigroup from_cube(int size, std::vector<Elem> cube);

    int size() const { return n_; }

    Elem apply(Elem x, Elem y, Elem z) const;

    // divide(left,  d, y, z): the unique x with [x y z] = d
    // divide(middle, x, d, z): the unique y with [x y z] = d
    // divide(right, x, y, d): the unique z with [x y z] = d
    Elem divide(Division which, Elem a, Elem b, Elem c) const;

    // Unchecked lookups; callers guarantee ranges.
    Elem at(Elem x, Elem y, Elem z) const { return cube_[cube_index(n_, x, y, z)]; }

    const std::vector<Elem>& cube() const { return cube_; }

    bool operator==(const TernaryQuasigroup& other) const {
        return n_ == other.n_ && cube_ == other.cube_;
    }

private:
    TernaryQuasigroup(int n, std::vector<Elem> cube);

    int n_ = 0;
    std::vector<Elem> cube_;
    std::vector<Elem> div_left_, div_middle_, div_right_;
};

struct KtqViolation {
    Axiom axiom;
    Elem a, b, c, d;
    std::string describe() const;
};

// Scans all quadruples for the left and right nesting axioms
//   (LN)  [ab[bcd]] = [a[abc][[abc]cd]]
//   (RN)  [[abc]cd] = [[ab[bcd]][bcd]d]
// and reports the first violation (a fastest-varying, then b, c, d; LN before
// RN at the same quadruple).
std::optional<KtqViolation> check_ktq(const TernaryQuasigroup& T);

// A finite group given by its Cayley table; associativity, identity and
// inverses are verified on construction.
class GroupTable {
public:
    static GroupTable from_table(int size, std::vector<Elem> product);
    static GroupTable cyclic(int n);
    static GroupTable direct_product(const GroupTable& g, const GroupTable& h);

    int size() const { return n_; }
    Elem mul(Elem a, Elem b) const { return product_[static_cast<std::size_t>(a) * n_ + b]; }
    Elem identity() const { return identity_; }
    Elem inverse(Elem a) const { return inverse_[a]; }

private:
    GroupTable(int n, std::vector<Elem> product, Elem identity, std::vector<Elem> inverse);

    int n_;
    std::vector<Elem> product_;
    Elem identity_;
    std::vector<Elem> inverse_;
};

// [xyz] = x * y^-1 * z, the operation behind the Dehn presentation.
TernaryQuasigroup from_group_dehn(const GroupTable& G);

// [xyz] = y * z^-1 * alpha * x for a fixed alpha.
TernaryQuasigroup from_group_affine(const GroupTable& G, Elem alpha);

// f maps elements of T1 into T2; true iff f([abc]) = <f(a)f(b)f(c)> for all
// triples. f must have exactly T1.size() entries, each < T2.size().
bool is_homomorphism(const std::vector<Elem>& f, const TernaryQuasigroup& T1,
                     const TernaryQuasigroup& T2);

// Relabels T by perm (perm[old] = new), returning the raw cube of the image.
std::vector<Elem> relabel_cube(const TernaryQuasigroup& T, const std::vector<Elem>& perm);

// Searches all bijections in lexicographic order; returns the first witness
// (so T vs itself yields the identity) or nullopt.
std::optional<std::vector<Elem>> is_isomorphic(const TernaryQuasigroup& T1,
                                               const TernaryQuasigroup& T2);

// Lexicographically least relabeled cube (row-major order). Equal canonical
// forms characterize isomorphism.
std::vector<Elem> canonical_form(const TernaryQuasigroup& T);

} // namespace ktq
