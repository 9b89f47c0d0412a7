#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ktq/algebra.hpp"
#include "ktq/intlinalg.hpp"

namespace ktq {

// A degree-n generator is an (n+2)-tuple of elements; degree -1 (single
// entries) appears as the target of the bottom differential.
using Tuple = std::vector<Elem>;

using Coef = long long;

// Integer formal sum of equal-length tuples. Zero coefficients are never
// stored; term order is lexicographic, so iteration is deterministic.
class Chain {
public:
    Chain() = default;

    void add(const Tuple& t, Coef c);
    const std::map<Tuple, Coef>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Chain& operator+=(const Chain& other);
    bool operator==(const Chain& other) const { return terms_ == other.terms_; }

private:
    std::map<Tuple, Coef> terms_;
};

enum class Side { L, R };

// Face map d_i^{n,L} or d_i^{n,R} on an (n+2)-tuple, via the one-pass
// coordinate recurrences (left faces fill right to left, right faces left to
// right). Requires 0 <= i <= n and the matching tuple length.
Tuple face(const TernaryQuasigroup& T, Side side, int i, int n, const Tuple& t);

// Chain complex selector: which quasigroup, the truncation window [p, n-k],
// and whether tuples with an interior degeneracy window are quotiented out.
struct ComplexSpec {
    const TernaryQuasigroup* T = nullptr;
    int p = 0;
    int k = 0;
    bool normalized = true;

    ComplexSpec(const TernaryQuasigroup& t, int p_, int k_, bool normalized_ = true)
        : T(&t), p(p_), k(k_), normalized(normalized_) {
        if (p < 0 || k < 0) throw std::invalid_argument("p and k must be nonnegative");
    }
};

// The three equivalent single-window degeneracy conditions on a consecutive
// triple (a,b,c). They agree on every quasigroup; keeping all three makes the
// equivalence testable.
bool degenerate_window_d1(const TernaryQuasigroup& T, Elem a, Elem b, Elem c);
bool degenerate_window_d2(const TernaryQuasigroup& T, Elem a, Elem b, Elem c);
bool degenerate_window_d3(const TernaryQuasigroup& T, Elem a, Elem b, Elem c);

// True iff some window (x_i, x_{i+1}, x_{i+2}) with p <= i and
// i+2 <= n+1-k is degenerate. Tuples too short for any window (n-p-k < 1)
// are never degenerate.
bool is_degenerate(const TernaryQuasigroup& T, const Tuple& t, int p, int k);

// Truncated differential of a homogeneous degree-n chain:
//   sum over i in [p, n-k] of (-1)^i (d_i^L - d_i^R),
// the empty range giving zero. In a normalized spec, degenerate output tuples
// are dropped (the quotient projection).
Chain boundary(const ComplexSpec& spec, int n, const Chain& c);

// All non-quotiented degree-n generators in lexicographic order, with a
// bidirectional index. Degree -1 is allowed (length-1 tuples).
class TupleBasis {
public:
    static constexpr long long kDefaultCap = 10'000'000;

    TupleBasis(const ComplexSpec& spec, int n, long long cap = kDefaultCap);

    int degree() const { return n_; }
    int size() const { return static_cast<int>(tuples_.size()); }
    const Tuple& tuple(int idx) const { return tuples_[idx]; }

    // nullopt when the tuple is not a basis element (e.g. degenerate).
    std::optional<int> index(const Tuple& t) const;

    // Dense coefficient vector of a chain against this basis. Terms outside
    // the basis (degenerate tuples) are dropped.
    std::vector<BigInt> project(const Chain& c) const;

private:
    int n_;
    int alphabet_;
    std::vector<Tuple> tuples_;
    std::unordered_map<std::uint64_t, int> index_;
};

// Matrix of the truncated differential from degree n to degree n-1 over the
// two bases. Zero when the summation range is empty.
IntegerMatrix boundary_matrix(const ComplexSpec& spec, int n, long long cap = TupleBasis::kDefaultCap);

struct HomologyResult {
    int degree = 0;
    long long betti = 0;          // free rank
    std::vector<BigInt> torsion;  // invariant factors > 1, divisibility chain
};

HomologyResult homology_group(const ComplexSpec& spec, int n, long long cap = TupleBasis::kDefaultCap);

// Precomputed data for deciding homology classes of degree-n cycles: the
// degree-n basis plus the Hermite form of the boundary lattice one degree up.
class CycleClassifier {
public:
    CycleClassifier(const ComplexSpec& spec, int n, long long cap = TupleBasis::kDefaultCap);

    // Canonical representative of the homology class of z. Throws
    // InvariantViolation when z is not a cycle in the quotient complex.
    std::vector<BigInt> residue(const Chain& z) const;

    // Multiset of class sizes, ascending.
    std::vector<long long> partition(const std::vector<Chain>& cycles) const;

private:
    ComplexSpec spec_;
    int n_;
    TupleBasis basis_;
    HermiteForm boundaries_;
};

// One-shot helpers built on CycleClassifier.
std::vector<BigInt> cycle_residue(const ComplexSpec& spec, int n, const Chain& z,
                                  long long cap = TupleBasis::kDefaultCap);
std::vector<long long> classify_cycles(const ComplexSpec& spec, int n,
                                       const std::vector<Chain>& cycles,
                                       long long cap = TupleBasis::kDefaultCap);

} // namespace ktq
