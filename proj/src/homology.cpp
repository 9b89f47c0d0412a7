#include "ktq/homology.hpp"

#include <algorithm>
#include <sstream>

namespace ktq {

void Chain::add(const Tuple& t, Coef c) {
    if (c == 0) return;
    if (!terms_.empty() && terms_.begin()->first.size() != t.size())
        throw InvariantViolation("chain terms must have equal tuple length");
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Chain& Chain::operator+=(const Chain& other) {
    for (const auto& [t, c] : other.terms_) add(t, c);
    return *this;
}

Tuple face(const TernaryQuasigroup& T, Side side, int i, int n, const Tuple& t) {
    if (n < 0 || i < 0 || i > n) throw std::invalid_argument("face index out of range");
    if (static_cast<int>(t.size()) != n + 2)
        throw std::invalid_argument("tuple length does not match degree");

    Tuple out(n + 1);
    if (side == Side::L) {
        // Coordinates k = 1..n+1 of the image, right to left:
        //   x_k for k > i, and [x_{k-1} x_k (next)] for k <= i.
        Elem next = 0;
        for (int k = n + 1; k >= 1; --k) {
            Elem v = (k > i) ? t[k] : T.at(t[k - 1], t[k], next);
            out[k - 1] = v;
            next = v;
        }
    } else {
        // Coordinates k = 0..n, left to right:
        //   x_k for k <= i, and [(prev) x_k x_{k+1}] for k > i.
        Elem prev = 0;
        for (int k = 0; k <= n; ++k) {
            Elem v = (k <= i) ? t[k] : T.at(prev, t[k], t[k + 1]);
            out[k] = v;
            prev = v;
        }
    }
    return out;
}

bool degenerate_window_d1(const TernaryQuasigroup& T, Elem a, Elem b, Elem c) {
    return c == T.divide(Division::right, a, b, b);
}

bool degenerate_window_d2(const TernaryQuasigroup& T, Elem a, Elem b, Elem c) {
    return b == T.at(a, b, c);
}

bool degenerate_window_d3(const TernaryQuasigroup& T, Elem a, Elem b, Elem c) {
    return a == T.divide(Division::left, b, b, c);
}

bool is_degenerate(const TernaryQuasigroup& T, const Tuple& t, int p, int k) {
    const int n = static_cast<int>(t.size()) - 2;
    // Windows live at i in [p, n-1-k]; an empty range matches the rule that
    // the degenerate submodule vanishes when n-p-k < 1.
    for (int i = p; i + 2 <= n + 1 - k; ++i)
        if (degenerate_window_d2(T, t[i], t[i + 1], t[i + 2])) return true;
    return false;
}

Chain boundary(const ComplexSpec& spec, int n, const Chain& c) {
    Chain out;
    if (c.is_zero()) return out;
    if (!c.terms().empty() &&
        static_cast<int>(c.terms().begin()->first.size()) != n + 2)
        throw std::invalid_argument("chain degree does not match n");

    const TernaryQuasigroup& T = *spec.T;
    for (const auto& [t, coef] : c.terms()) {
        for (int i = spec.p; i <= n - spec.k; ++i) {
            const Coef sign = (i % 2 == 0) ? 1 : -1;
            Tuple left = face(T, Side::L, i, n, t);
            if (!spec.normalized || !is_degenerate(T, left, spec.p, spec.k))
                out.add(left, sign * coef);
            Tuple right = face(T, Side::R, i, n, t);
            if (!spec.normalized || !is_degenerate(T, right, spec.p, spec.k))
                out.add(right, -sign * coef);
        }
    }
    return out;
}

namespace {

std::uint64_t pack_tuple(const Tuple& t, int alphabet) {
    std::uint64_t key = 0;
    for (Elem v : t) key = key * static_cast<std::uint64_t>(alphabet) + static_cast<std::uint64_t>(v);
    return key;
}

} // namespace

TupleBasis::TupleBasis(const ComplexSpec& spec, int n, long long cap)
    : n_(n), alphabet_(spec.T->size()) {
    if (n < -1) throw std::invalid_argument("degree below -1 has no generators");
    const int len = n + 2;

    long long total = 1;
    for (int i = 0; i < len; ++i) {
        total *= alphabet_;
        if (total > cap) {
            std::ostringstream os;
            os << "basis would need " << alphabet_ << "^" << len
               << " tuples, cap is " << cap;
            throw CapExceeded(os.str());
        }
    }

    tuples_.reserve(static_cast<std::size_t>(total));
    Tuple t(len, 0);
    while (true) {
        if (!spec.normalized || !is_degenerate(*spec.T, t, spec.p, spec.k)) {
            index_.emplace(pack_tuple(t, alphabet_), static_cast<int>(tuples_.size()));
            tuples_.push_back(t);
        }
        int pos = len - 1;
        while (pos >= 0 && t[pos] == alphabet_ - 1) t[pos--] = 0;
        if (pos < 0) break;
        ++t[pos];
    }
}

std::optional<int> TupleBasis::index(const Tuple& t) const {
    if (static_cast<int>(t.size()) != n_ + 2) return std::nullopt;
    auto it = index_.find(pack_tuple(t, alphabet_));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<BigInt> TupleBasis::project(const Chain& c) const {
    std::vector<BigInt> v(size(), 0);
    for (const auto& [t, coef] : c.terms()) {
        if (auto idx = index(t)) v[*idx] += static_cast<long>(coef);
    }
    return v;
}

IntegerMatrix boundary_matrix(const ComplexSpec& spec, int n, long long cap) {
    TupleBasis domain(spec, n, cap);
    TupleBasis target(spec, n - 1, cap);
    IntegerMatrix M(target.size(), domain.size());
    for (int col = 0; col < domain.size(); ++col) {
        Chain gen;
        gen.add(domain.tuple(col), 1);
        Chain img = boundary(spec, n, gen);
        for (const auto& [t, coef] : img.terms()) {
            if (auto row = target.index(t)) M.add(*row, col, BigInt(static_cast<long>(coef)));
        }
    }
    return M;
}

HomologyResult homology_group(const ComplexSpec& spec, int n, long long cap) {
    if (n < 0) throw std::invalid_argument("homology degree must be nonnegative");
    TupleBasis basis(spec, n, cap);
    SmithResult down = smith_normal_form(boundary_matrix(spec, n, cap));
    SmithResult up = smith_normal_form(boundary_matrix(spec, n + 1, cap));

    HomologyResult result;
    result.degree = n;
    result.betti = static_cast<long long>(basis.size()) - down.rank - up.rank;
    result.torsion = up.torsion();
    return result;
}

CycleClassifier::CycleClassifier(const ComplexSpec& spec, int n, long long cap)
    : spec_(spec), n_(n), basis_(spec, n, cap),
      boundaries_(hermite_normal_form(boundary_matrix(spec, n + 1, cap))) {}

std::vector<BigInt> CycleClassifier::residue(const Chain& z) const {
    if (!boundary(spec_, n_, z).is_zero())
        throw InvariantViolation("chain is not a cycle in the quotient complex");
    return boundaries_.residue(basis_.project(z));
}

std::vector<long long> CycleClassifier::partition(const std::vector<Chain>& cycles) const {
    std::map<std::vector<BigInt>, long long> classes;
    for (const Chain& z : cycles) ++classes[residue(z)];
    std::vector<long long> sizes;
    sizes.reserve(classes.size());
    for (const auto& [res, count] : classes) sizes.push_back(count);
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

std::vector<BigInt> cycle_residue(const ComplexSpec& spec, int n, const Chain& z, long long cap) {
    return CycleClassifier(spec, n, cap).residue(z);
}

std::vector<long long> classify_cycles(const ComplexSpec& spec, int n,
                                       const std::vector<Chain>& cycles, long long cap) {
    return CycleClassifier(spec, n, cap).partition(cycles);
}

} // namespace ktq
