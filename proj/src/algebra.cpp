#include "ktq/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ktq {

namespace {

void require_range(int n, Elem v, const char* what) {
    if (v < 0 || v >= n) {
        std::ostringstream os;
        os << what << " " << v << " out of range [0," << n << ")";
        throw std::out_of_range(os.str());
    }
}

} // namespace

std::string LatinViolation::describe() const {
    static const char* names[3] = {"x", "y", "z"};
    std::ostringstream os;
    os << "value " << value + 1 << " repeats along the " << names[axis]
       << " line with fixed coordinates (" << c1 + 1 << "," << c2 + 1 << ")";
    return os.str();
}

std::optional<LatinViolation> check_latin(int size, const std::vector<Elem>& cube) {
    if (size <= 0) throw std::invalid_argument("table size must be positive");
    const std::size_t n = static_cast<std::size_t>(size);
    if (cube.size() != n * n * n) throw std::invalid_argument("cube has wrong number of entries");
    for (Elem v : cube) {
        if (v < 0 || v >= size) throw std::invalid_argument("cube entry out of range");
    }

    std::vector<char> seen(n);
    auto scan_line = [&](int axis, Elem c1, Elem c2, auto&& entry) -> std::optional<LatinViolation> {
        std::fill(seen.begin(), seen.end(), 0);
        for (int t = 0; t < size; ++t) {
            Elem v = entry(t);
            if (seen[v]) return LatinViolation{axis, c1, c2, v};
            seen[v] = 1;
        }
        return std::nullopt;
    };

    for (Elem a = 0; a < size; ++a) {
        for (Elem b = 0; b < size; ++b) {
            if (auto v = scan_line(0, a, b, [&](int t) { return cube[cube_index(size, t, a, b)]; }))
                return v;
            if (auto v = scan_line(1, a, b, [&](int t) { return cube[cube_index(size, a, t, b)]; }))
                return v;
            if (auto v = scan_line(2, a, b, [&](int t) { return cube[cube_index(size, a, b, t)]; }))
                return v;
        }
    }
    return std::nullopt;
}

TernaryQuasigroup::TernaryQuasigroup(int n, std::vector<Elem> cube)
    : n_(n), cube_(std::move(cube)) {
    const std::size_t total = cube_.size();
    div_left_.assign(total, 0);
    div_middle_.assign(total, 0);
    div_right_.assign(total, 0);
    for (Elem x = 0; x < n_; ++x)
        for (Elem y = 0; y < n_; ++y)
            for (Elem z = 0; z < n_; ++z) {
                Elem d = cube_[cube_index(n_, x, y, z)];
                div_left_[cube_index(n_, d, y, z)] = x;
                div_middle_[cube_index(n_, x, d, z)] = y;
                div_right_[cube_index(n_, x, y, d)] = z;
            }
}

TernaryQuasigroup TernaryQuasigroup::from_cube(int size, std::vector<Elem> cube) {
    if (auto v = check_latin(size, cube)) {
        throw std::invalid_argument("not a Latin cube: " + v->describe());
    }
    return TernaryQuasigroup(size, std::move(cube));
}

Elem TernaryQuasigroup::apply(Elem x, Elem y, Elem z) const {
    require_range(n_, x, "x");
    require_range(n_, y, "y");
    require_range(n_, z, "z");
    return cube_[cube_index(n_, x, y, z)];
}

Elem TernaryQuasigroup::divide(Division which, Elem a, Elem b, Elem c) const {
    require_range(n_, a, "first argument");
    require_range(n_, b, "second argument");
    require_range(n_, c, "third argument");
    switch (which) {
        case Division::left: return div_left_[cube_index(n_, a, b, c)];
        case Division::middle: return div_middle_[cube_index(n_, a, b, c)];
        case Division::right: return div_right_[cube_index(n_, a, b, c)];
    }
    throw std::invalid_argument("unknown division");
}

std::string KtqViolation::describe() const {
    std::ostringstream os;
    os << (axiom == Axiom::LN ? "LN" : "RN") << " fails at (a,b,c,d)=(" << a + 1 << ","
       << b + 1 << "," << c + 1 << "," << d + 1 << ")";
    return os.str();
}

std::optional<KtqViolation> check_ktq(const TernaryQuasigroup& T) {
    const int n = T.size();
    // Quadruples are scanned with a varying fastest (then b, c, d), LN before
    // RN at each quadruple, so the reported violation is deterministic.
    for (Elem d = 0; d < n; ++d)
        for (Elem c = 0; c < n; ++c)
            for (Elem b = 0; b < n; ++b)
                for (Elem a = 0; a < n; ++a) {
                    const Elem bcd = T.at(b, c, d);
                    const Elem abc = T.at(a, b, c);
                    if (T.at(a, b, bcd) != T.at(a, abc, T.at(abc, c, d)))
                        return KtqViolation{Axiom::LN, a, b, c, d};
                    if (T.at(abc, c, d) != T.at(T.at(a, b, bcd), bcd, d))
                        return KtqViolation{Axiom::RN, a, b, c, d};
                }
    return std::nullopt;
}

GroupTable::GroupTable(int n, std::vector<Elem> product, Elem identity, std::vector<Elem> inverse)
    : n_(n), product_(std::move(product)), identity_(identity), inverse_(std::move(inverse)) {}

GroupTable GroupTable::from_table(int size, std::vector<Elem> product) {
    if (size <= 0) throw std::invalid_argument("group size must be positive");
    const std::size_t n = static_cast<std::size_t>(size);
    if (product.size() != n * n) throw std::invalid_argument("Cayley table has wrong size");
    for (Elem v : product) {
        if (v < 0 || v >= size) throw std::invalid_argument("Cayley table entry out of range");
    }
    auto mul = [&](Elem a, Elem b) { return product[static_cast<std::size_t>(a) * size + b]; };

    Elem identity = -1;
    for (Elem e = 0; e < size; ++e) {
        bool ok = true;
        for (Elem a = 0; a < size && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0) throw std::invalid_argument("table has no identity element");

    std::vector<Elem> inverse(n, -1);
    for (Elem a = 0; a < size; ++a) {
        for (Elem b = 0; b < size; ++b) {
            if (mul(a, b) == identity && mul(b, a) == identity) {
                inverse[a] = b;
                break;
            }
        }
        if (inverse[a] < 0) throw std::invalid_argument("table element without inverse");
    }

    for (Elem a = 0; a < size; ++a)
        for (Elem b = 0; b < size; ++b)
            for (Elem c = 0; c < size; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::invalid_argument("table is not associative");

    return GroupTable(size, std::move(product), identity, std::move(inverse));
}

GroupTable GroupTable::cyclic(int n) {
    if (n <= 0) throw std::invalid_argument("group size must be positive");
    std::vector<Elem> product(static_cast<std::size_t>(n) * n);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) product[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    return from_table(n, std::move(product));
}

GroupTable GroupTable::direct_product(const GroupTable& g, const GroupTable& h) {
    const int n = g.size() * h.size();
    std::vector<Elem> product(static_cast<std::size_t>(n) * n);
    auto code = [&](Elem a, Elem b) { return a * h.size() + b; };
    for (Elem a1 = 0; a1 < g.size(); ++a1)
        for (Elem a2 = 0; a2 < h.size(); ++a2)
            for (Elem b1 = 0; b1 < g.size(); ++b1)
                for (Elem b2 = 0; b2 < h.size(); ++b2)
                    product[static_cast<std::size_t>(code(a1, a2)) * n + code(b1, b2)] =
                        code(g.mul(a1, b1), h.mul(a2, b2));
    return from_table(n, std::move(product));
}

TernaryQuasigroup from_group_dehn(const GroupTable& G) {
    const int n = G.size();
    std::vector<Elem> cube(static_cast<std::size_t>(n) * n * n);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            for (Elem z = 0; z < n; ++z)
                cube[cube_index(n, x, y, z)] = G.mul(G.mul(x, G.inverse(y)), z);
    return TernaryQuasigroup::from_cube(n, std::move(cube));
}

TernaryQuasigroup from_group_affine(const GroupTable& G, Elem alpha) {
    const int n = G.size();
    require_range(n, alpha, "alpha");
    std::vector<Elem> cube(static_cast<std::size_t>(n) * n * n);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            for (Elem z = 0; z < n; ++z)
                cube[cube_index(n, x, y, z)] =
                    G.mul(G.mul(G.mul(y, G.inverse(z)), alpha), x);
    return TernaryQuasigroup::from_cube(n, std::move(cube));
}

bool is_homomorphism(const std::vector<Elem>& f, const TernaryQuasigroup& T1,
                     const TernaryQuasigroup& T2) {
    if (static_cast<int>(f.size()) != T1.size())
        throw std::invalid_argument("map domain size mismatch");
    for (Elem v : f) require_range(T2.size(), v, "map value");
    const int n = T1.size();
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                if (f[T1.at(a, b, c)] != T2.at(f[a], f[b], f[c])) return false;
    return true;
}

std::vector<Elem> relabel_cube(const TernaryQuasigroup& T, const std::vector<Elem>& perm) {
    const int n = T.size();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
    std::vector<Elem> out(static_cast<std::size_t>(n) * n * n);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            for (Elem z = 0; z < n; ++z)
                out[cube_index(n, perm[x], perm[y], perm[z])] = perm[T.at(x, y, z)];
    return out;
}

std::optional<std::vector<Elem>> is_isomorphic(const TernaryQuasigroup& T1,
                                               const TernaryQuasigroup& T2) {
    if (T1.size() != T2.size()) return std::nullopt;
    const int n = T1.size();
    std::vector<Elem> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (relabel_cube(T1, perm) == T2.cube()) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

std::vector<Elem> canonical_form(const TernaryQuasigroup& T) {
    const int n = T.size();
    std::vector<Elem> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Elem> best = T.cube();
    do {
        std::vector<Elem> image = relabel_cube(T, perm);
        if (image < best) best = std::move(image);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace ktq
