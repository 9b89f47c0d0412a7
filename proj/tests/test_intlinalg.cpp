#include "doctest.h"

#include <random>

#include "ktq/intlinalg.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace ktq;
using namespace ktq::testing;

namespace {

IntegerMatrix random_matrix(int rows, int cols, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntegerMatrix M(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) M.set(r, c, dist(rng()));
    return M;
}

std::vector<BigInt> column_of(const IntegerMatrix& M, int c) {
    std::vector<BigInt> v(M.rows(), 0);
    for (int r = 0; r < M.rows(); ++r) v[r] = M.get(r, c);
    return v;
}

} // namespace

TEST_CASE("smith normal form of simple matrices") {
    IntegerMatrix diag(2, 2);
    diag.set(0, 0, 2);
    diag.set(1, 1, 3);
    auto snf = smith_normal_form(diag);
    CHECK(snf.rank == 2);
    REQUIRE(snf.factors.size() == 2);
    CHECK(snf.factors[0] == 1);
    CHECK(snf.factors[1] == 6);

    auto zero = smith_normal_form(IntegerMatrix(3, 4));
    CHECK(zero.rank == 0);
    CHECK(zero.factors.empty());

    auto empty = smith_normal_form(IntegerMatrix(0, 0));
    CHECK(empty.rank == 0);
}

TEST_CASE("smith normal form matches the minor-gcd oracle on random matrices") {
    for (int trial = 0; trial < 30; ++trial) {
        auto M = random_matrix(4, 5, -3, 3);
        auto expect = oracle::invariant_factors_by_minors(M);
        auto got = smith_normal_form(M);
        CHECK(got.factors == expect);
        CHECK(got.rank == static_cast<int>(expect.size()));
    }
}

TEST_CASE("invariant factors always form a divisibility chain") {
    for (int trial = 0; trial < 20; ++trial) {
        auto M = random_matrix(5, 5, -6, 6);
        auto snf = smith_normal_form(M);
        for (std::size_t i = 0; i + 1 < snf.factors.size(); ++i)
            CHECK(snf.factors[i + 1] % snf.factors[i] == 0);
    }
}

TEST_CASE("hermite normal form of simple matrices") {
    auto id = hermite_normal_form(IntegerMatrix::identity(3));
    CHECK(id.rank() == 3);
    CHECK(id.matrix() == IntegerMatrix::identity(3));

    IntegerMatrix col(2, 1);
    col.set(0, 0, 2);
    col.set(1, 0, 4);
    auto H = hermite_normal_form(col);
    REQUIRE(H.rank() == 1);
    CHECK(H.columns[0][0] == 2);
    CHECK(H.columns[0][1] == 4);
}

TEST_CASE("hermite normal form is idempotent and preserves the lattice") {
    for (int trial = 0; trial < 20; ++trial) {
        auto M = random_matrix(4, 4, -4, 4);
        auto H = hermite_normal_form(M);

        // mutual membership: every input column reduces to zero against H,
        // and every H column is an integer combination of input columns
        for (int c = 0; c < M.cols(); ++c) CHECK(H.contains(column_of(M, c)));
        auto HM = hermite_normal_form(H.matrix());
        auto back = hermite_normal_form(M);
        for (int c = 0; c < H.rank(); ++c) CHECK(back.contains(H.columns[c]));

        // idempotence: reducing H again returns the identical form
        CHECK(HM.matrix() == H.matrix());
        CHECK(HM.pivot_rows == H.pivot_rows);
    }
}

TEST_CASE("hermite transform is unimodular and reproduces [H | 0]") {
    for (int trial = 0; trial < 10; ++trial) {
        auto M = random_matrix(3, 4, -3, 3);
        auto H = hermite_normal_form(M, true);
        REQUIRE(H.transform.has_value());
        const auto& U = *H.transform;
        REQUIRE(U.rows() == 4);
        REQUIRE(U.cols() == 4);

        std::vector<std::vector<BigInt>> dense(4, std::vector<BigInt>(4, 0));
        for (int r = 0; r < 4; ++r)
            for (const auto& [c, v] : U.row(r)) dense[r][c] = v;
        CHECK(abs(oracle::determinant(dense)) == 1);

        auto MU = M * U;
        for (int c = 0; c < 4; ++c) {
            for (int r = 0; r < 3; ++r) {
                BigInt expect = c < H.rank() ? H.columns[c][r] : BigInt(0);
                CHECK(MU.get(r, c) == expect);
            }
        }
    }
}

TEST_CASE("lattice residue: canonical coset representatives") {
    // M = (2) in dimension 1: residues are plain parities
    IntegerMatrix two(1, 1);
    two.set(0, 0, 2);
    CHECK(lattice_residue({BigInt(5)}, two) == std::vector<BigInt>{1});
    CHECK(lattice_residue({BigInt(-4)}, two) == std::vector<BigInt>{0});

    auto M = random_matrix(4, 3, -3, 3);
    CHECK_THROWS_AS(lattice_residue(std::vector<BigInt>(3, 0), M), std::invalid_argument);

    // first column of M lies in the lattice
    auto r = lattice_residue(column_of(M, 0), M);
    CHECK(std::all_of(r.begin(), r.end(), [](const BigInt& x) { return x == 0; }));
}

TEST_CASE("residue is constant on cosets and zero exactly on the lattice") {
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        auto M = random_matrix(3, 2, -2, 2);
        auto H = hermite_normal_form(M);

        std::vector<BigInt> v{coef(rng()), coef(rng()), coef(rng())};
        auto res_v = H.residue(v);

        // shifting by a random lattice vector does not change the residue
        std::vector<BigInt> shifted = v;
        const int a = coef(rng()), b = coef(rng());
        for (int r = 0; r < 3; ++r) shifted[r] += BigInt(a) * M.get(r, 0) + BigInt(b) * M.get(r, 1);
        CHECK(H.residue(shifted) == res_v);

        // zero residue agrees with the bounded membership search
        const bool zero = std::all_of(res_v.begin(), res_v.end(),
                                      [](const BigInt& x) { return x == 0; });
        CHECK(zero == oracle::membership_by_search(v, M, 12));
    }
}
