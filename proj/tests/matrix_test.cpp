/*
   Copyright 2026 The nullcone Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "nullcone/matrix.hpp"
#include "test_util.hpp"

namespace nullcone {
namespace {

using P = Polynomial<PrimeField>;
using Elem = PrimeField::Elem;
using Dense = std::vector<std::vector<Elem>>;

// Oracle: sum over perfect matchings of sign(crossings) * product of pair entries.
Elem matching_sum(const PrimeField& f, const Dense& a) {
    const std::size_t n = a.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<bool> used(n, false);
    Elem total = 0;
    auto rec = [&](auto&& self) -> void {
        std::size_t i = 0;
        while (i < n && used[i]) ++i;
        if (i == n) {
            int crossings = 0;
            for (auto [a1, b1] : pairs)
                for (auto [a2, b2] : pairs)
                    if (a1 < a2 && a2 < b1 && b1 < b2) ++crossings;
            Elem prod = 1;
            for (auto [x, y] : pairs) prod = f.mul(prod, a[x][y]);
            total = crossings % 2 ? f.sub(total, prod) : f.add(total, prod);
            return;
        }
        used[i] = true;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (used[j]) continue;
            used[j] = true;
            pairs.emplace_back(i, j);
            self(self);
            pairs.pop_back();
            used[j] = false;
        }
        used[i] = false;
    };
    rec(rec);
    return total;
}

// Oracle: Gaussian elimination over F_p.
Elem gauss_det(const PrimeField& f, Dense a) {
    const std::size_t n = a.size();
    Elem d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            d = f.neg(d);
        }
        d = f.mul(d, a[c][c]);
        Elem inv = f.inv(a[c][c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            Elem factor = f.mul(a[r][c], inv);
            for (std::size_t k = c; k < n; ++k) a[r][k] = f.sub(a[r][k], f.mul(factor, a[c][k]));
        }
    }
    return d;
}

PolyMatrix<PrimeField> constant_matrix(const RingPtr<PrimeField>& ring, const Dense& a) {
    PolyMatrix<PrimeField> m(ring, a.size(), a.empty() ? 0 : a[0].size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) m.at(i, j) = P::constant(ring, a[i][j]);
    return m;
}

Elem value_of(const P& p) { return p.is_zero() ? 0 : p.leading_coeff(); }

Dense random_alternating(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
    Dense a(n, std::vector<Elem>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            a[i][j] = testing::random_elem(f, rng);
            a[j][i] = f.neg(a[i][j]);
        }
    return a;
}

TEST(IndexSetTest, ValidatesAndComplements) {
    EXPECT_THROW(IndexSet({0}, 3), InvalidArgument);
    EXPECT_THROW(IndexSet({4}, 3), InvalidArgument);
    EXPECT_THROW(IndexSet({2, 2}, 3), InvalidArgument);
    EXPECT_EQ(IndexSet({2}, 4).complement(), IndexSet({1, 3, 4}, 4));
    EXPECT_EQ(IndexSet::all(3), IndexSet({1, 2, 3}, 3));
    EXPECT_EQ(IndexSet::range(3, 2, 5).size(), 0u);
}

TEST(IndexSetTest, SubsetsAreLexOrderedAndCounted) {
    auto s = subsets(5, 2);
    ASSERT_EQ(s.size(), 10u);
    EXPECT_EQ(s.front(), IndexSet({1, 2}, 5));
    EXPECT_EQ(s.back(), IndexSet({4, 5}, 5));
    EXPECT_TRUE(std::is_sorted(s.begin(), s.end(),
                               [](const IndexSet& a, const IndexSet& b) { return a.elements() < b.elements(); }));
    EXPECT_EQ(subsets(3, 4).size(), 0u);
    EXPECT_EQ(subsets(4, 0).size(), 1u);
}

// sgn_of must equal the sign of the permutation (alpha, alpha^c) counted directly.
TEST(IndexSetTest, SignMatchesInversionCount) {
    for (std::size_t n = 1; n <= 6; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            for (const auto& alpha : subsets(n, k)) {
                std::vector<std::size_t> perm = alpha.elements();
                IndexSet rest = alpha.complement();
                for (auto c : rest.elements()) perm.push_back(c);
                int inv = 0;
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = a + 1; b < n; ++b) inv += perm[a] > perm[b];
                ASSERT_EQ(sgn_of(alpha), inv % 2 ? -1 : 1);
            }
}

// Lex order lists the terms in expansion order; grevlex reverses them.
TEST(PfaffianTest, GenericFourByFourIsTheTrinomial) {
    auto ring = make_ring<PrimeField>(alternating_variable_names(4, "x"), PrimeField(101), MonomialOrder::lex());
    EXPECT_EQ(pfaffian(generic_alternating(ring, 4, "x")).to_string(), "x_1_2*x_3_4 - x_1_3*x_2_4 + x_1_4*x_2_3");
    auto qring = make_ring<RationalField>(alternating_variable_names(4, "x"), RationalField{}, MonomialOrder::lex());
    EXPECT_EQ(pfaffian(generic_alternating(qring, 4, "x")).to_string(), "x_1_2*x_3_4 - x_1_3*x_2_4 + x_1_4*x_2_3");
    auto grevlex = make_ring<PrimeField>(alternating_variable_names(4, "x"), PrimeField(101));
    EXPECT_EQ(pfaffian(generic_alternating(grevlex, 4, "x")).to_string(), "x_1_4*x_2_3 - x_1_3*x_2_4 + x_1_2*x_3_4");
}

TEST(PfaffianTest, MatchesMatchingSumAndSquaresToDeterminant) {
    PrimeField f(101);
    auto ring = make_ring<PrimeField>({"x"}, f);
    std::mt19937_64 rng(12);
    for (std::size_t n : {2u, 4u, 6u, 8u}) {
        for (int trial = 0; trial < 100; ++trial) {
            Dense a = random_alternating(f, n, rng);
            auto m = constant_matrix(ring, a);
            P pf = pfaffian(m);
            ASSERT_EQ(value_of(pf), matching_sum(f, a));
            ASSERT_EQ(f.mul(value_of(pf), value_of(pf)), gauss_det(f, a));
            ASSERT_EQ(pf * pf, det(m));
        }
    }
}

TEST(PfaffianTest, SquaresToDeterminantGenerically) {
    auto ring = make_ring<RationalField>(alternating_variable_names(6, "x"), RationalField{});
    auto x = generic_alternating(ring, 6, "x");
    auto pf = pfaffian(x);
    EXPECT_EQ(pf.size(), 15u);
    EXPECT_EQ(pf * pf, det(x));
}

TEST(PfaffianTest, SquaresToDeterminantOverRationals) {
    RationalField q;
    auto ring = make_ring<RationalField>({"x"}, q);
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    for (std::size_t n : {2u, 4u, 6u, 8u})
        for (int trial = 0; trial < 10; ++trial) {
            PolyMatrix<RationalField> m(ring, n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    auto v = Polynomial<RationalField>::constant(ring, RationalField::Elem(num(rng), den(rng)));
                    m.at(j, i) = -v;
                    m.at(i, j) = v;
                }
            auto pf = pfaffian(m);
            ASSERT_EQ(pf * pf, det(m));
        }
}

TEST(PfaffianTest, RejectsBadInput) {
    auto ring = make_ring<PrimeField>({"x"}, PrimeField(2));
    PolyMatrix<PrimeField> odd(ring, 3, 3);
    EXPECT_THROW(pfaffian(odd), InvalidArgument);
    // Symmetric with a nonzero diagonal is not alternating even though X^tr = -X in characteristic 2.
    auto m = PolyMatrix<PrimeField>::identity(ring, 2);
    EXPECT_THROW(pfaffian(m), InvalidArgument);
    EXPECT_THROW(pfaffian_ideal_gens(generic_alternating(make_ring<PrimeField>(alternating_variable_names(4, "x"), PrimeField(2)), 4, "x"), 3),
                 InvalidArgument);
}

TEST(PfaffianTest, IdealGeneratorsOfSmallPrincipalBlocks) {
    auto ring = make_ring<PrimeField>(alternating_variable_names(4, "x"), PrimeField(7));
    auto x = generic_alternating(ring, 4, "x");
    auto two = pfaffian_ideal_gens(x, 2);
    ASSERT_EQ(two.size(), 6u);
    EXPECT_EQ(two.front().to_string(), "x_1_2");
    auto four = pfaffian_ideal_gens(x, 4);
    ASSERT_EQ(four.size(), 1u);
    EXPECT_EQ(four[0], pfaffian(x));
    EXPECT_TRUE(pfaffian_ideal_gens(x, 6).empty());
}

TEST(DeterminantTest, CofactorAgreesWithBareissAndOracle) {
    PrimeField f(101);
    auto ring = make_ring<PrimeField>({"x"}, f);
    std::mt19937_64 rng(14);
    for (std::size_t n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 50; ++trial) {
            Dense a(n, std::vector<Elem>(n));
            for (auto& row : a)
                for (auto& e : row) e = testing::random_elem(f, rng);
            auto m = constant_matrix(ring, a);
            ASSERT_EQ(value_of(det_bareiss(m)), gauss_det(f, a));
            ASSERT_EQ(value_of(det_cofactor(m)), gauss_det(f, a));
        }
}

TEST(DeterminantTest, MultiplicativeOnPolynomialMatrices) {
    std::mt19937_64 rng(15);
    auto ring = testing::small_ring(31, 3);
    for (std::size_t n = 2; n <= 5; ++n)
        for (int trial = 0; trial < 3; ++trial) {
            PolyMatrix<PrimeField> a(ring, n, n), b(ring, n, n);
            for (auto* m : {&a, &b})
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) m->at(i, j) = testing::random_poly(ring, rng, 2, 1);
            ASSERT_EQ(det_bareiss(a * b), det_bareiss(a) * det_bareiss(b));
            ASSERT_EQ(det_cofactor(a), det_bareiss(a));
            ASSERT_EQ(det(a.transpose()), det(a));
        }
}

TEST(DeterminantTest, GenericTwoByTwo) {
    auto ring = make_ring<PrimeField>(matrix_variable_names(2, 2, "y"), PrimeField(5));
    auto y = generic_matrix(ring, 2, 2, "y");
    EXPECT_EQ(det(y).to_string(), "-y_1_2*y_2_1 + y_1_1*y_2_2");
    EXPECT_THROW(det(column_prefix(y, 1)), InvalidArgument);
}

TEST(MinorsTest, CountsAndOrder) {
    auto ring = make_ring<PrimeField>(matrix_variable_names(3, 4, "y"), PrimeField(5));
    auto y = generic_matrix(ring, 3, 4, "y");
    EXPECT_EQ(minors(y, 1).size(), 12u);
    EXPECT_EQ(minors(y, 2).size(), 18u);
    EXPECT_EQ(minors(y, 3).size(), 4u);
    EXPECT_TRUE(minors(y, 4).empty());
    EXPECT_EQ(minors(y, 2).front(), det(submatrix(y, IndexSet({1, 2}, 3), IndexSet({1, 2}, 4))));
    EXPECT_EQ(minors(y, 2).back(), det(submatrix(y, IndexSet({2, 3}, 3), IndexSet({3, 4}, 4))));
    EXPECT_THROW(minors(y, 0), InvalidArgument);
}

// For an orthogonal A of determinant e: det A[a|b] = e * sgn(a) sgn(b) det A[a^c|b^c].
TEST(MinorsTest, ComplementaryMinorsOfSignedPermutations) {
    PrimeField f(13);
    auto ring = make_ring<PrimeField>({"x"}, f);
    std::mt19937_64 rng(16);
    for (std::size_t d = 2; d <= 6; ++d)
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<std::size_t> perm(d);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            Dense a(d, std::vector<Elem>(d, 0));
            for (std::size_t i = 0; i < d; ++i) a[i][perm[i]] = rng() % 2 ? 1 : f.neg(1);
            auto m = constant_matrix(ring, a);
            ASSERT_EQ(m.transpose() * m, PolyMatrix<PrimeField>::identity(ring, d));
            Elem e = value_of(det(m));
            for (std::size_t k = 1; k < d; ++k)
                for (const auto& alpha : subsets(d, k))
                    for (const auto& beta : subsets(d, k)) {
                        Elem lhs = value_of(det(submatrix(m, alpha, beta)));
                        Elem rhs = f.mul(e, f.mul(f.from_int(sgn_of(alpha) * sgn_of(beta)),
                                                  value_of(det(submatrix(m, alpha.complement(), beta.complement())))));
                        ASSERT_EQ(lhs, rhs);
                    }
        }
}

TEST(StructuredMatrixTest, OmegaPsiAndGram) {
    auto ring = make_ring<PrimeField>(matrix_variable_names(4, 3, "y"), PrimeField(5));
    auto om = omega(ring, 2);
    EXPECT_TRUE(om.is_alternating());
    EXPECT_EQ(om.at(0, 2).to_string(), "1");
    EXPECT_EQ(om.at(2, 0).to_string(), "-1");
    EXPECT_TRUE(psi(ring, 3).is_symmetric());
    auto y = generic_matrix(ring, 4, 3, "y");
    EXPECT_TRUE(gram(om, y).is_alternating());
    EXPECT_TRUE(gram(PolyMatrix<PrimeField>::identity(ring, 4), y).is_symmetric());
    EXPECT_THROW(gram(omega(ring, 1), y), InvalidArgument);
    EXPECT_EQ(gram(om, y).at(0, 1).to_string(),
              "-y_1_2*y_3_1 + y_1_1*y_3_2 - y_2_2*y_4_1 + y_2_1*y_4_2");
}

TEST(StructuredMatrixTest, SubmatrixAndPrefix) {
    auto ring = make_ring<PrimeField>(matrix_variable_names(3, 3, "y"), PrimeField(5));
    auto y = generic_matrix(ring, 3, 3, "y");
    auto s = submatrix(y, IndexSet({1, 3}, 3), IndexSet({2}, 3));
    EXPECT_EQ(s.rows(), 2u);
    EXPECT_EQ(s.at(1, 0).to_string(), "y_3_2");
    EXPECT_EQ(column_prefix(y, 2).cols(), 2u);
    EXPECT_EQ(column_prefix(y, 0).cols(), 0u);
    EXPECT_THROW(submatrix(y, IndexSet({4}, 4), IndexSet({1}, 3)), InvalidArgument);
}

}  // namespace
}  // namespace nullcone
