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

#include <gtest/gtest.h>

#include "nullcone/purity.hpp"
#include "oracle_table.hpp"

namespace nullcone {
namespace {

const GbOptions kOpts{2'000'000, std::nullopt};

bool table_pure(char c) { return c == 'P'; }

TEST(OracleTest, MatchesTranscribedTable) {
    for (std::uint64_t p : {0ull, 2ull, 3ull, 5ull}) {
        for (int t = 1; t <= 3; ++t)
            for (int m = 1; m <= 4; ++m)
                for (int n = 1; n <= 4; ++n) {
                    bool want = p == 0 || table_pure(testing::kGlTable[t - 1][(m - 1) * 5 + (n - 1)]);
                    ASSERT_EQ(purity_oracle(Params::gl(m, n, t, p)).pure, want) << m << n << t << " p=" << p;
                }
        for (int t = 1; t <= 3; ++t)
            for (int n = 1; n <= 5; ++n)
                ASSERT_EQ(purity_oracle(Params::sp(t, n, p)).pure, p == 0 || table_pure(testing::kSpTable[t - 1][n - 1]));
        for (int d = 1; d <= 5; ++d)
            for (int n = 1; n <= 4; ++n) {
                const auto& table = p == 2 ? testing::kOTableChar2 : testing::kOTableOdd;
                ASSERT_EQ(purity_oracle(Params::o(d, n, p)).pure, p == 0 || table_pure(table[d - 1][n - 1]))
                    << d << n << " p=" << p;
            }
        for (int d = 1; d <= 4; ++d)
            for (int n = 1; n <= 4; ++n) {
                char c = testing::kSlTable[d - 1][n - 1];
                if (c == '-') {
                    ASSERT_THROW(purity_oracle(Params::sl(d, n, p)), InvalidArgument);
                    continue;
                }
                ASSERT_EQ(purity_oracle(Params::sl(d, n, p)).pure, p == 0 || table_pure(c));
            }
    }
}

TEST(OracleTest, ClauseLabels) {
    EXPECT_EQ(purity_oracle(Params::sp(2, 3, 7)).clause, "sp: n<=t+1");
    EXPECT_EQ(purity_oracle(Params::sp(2, 3, 0)).clause, "char 0: linearly reductive");
    EXPECT_EQ(purity_oracle(Params::o(2, 3, 3)).clause, "o: d=2, p odd");
    EXPECT_EQ(purity_oracle(Params::o(2, 3, 2)).clause, "o: p=2, n>(d+1)/2");
    EXPECT_EQ(purity_oracle(Params::sl(2, 3, 2)).clause, "sl: 1<d<n");
    EXPECT_EQ(purity_oracle(Params::gl(3, 3, 2, 5)).clause, "gl: t>=2 and min(m,n)>t");
    EXPECT_EQ(purity_oracle(Params::gl(3, 3, 2, 5)).p, 5u);
}

// Pure in positive characteristic forces a regular invariant ring unless the group is linearly reductive.
TEST(OracleTest, PureImpliesRegularOrReductive) {
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        for (int m = 1; m <= 4; ++m)
            for (int n = 1; n <= 4; ++n)
                for (int t = 2; t <= 3; ++t) {
                    auto q = Params::gl(m, n, t, p);
                    if (purity_oracle(q).pure) {
                        ASSERT_TRUE(invariant_ring_is_regular(q));
                    }
                }
        for (int t = 1; t <= 3; ++t)
            for (int n = 1; n <= 6; ++n) {
                auto q = Params::sp(t, n, p);
                if (purity_oracle(q).pure) {
                    ASSERT_TRUE(invariant_ring_is_regular(q));
                }
            }
        for (int d = 3; d <= 6; ++d)
            for (int n = 1; n <= 5; ++n) {
                auto q = Params::o(d, n, p);
                if (purity_oracle(q).pure) {
                    ASSERT_TRUE(invariant_ring_is_regular(q));
                }
            }
        for (int n = 2; n <= 5; ++n)
            for (int d = 2; d <= n; ++d) {
                auto q = Params::sl(d, n, p);
                if (purity_oracle(q).pure) {
                    ASSERT_TRUE(invariant_ring_is_regular(q));
                }
            }
    }
}

TEST(WitnessTest, PowerTest) {
    EXPECT_TRUE(is_power_of(1, 3));
    EXPECT_TRUE(is_power_of(8, 2));
    EXPECT_FALSE(is_power_of(6, 2));
    EXPECT_FALSE(is_power_of(0, 2));
    EXPECT_FALSE(is_power_of(4, 1));
}

// The two membership routes must agree wherever both apply.
TEST(WitnessTest, FrobeniusRouteAgreesWithGroebnerRoute) {
    struct Case {
        Params q;
        int k;
    };
    for (const auto& [q, k] : {Case{Params::sl(2, 3, 2), 2}, Case{Params::sl(2, 3, 2), 4}, Case{Params::sl(2, 3, 3), 3},
                               Case{Params::sp(1, 2, 2), 2}, Case{Params::sp(1, 2, 2), 4}, Case{Params::sp(1, 2, 3), 3},
                               Case{Params::sp(2, 3, 2), 2}, Case{Params::o(3, 2, 3), 3}, Case{Params::o(2, 1, 2), 2},
                               Case{Params::o(2, 2, 2), 2}, Case{Params::o(3, 2, 2), 2}, Case{Params::gl(2, 2, 2, 2), 2}}) {
        auto s = build_setup(q, PrimeField(q.p));
        EXPECT_EQ(witness_at_by_frobenius(s, k, kOpts), witness_at_by_groebner(s, k, kOpts)) << describe(q) << " k=" << k;
    }
}

TEST(WitnessTest, KnownWitnesses) {
    auto sl = build_setup(Params::sl(2, 3, 2), PrimeField(2));
    auto w = frobenius_witness(sl, 4, kOpts);
    ASSERT_TRUE(w.k);
    EXPECT_EQ(*w.k, 2);
    EXPECT_TRUE(w.minimal());
    // d = 2 in characteristic 2 is not pure already for n = 2.
    auto o = build_setup(Params::o(2, 2, 2), PrimeField(2));
    EXPECT_TRUE(frobenius_witness(o, 4, kOpts).k.has_value());
    auto sp = build_setup(Params::sp(1, 2, 3), PrimeField(3));
    auto none = frobenius_witness(sp, 4, kOpts);
    EXPECT_FALSE(none.k);
    EXPECT_TRUE(none.undecided.empty());
}

// Membership at k implies membership at every larger k.
TEST(WitnessTest, MembershipIsMonotoneInK) {
    for (const auto& q : {Params::sl(2, 3, 2), Params::o(2, 2, 2), Params::sl(2, 3, 3), Params::sp(1, 2, 2)}) {
        auto s = build_setup(q, PrimeField(q.p));
        bool seen = false;
        for (int k = 2; k <= 5; ++k) {
            bool member = witness_at(s, k, kOpts);
            if (seen) {
                ASSERT_TRUE(member) << describe(q) << " k=" << k;
            }
            seen = seen || member;
        }
    }
}

TEST(WitnessTest, Preconditions) {
    auto nonregular = build_setup(Params::sp(1, 4, 2), PrimeField(2));
    EXPECT_THROW(frobenius_witness(nonregular, 4), InvalidArgument);
    auto rational = build_setup(Params::sl(2, 3, 0), RationalField{});
    EXPECT_THROW(frobenius_witness(rational, 4), InvalidArgument);
    auto s = build_setup(Params::sl(2, 3, 2), PrimeField(2));
    EXPECT_THROW(witness_at_by_frobenius(s, 3), InvalidArgument);
    EXPECT_THROW(witness_at_by_groebner(s, 1), InvalidArgument);
}

TEST(WitnessTest, BudgetExhaustionIsReportedAsUndecided) {
    auto s = build_setup(Params::sl(2, 3, 2), PrimeField(2));
    auto w = frobenius_witness(s, 4, GbOptions{1, std::nullopt});
    EXPECT_FALSE(w.k);
    EXPECT_FALSE(w.undecided.empty());
}

TEST(CdBoundTest, ClosedForm) {
    for (std::int64_t t = 1; t <= 8; ++t) EXPECT_EQ(gl_cd_bound(t), t * t + t + 1);
    EXPECT_THROW(gl_cd_bound(0), InvalidArgument);
}

TEST(EvidenceTest, PureAndNotPureTuples) {
    auto pure = purity_evidence(build_setup(Params::sp(1, 2, 3), PrimeField(3)), 4, kOpts);
    EXPECT_TRUE(pure.verdict.pure);
    EXPECT_TRUE(pure.regular);
    EXPECT_EQ(pure.nullcone_codim, 1);
    EXPECT_EQ(pure.ci, true);
    EXPECT_FALSE(pure.witness_k);
    EXPECT_TRUE(pure.consistent);
    EXPECT_EQ(pure.witness_status, "none up to k_max");

    auto sl = purity_evidence(build_setup(Params::sl(2, 3, 2), PrimeField(2)), 4, kOpts);
    EXPECT_FALSE(sl.verdict.pure);
    EXPECT_EQ(sl.witness_k, 2);
    EXPECT_EQ(sl.witness_status, "found");
    EXPECT_TRUE(sl.consistent);
    EXPECT_EQ(sl.nullcone_codim, 2);
    EXPECT_EQ(sl.ci, false);

    auto gl = purity_evidence(build_setup(Params::gl(3, 3, 2, 2), PrimeField(2)), 4, kOpts);
    EXPECT_FALSE(gl.verdict.pure);
    EXPECT_FALSE(gl.regular);
    EXPECT_EQ(gl.witness_status, "not attempted: invariant ring not regular");
    EXPECT_TRUE(gl.consistent);
    EXPECT_LT(*gl.nullcone_codim, gl.invariant_dim);

    EXPECT_THROW(purity_evidence(build_setup(Params::sl(2, 3, 0), RationalField{})), InvalidArgument);
}

TEST(EvidenceTest, ExhaustedBudgetIsInconclusive) {
    auto r = purity_evidence(build_setup(Params::sl(2, 3, 2), PrimeField(2)), 4, GbOptions{1, std::nullopt});
    EXPECT_FALSE(r.nullcone_codim);
    EXPECT_FALSE(r.consistent);
    EXPECT_TRUE(r.inconclusive);
}

}  // namespace
}  // namespace nullcone
