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

#include <random>

#include <gtest/gtest.h>

#include "nullcone/field.hpp"

namespace nullcone {
namespace {

TEST(PrimeFieldTest, RejectsNonPrimes) {
    EXPECT_THROW(PrimeField(1), InvalidArgument);
    EXPECT_THROW(PrimeField(9), InvalidArgument);
    EXPECT_THROW(PrimeField(std::uint64_t{1} << 31), InvalidArgument);
    EXPECT_NO_THROW(PrimeField(2147483647));
}

TEST(PrimeFieldTest, AxiomsOnRandomTriples) {
    std::mt19937_64 rng(7);
    for (std::uint64_t p : {2ull, 3ull, 101ull, 2147483647ull}) {
        PrimeField f(p);
        std::uniform_int_distribution<std::int64_t> pick(-5'000'000'000LL, 5'000'000'000LL);
        for (int trial = 0; trial < 1000; ++trial) {
            auto a = f.from_int(pick(rng)), b = f.from_int(pick(rng)), c = f.from_int(pick(rng));
            ASSERT_EQ(f.add(a, b), f.add(b, a));
            ASSERT_EQ(f.mul(a, b), f.mul(b, a));
            ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            ASSERT_TRUE(f.is_zero(f.add(a, f.neg(a))));
            ASSERT_EQ(f.sub(a, b), f.add(a, f.neg(b)));
            if (!f.is_zero(a)) {
                ASSERT_TRUE(f.is_one(f.mul(a, f.inv(a))));
            }
            // Fermat: a^p = a.
            ASSERT_EQ(f.pow(a, p), a);
        }
    }
}

TEST(PrimeFieldTest, FromIntReducesNegatives) {
    PrimeField f(7);
    EXPECT_EQ(f.from_int(-1), 6u);
    EXPECT_EQ(f.from_int(-14), 0u);
    EXPECT_EQ(f.from_int(15), 1u);
}

TEST(PrimeFieldTest, InverseOfZeroThrows) { EXPECT_THROW(PrimeField(5).inv(0), std::domain_error); }

TEST(PrimeFieldTest, RenderIsSymmetric) {
    PrimeField f(7);
    EXPECT_EQ(f.render(6), "-1");
    EXPECT_EQ(f.render(3), "3");
    EXPECT_EQ(f.render(4), "-3");
    EXPECT_EQ(PrimeField(2).render(1), "1");
}

TEST(PrimeFieldTest, ParseRoundTrip) {
    PrimeField f(101);
    for (std::uint32_t a = 0; a < 101; ++a) EXPECT_EQ(f.parse(f.render(a)), a);
    EXPECT_EQ(f.parse("1/2"), f.inv(2));
    EXPECT_EQ(f.parse("-3"), f.from_int(-3));
    EXPECT_THROW(f.parse("x"), InvalidArgument);
    EXPECT_THROW(f.parse(""), InvalidArgument);
    EXPECT_THROW(f.parse("1/101"), std::domain_error);
}

TEST(RationalFieldTest, ArithmeticIsExact) {
    RationalField q;
    auto a = q.parse("1/3"), b = q.parse("-2/7");
    EXPECT_EQ(q.render(q.add(a, b)), "1/21");
    EXPECT_EQ(q.render(q.mul(a, b)), "-2/21");
    EXPECT_TRUE(q.is_one(q.mul(b, q.inv(b))));
    EXPECT_EQ(q.render(q.parse("+6/4")), "3/2");
    EXPECT_THROW(q.parse("1/0"), InvalidArgument);
    EXPECT_THROW(q.parse("1.5"), InvalidArgument);
    EXPECT_THROW(q.inv(q.zero()), std::domain_error);
}

TEST(RationalFieldTest, AxiomsOnRandomTriples) {
    RationalField q;
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
    for (int trial = 0; trial < 1000; ++trial) {
        RationalField::Elem a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        ASSERT_EQ(q.mul(a, q.add(b, c)), q.add(q.mul(a, b), q.mul(a, c)));
        ASSERT_EQ(q.add(q.add(a, b), c), q.add(a, q.add(b, c)));
        ASSERT_EQ(q.parse(q.render(a)), a);
    }
}

TEST(FieldSpecTest, DispatchesOnCharacteristic) {
    EXPECT_EQ(with_field(FieldSpec{0}, [](auto f) { return f.name(); }), "Q");
    EXPECT_EQ(with_field(FieldSpec{5}, [](auto f) { return f.name(); }), "F_5");
    EXPECT_THROW(with_field(FieldSpec{4}, [](auto f) { return f.name(); }), InvalidArgument);
}

}  // namespace
}  // namespace nullcone
