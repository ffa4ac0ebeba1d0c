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

#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace nullcone {

/// Thrown for malformed input: bad parameters, unparsable text, mismatched rings.
class InvalidArgument : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Deterministic primality test by trial division; moduli are below 2^31.
constexpr bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/*
 * A coefficient field supplies an element type plus the arithmetic on it.
 * Elements are always kept canonical so that == on elements is equality in
 * the field.
 */
template <class F>
concept CoefficientField = requires(const F f, const typename F::Elem a, std::string_view s) {
    typename F::Elem;
    { f.zero() } -> std::same_as<typename F::Elem>;
    { f.one() } -> std::same_as<typename F::Elem>;
    { f.from_int(std::int64_t{}) } -> std::same_as<typename F::Elem>;
    { f.add(a, a) } -> std::same_as<typename F::Elem>;
    { f.sub(a, a) } -> std::same_as<typename F::Elem>;
    { f.mul(a, a) } -> std::same_as<typename F::Elem>;
    { f.neg(a) } -> std::same_as<typename F::Elem>;
    { f.inv(a) } -> std::same_as<typename F::Elem>;
    { f.is_zero(a) } -> std::same_as<bool>;
    { f.is_one(a) } -> std::same_as<bool>;
    { f.characteristic() } -> std::same_as<std::uint64_t>;
    { f.render(a) } -> std::same_as<std::string>;
    { f.parse(s) } -> std::same_as<typename F::Elem>;
    { f.name() } -> std::same_as<std::string>;
    { f == f } -> std::same_as<bool>;
};

/// The prime field F_p, 2 <= p < 2^31. Residues live in [0, p).
class PrimeField {
   public:
    using Elem = std::uint32_t;

    explicit PrimeField(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
        if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
            throw InvalidArgument("modulus " + std::to_string(p) + " is not a prime below 2^31");
    }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }
    Elem from_int(std::int64_t v) const noexcept {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<Elem>(r);
    }
    Elem add(Elem a, Elem b) const noexcept {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Elem mul(Elem a, Elem b) const noexcept {
        return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    }
    Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("division by zero in F_" + std::to_string(p_));
        std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::int64_t t = r0 - q * r1;
            r0 = r1;
            r1 = t;
            t = s0 - q * s1;
            s0 = s1;
            s1 = t;
        }
        return from_int(s0);
    }
    Elem pow(Elem a, std::uint64_t e) const noexcept {
        Elem r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    bool is_zero(Elem a) const noexcept { return a == 0; }
    bool is_one(Elem a) const noexcept { return a == 1; }
    std::uint64_t characteristic() const noexcept { return p_; }
    std::uint32_t modulus() const noexcept { return p_; }

    // Symmetric residue, so that p-1 renders as -1.
    std::string render(Elem a) const {
        if (p_ > 2 && a > p_ / 2) return "-" + std::to_string(p_ - a);
        return std::to_string(a);
    }
    Elem parse(std::string_view s) const {
        bool negative = false;
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
            negative = s.front() == '-';
            s.remove_prefix(1);
        }
        auto slash = s.find('/');
        Elem num = parse_natural(s.substr(0, slash));
        Elem value = num;
        if (slash != std::string_view::npos) value = mul(num, inv(parse_natural(s.substr(slash + 1))));
        return negative ? neg(value) : value;
    }
    std::string name() const { return "F_" + std::to_string(p_); }

    bool operator==(const PrimeField&) const = default;

   private:
    Elem parse_natural(std::string_view s) const {
        if (s.empty()) throw InvalidArgument("empty integer literal");
        std::uint64_t r = 0;
        for (char c : s) {
            if (c < '0' || c > '9') throw InvalidArgument("malformed integer literal '" + std::string(s) + "'");
            r = (r * 10 + static_cast<unsigned>(c - '0')) % p_;
        }
        return static_cast<Elem>(r);
    }

    std::uint32_t p_;
};

/// The rationals, with arbitrary-precision reduced fractions.
class RationalField {
   public:
    using Elem = boost::multiprecision::cpp_rational;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(std::int64_t v) const { return Elem(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("division by zero in Q");
        return 1 / a;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    std::uint64_t characteristic() const noexcept { return 0; }
    std::string render(const Elem& a) const { return a.str(); }
    Elem parse(std::string_view s) const {
        std::string text(s);
        if (text.empty()) throw InvalidArgument("empty rational literal");
        std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
        auto slash = text.find('/');
        auto digits_ok = [&](std::size_t b, std::size_t e) {
            if (b >= e) return false;
            for (std::size_t i = b; i < e; ++i)
                if (text[i] < '0' || text[i] > '9') return false;
            return true;
        };
        bool ok = slash == std::string::npos ? digits_ok(start, text.size())
                                              : digits_ok(start, slash) && digits_ok(slash + 1, text.size());
        if (!ok) throw InvalidArgument("malformed rational literal '" + text + "'");
        if (text[0] == '+') text.erase(0, 1);
        Elem value;
        if (slash == std::string::npos) {
            value = Elem(boost::multiprecision::cpp_int(text));
        } else {
            boost::multiprecision::cpp_int num(text.substr(0, text.find('/')));
            boost::multiprecision::cpp_int den(text.substr(text.find('/') + 1));
            if (den == 0) throw InvalidArgument("zero denominator in '" + text + "'");
            value = Elem(num, den);
        }
        return value;
    }
    std::string name() const { return "Q"; }

    bool operator==(const RationalField&) const = default;
};

static_assert(CoefficientField<PrimeField>);
static_assert(CoefficientField<RationalField>);

/// Runtime description of a coefficient field: characteristic 0 means Q.
struct FieldSpec {
    std::uint64_t characteristic = 0;

    bool is_rational() const noexcept { return characteristic == 0; }
};

/// Calls fn with a PrimeField or a RationalField according to spec.
template <class Fn>
decltype(auto) with_field(FieldSpec spec, Fn&& fn) {
    if (spec.is_rational()) return fn(RationalField{});
    return fn(PrimeField(spec.characteristic));
}

}  // namespace nullcone
