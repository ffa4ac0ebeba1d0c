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

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nullcone {

inline constexpr std::size_t kMaxVariables = 64;

/*
 * Exponent vector over at most kMaxVariables variables. Unused slots stay
 * zero, so two monomials of the same ring compare equal iff their arrays do.
 * The support bitmask gives a fast negative answer to divisibility queries.
 */
class Monomial {
   public:
    using Exponent = std::uint8_t;
    static constexpr unsigned kMaxExponent = 255;

    Monomial() = default;

    unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
    unsigned degree() const noexcept { return degree_; }
    std::uint64_t support() const noexcept { return support_; }
    bool is_one() const noexcept { return degree_ == 0; }
    /// One past the highest variable with a nonzero exponent.
    std::size_t span() const noexcept { return kMaxVariables - static_cast<std::size_t>(std::countl_zero(support_)); }

    void set(std::size_t i, unsigned e) {
        if (i >= kMaxVariables) throw std::out_of_range("variable index out of range");
        if (e > kMaxExponent) throw std::overflow_error("exponent exceeds " + std::to_string(kMaxExponent));
        degree_ = degree_ - exps_[i] + e;
        exps_[i] = static_cast<Exponent>(e);
        if (e)
            support_ |= std::uint64_t{1} << i;
        else
            support_ &= ~(std::uint64_t{1} << i);
    }

    static Monomial variable(std::size_t i, unsigned e = 1) {
        Monomial m;
        m.set(i, e);
        return m;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        unsigned top = 0;
        const std::size_t n = std::max(a.span(), b.span());
        for (std::size_t i = 0; i < n; ++i) {
            unsigned s = unsigned{a.exps_[i]} + b.exps_[i];
            top = std::max(top, s);
            r.exps_[i] = static_cast<Exponent>(s);
        }
        if (top > kMaxExponent) throw std::overflow_error("exponent exceeds " + std::to_string(kMaxExponent));
        r.degree_ = a.degree_ + b.degree_;
        r.support_ = a.support_ | b.support_;
        return r;
    }

    bool divides(const Monomial& other) const noexcept {
        if (support_ & ~other.support_) return false;
        if (degree_ > other.degree_) return false;
        const std::size_t n = span();
        for (std::size_t i = 0; i < n; ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    /// this / divisor; divisor must divide this.
    Monomial quotient(const Monomial& divisor) const noexcept {
        Monomial r;
        const std::size_t n = span();
        for (std::size_t i = 0; i < n; ++i) {
            r.exps_[i] = static_cast<Exponent>(exps_[i] - divisor.exps_[i]);
            if (r.exps_[i]) r.support_ |= std::uint64_t{1} << i;
        }
        r.degree_ = degree_ - divisor.degree_;
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
        Monomial r;
        const std::size_t n = std::max(a.span(), b.span());
        unsigned d = 0;
        for (std::size_t i = 0; i < n; ++i) {
            r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
            d += r.exps_[i];
        }
        r.degree_ = d;
        r.support_ = a.support_ | b.support_;
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) noexcept { return (a.support_ & b.support_) == 0; }

    bool operator==(const Monomial& o) const noexcept {
        return degree_ == o.degree_ && support_ == o.support_ && exps_ == o.exps_;
    }

   private:
    std::array<Exponent, kMaxVariables> exps_{};
    std::uint32_t degree_ = 0;
    std::uint64_t support_ = 0;
};

/// Monomial orders: graded reverse lex, lex, and block(k) eliminating the first k variables.
class MonomialOrder {
   public:
    enum class Kind { grevlex, lex, block };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
    static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
    static MonomialOrder block(std::size_t k) { return MonomialOrder(Kind::block, k); }

    Kind kind() const noexcept { return kind_; }
    std::size_t block_size() const noexcept { return block_; }

    /// Three-way comparison of monomials in nvars variables: -1, 0 or 1.
    int compare(const Monomial& a, const Monomial& b, std::size_t nvars) const noexcept {
        switch (kind_) {
            case Kind::lex:
                for (std::size_t i = 0; i < nvars; ++i)
                    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
                return 0;
            case Kind::grevlex:
                return grevlex_range(a, b, 0, nvars, a.degree(), b.degree());
            case Kind::block: {
                std::size_t k = std::min(block_, nvars);
                unsigned da = 0, db = 0;
                for (std::size_t i = 0; i < k; ++i) {
                    da += a[i];
                    db += b[i];
                }
                if (int c = grevlex_range(a, b, 0, k, da, db)) return c;
                return grevlex_range(a, b, k, nvars, a.degree() - da, b.degree() - db);
            }
        }
        return 0;
    }

    std::string name() const {
        switch (kind_) {
            case Kind::lex: return "lex";
            case Kind::grevlex: return "grevlex";
            case Kind::block: return "block(" + std::to_string(block_) + ")";
        }
        return "?";
    }

    bool operator==(const MonomialOrder&) const = default;

   private:
    MonomialOrder(Kind k, std::size_t b) : kind_(k), block_(b) {}

    static int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi, unsigned da,
                             unsigned db) noexcept {
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t i = hi; i-- > lo;)
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        return 0;
    }

    Kind kind_;
    std::size_t block_;
};

}  // namespace nullcone
