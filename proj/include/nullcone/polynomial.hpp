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
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "field.hpp"
#include "monomial.hpp"

namespace nullcone {

/// Variables, coefficient field and monomial order of a polynomial ring. Immutable once built.
template <CoefficientField F>
class Ring {
   public:
    Ring(std::vector<std::string> names, F field, MonomialOrder order)
        : names_(std::move(names)), field_(std::move(field)), order_(order) {
        if (names_.size() > kMaxVariables)
            throw InvalidArgument("at most " + std::to_string(kMaxVariables) + " variables are supported");
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (!valid_name(names_[i])) throw InvalidArgument("invalid variable name '" + names_[i] + "'");
            if (!index_.emplace(names_[i], i).second)
                throw InvalidArgument("duplicate variable name '" + names_[i] + "'");
        }
    }

    const F& field() const noexcept { return field_; }
    const MonomialOrder& order() const noexcept { return order_; }
    std::size_t nvars() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }

    std::optional<std::size_t> index_of(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    int compare(const Monomial& a, const Monomial& b) const noexcept { return order_.compare(a, b, names_.size()); }

    bool operator==(const Ring& o) const {
        return names_ == o.names_ && field_ == o.field_ && order_ == o.order_;
    }

    static bool valid_name(std::string_view s) {
        if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
        return std::all_of(s.begin(), s.end(),
                           [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
    }

   private:
    std::vector<std::string> names_;
    F field_;
    MonomialOrder order_;
    std::unordered_map<std::string, std::size_t> index_;
};

template <CoefficientField F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <CoefficientField F>
RingPtr<F> make_ring(std::vector<std::string> names, F field, MonomialOrder order = MonomialOrder::grevlex()) {
    return std::make_shared<const Ring<F>>(std::move(names), std::move(field), order);
}

template <CoefficientField F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
    return a == b || (a && b && *a == *b);
}

/*
 * Sparse polynomial: terms sorted strictly descending in the ring order,
 * no zero coefficients. The zero polynomial has no terms.
 */
template <CoefficientField F>
class Polynomial {
   public:
    using Elem = typename F::Elem;
    struct Term {
        Monomial mono;
        Elem coeff;
        bool operator==(const Term&) const = default;
    };

    Polynomial() = default;
    explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

    static Polynomial constant(RingPtr<F> ring, Elem c) {
        Polynomial p(std::move(ring));
        if (!p.field().is_zero(c)) p.terms_.push_back({Monomial{}, std::move(c)});
        return p;
    }
    static Polynomial constant(RingPtr<F> ring, std::int64_t c) {
        auto e = ring->field().from_int(c);
        return constant(std::move(ring), std::move(e));
    }
    static Polynomial variable(RingPtr<F> ring, std::size_t i) {
        if (i >= ring->nvars()) throw InvalidArgument("variable index out of range");
        Polynomial p(std::move(ring));
        p.terms_.push_back({Monomial::variable(i), p.field().one()});
        return p;
    }
    static Polynomial variable(RingPtr<F> ring, std::string_view name) {
        auto i = ring->index_of(name);
        if (!i) throw InvalidArgument("unknown variable '" + std::string(name) + "'");
        return variable(std::move(ring), *i);
    }
    static Polynomial monomial(RingPtr<F> ring, Monomial m, Elem c) {
        Polynomial p(std::move(ring));
        if (!p.field().is_zero(c)) p.terms_.push_back({m, std::move(c)});
        return p;
    }
    /// Builds the canonical form of an arbitrary term list: sorts, merges duplicates, drops zeros.
    static Polynomial from_terms(RingPtr<F> ring, std::vector<Term> terms) {
        Polynomial p(std::move(ring));
        p.terms_ = std::move(terms);
        p.canonicalize();
        return p;
    }

    const RingPtr<F>& ring() const noexcept { return ring_; }
    const F& field() const { return ring_->field(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    const Term& leading_term() const {
        if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const Elem& leading_coeff() const { return leading_term().coeff; }

    /// Total degree; -1 for the zero polynomial.
    int degree() const noexcept {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
        return d;
    }
    bool is_homogeneous() const noexcept {
        return std::all_of(terms_.begin(), terms_.end(),
                           [&](const Term& t) { return t.mono.degree() == terms_.front().mono.degree(); });
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) { return *this = combine(*this, o, field().one()); }
    Polynomial& operator-=(const Polynomial& o) { return *this = combine(*this, o, field().neg(field().one())); }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, a.field().one()); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        return combine(a, b, a.field().neg(a.field().one()));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_same(a, b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
        const Polynomial& big = a.size() >= b.size() ? a : b;
        const Polynomial& small = a.size() >= b.size() ? b : a;
        return product_range(big, small, 0, small.size());
    }

    /// c * m * this; monomial multiplication preserves the term order, so no re-sort.
    Polynomial mul_term(const Monomial& m, const Elem& c) const {
        Polynomial r(ring_);
        if (field().is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Elem e = field().mul(t.coeff, c);
            if (!field().is_zero(e)) r.terms_.push_back({t.mono * m, std::move(e)});
        }
        return r;
    }
    Polynomial scaled(const Elem& c) const { return mul_term(Monomial{}, c); }

    Polynomial pow(unsigned e) const {
        Polynomial result = constant(ring_, field().one());
        Polynomial base = *this;
        while (e) {
            if (e & 1) result = result * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return result;
    }

    /// Scaled to leading coefficient 1; zero stays zero.
    Polynomial monic() const {
        if (is_zero() || field().is_one(leading_coeff())) return *this;
        return scaled(field().inv(leading_coeff()));
    }

    bool operator==(const Polynomial& o) const {
        if (terms_.empty() && o.terms_.empty()) return true;
        return same_ring(ring_, o.ring_) && terms_ == o.terms_;
    }

    /// Canonical text form; terms descend in the ring order.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& t : terms_) {
            std::string c = field().render(t.coeff);
            bool negative = !c.empty() && c[0] == '-';
            if (negative) c.erase(0, 1);
            if (first)
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            first = false;
            std::string mono = render_monomial(t.mono);
            if (mono.empty())
                out += c;
            else if (c == "1")
                out += mono;
            else
                out += c + "*" + mono;
        }
        return out;
    }

    std::string render_monomial(const Monomial& m) const {
        std::string s;
        for (std::size_t i = 0; i < ring_->nvars(); ++i) {
            if (!m[i]) continue;
            if (!s.empty()) s += '*';
            s += ring_->name(i);
            if (m[i] > 1) s += "^" + std::to_string(m[i]);
        }
        return s;
    }

   private:
    static void check_same(const Polynomial& a, const Polynomial& b) {
        if (!a.ring_ || !same_ring(a.ring_, b.ring_)) throw InvalidArgument("polynomials live in different rings");
    }

    // a * (terms [lo, hi) of b), splitting the range and merging the halves.
    static Polynomial product_range(const Polynomial& a, const Polynomial& b, std::size_t lo, std::size_t hi) {
        if (hi - lo == 1) return a.mul_term(b.terms_[lo].mono, b.terms_[lo].coeff);
        std::size_t mid = lo + (hi - lo) / 2;
        return product_range(a, b, lo, mid) + product_range(a, b, mid, hi);
    }

    // a + scale * b by merging the two sorted term lists.
    static Polynomial combine(const Polynomial& a, const Polynomial& b, const Elem& scale) {
        check_same(a, b);
        const F& f = a.field();
        const Ring<F>& ring = *a.ring_;
        Polynomial r(a.ring_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int c = ring.compare(a.terms_[i].mono, b.terms_[j].mono);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back({b.terms_[j].mono, f.mul(scale, b.terms_[j].coeff)});
                ++j;
            } else {
                Elem e = f.add(a.terms_[i].coeff, f.mul(scale, b.terms_[j].coeff));
                if (!f.is_zero(e)) r.terms_.push_back({a.terms_[i].mono, std::move(e)});
                ++i;
                ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) r.terms_.push_back({b.terms_[j].mono, f.mul(scale, b.terms_[j].coeff)});
        return r;
    }

    void canonicalize() {
        const Ring<F>& ring = *ring_;
        const F& f = ring.field();
        std::sort(terms_.begin(), terms_.end(),
                  [&](const Term& x, const Term& y) { return ring.compare(x.mono, y.mono) > 0; });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().mono == t.mono)
                out.back().coeff = f.add(out.back().coeff, t.coeff);
            else {
                if (!out.empty() && f.is_zero(out.back().coeff)) out.pop_back();
                out.push_back(std::move(t));
            }
        }
        if (!out.empty() && f.is_zero(out.back().coeff)) out.pop_back();
        terms_ = std::move(out);
    }

    RingPtr<F> ring_;
    std::vector<Term> terms_;
};

template <CoefficientField F>
std::ostream& operator<<(std::ostream& os, const Polynomial<F>& p) {
    return os << p.to_string();
}

namespace detail {

template <CoefficientField F>
class PolyParser {
   public:
    PolyParser(std::string_view text, const RingPtr<F>& ring) : s_(text), ring_(ring) {}

    Polynomial<F> parse() {
        using Term = typename Polynomial<F>::Term;
        std::vector<Term> terms;
        const F& f = ring_->field();
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = get() == '-';
            skip_ws();
        }
        for (;;) {
            Term t = parse_term();
            if (negative) t.coeff = f.neg(t.coeff);
            terms.push_back(std::move(t));
            skip_ws();
            if (at_end()) break;
            char c = get();
            if (c != '+' && c != '-') fail(std::string("unexpected character '") + c + "'");
            negative = c == '-';
            skip_ws();
        }
        return Polynomial<F>::from_terms(ring_, std::move(terms));
    }

   private:
    typename Polynomial<F>::Term parse_term() {
        const F& f = ring_->field();
        typename Polynomial<F>::Term t{Monomial{}, f.one()};
        for (;;) {
            skip_ws();
            if (at_end()) fail("expected a factor");
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t b = pos_;
                while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
                if (!at_end() && peek() == '/') {
                    ++pos_;
                    std::size_t nb = pos_;
                    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
                    if (nb == pos_) fail("malformed fraction");
                }
                t.coeff = f.mul(t.coeff, f.parse(s_.substr(b, pos_ - b)));
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                std::size_t b = pos_;
                while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
                std::string_view name = s_.substr(b, pos_ - b);
                auto idx = ring_->index_of(name);
                if (!idx) fail("unknown variable '" + std::string(name) + "'");
                unsigned e = 1;
                skip_ws();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip_ws();
                    std::size_t eb = pos_;
                    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
                    if (eb == pos_) fail("expected an exponent after '^'");
                    e = static_cast<unsigned>(std::stoul(std::string(s_.substr(eb, pos_ - eb))));
                }
                t.mono = t.mono * Monomial::variable(*idx, e);
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
            skip_ws();
            if (at_end() || peek() != '*') break;
            ++pos_;
        }
        return t;
    }

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    char get() { return s_[pos_++]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw InvalidArgument("cannot parse polynomial at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    const RingPtr<F>& ring_;
};

}  // namespace detail

/**
 * Parses the text grammar
 *   poly := ['+'|'-'] term (('+'|'-') term)*
 *   term := factor ('*' factor)*,  factor := coefficient | name ['^' integer]
 * where a coefficient is an integer, or a fraction a/b.
 */
template <CoefficientField F>
Polynomial<F> parse_poly(std::string_view text, const RingPtr<F>& ring) {
    return detail::PolyParser<F>(text, ring).parse();
}

/**
 * Ring homomorphism sending each variable of p's ring to its image in target.
 * Variables absent from the assignment map to the same-named variable of target.
 */
template <CoefficientField F>
Polynomial<F> substitute(const Polynomial<F>& p, const RingPtr<F>& target,
                         const std::map<std::string, Polynomial<F>>& assignment) {
    const Ring<F>& src = *p.ring();
    for (const auto& [name, image] : assignment) {
        if (!src.index_of(name)) throw InvalidArgument("assignment to unknown variable '" + name + "'");
        if (!image.is_zero() && !same_ring(image.ring(), target))
            throw InvalidArgument("image of '" + name + "' does not live in the target ring");
    }
    std::vector<Polynomial<F>> images;
    images.reserve(src.nvars());
    for (std::size_t i = 0; i < src.nvars(); ++i) {
        auto it = assignment.find(src.name(i));
        if (it != assignment.end()) {
            images.push_back(it->second.is_zero() ? Polynomial<F>(target) : it->second);
        } else if (target->index_of(src.name(i))) {
            images.push_back(Polynomial<F>::variable(target, src.name(i)));
        } else {
            throw InvalidArgument("variable '" + src.name(i) + "' has no image in the target ring");
        }
    }
    std::map<std::pair<std::size_t, unsigned>, Polynomial<F>> powers;
    auto power = [&](std::size_t i, unsigned e) -> const Polynomial<F>& {
        auto key = std::make_pair(i, e);
        auto it = powers.find(key);
        if (it == powers.end()) it = powers.emplace(key, images[i].pow(e)).first;
        return it->second;
    };
    Polynomial<F> result(target);
    for (const auto& t : p.terms()) {
        Polynomial<F> term = Polynomial<F>::constant(target, t.coeff);
        for (std::size_t i = 0; i < src.nvars() && !term.is_zero(); ++i)
            if (t.mono[i]) term = term * power(i, t.mono[i]);
        result += term;
    }
    return result;
}

/// Quotient a / b when b divides a exactly; throws if there is a remainder.
template <CoefficientField F>
Polynomial<F> divide_exact(const Polynomial<F>& a, const Polynomial<F>& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    const F& f = a.field();
    const auto& lead = b.leading_term();
    auto lc_inv = f.inv(lead.coeff);
    Polynomial<F> q(a.ring()), r = a;
    while (!r.is_zero()) {
        const auto& lt = r.leading_term();
        if (!lead.mono.divides(lt.mono)) throw std::domain_error("polynomial division is not exact");
        Monomial m = lt.mono.quotient(lead.mono);
        auto c = f.mul(lt.coeff, lc_inv);
        q += Polynomial<F>::monomial(a.ring(), m, c);
        r -= b.mul_term(m, c);
    }
    return q;
}

}  // namespace nullcone
