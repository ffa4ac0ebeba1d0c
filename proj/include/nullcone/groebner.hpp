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
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace nullcone {

/// Raised when a Groebner computation runs out of reduction steps.
class BudgetExhausted : public std::runtime_error {
   public:
    explicit BudgetExhausted(std::uint64_t budget)
        : std::runtime_error("budget exhausted after " + std::to_string(budget) + " reduction steps"),
          budget_(budget) {}
    std::uint64_t budget() const noexcept { return budget_; }

   private:
    std::uint64_t budget_;
};

struct GbOptions {
    static constexpr std::uint64_t kDefaultBudget = 10'000'000;
    std::uint64_t budget = kDefaultBudget;
    /// When set, S-pairs whose lcm has larger degree are skipped. The result is then a
    /// Groebner basis only up to that degree; allowed for homogeneous input under grevlex.
    std::optional<unsigned> degree_bound;
};

/// Reduced Groebner basis: monic, sorted by ascending leading monomial.
template <CoefficientField F>
struct GroebnerBasis {
    RingPtr<F> ring;
    std::vector<Polynomial<F>> elements;

    bool is_unit() const { return elements.size() == 1 && elements[0].is_constant(); }
    bool operator==(const GroebnerBasis& o) const { return elements == o.elements; }
};

namespace detail {

class StepCounter {
   public:
    explicit StepCounter(std::uint64_t budget) : budget_(budget) {}
    void tick() {
        if (++used_ > budget_) throw BudgetExhausted(budget_);
    }
    std::uint64_t used() const noexcept { return used_; }

   private:
    std::uint64_t budget_;
    std::uint64_t used_ = 0;
};

template <CoefficientField F>
class Reducer {
   public:
    using Poly = Polynomial<F>;
    using Term = typename Poly::Term;
    using Elem = typename F::Elem;

    Reducer(const RingPtr<F>& ring, StepCounter& steps) : ring_(ring), f_(ring->field()), steps_(steps) {}

    /// Full reduction of p modulo the given polynomials (each nonzero). Result is not normalized.
    Poly reduce(const Poly& p, const std::vector<const Poly*>& basis) const {
        std::vector<Term> cur(p.terms().begin(), p.terms().end());
        std::vector<Term> scratch;
        std::vector<Term> done;
        std::size_t start = 0;
        while (start < cur.size()) {
            const Term& lt = cur[start];
            const Poly* g = find_reducer(lt.mono, basis);
            if (!g) {
                done.push_back(lt);
                ++start;
                continue;
            }
            steps_.tick();
            const Term& glt = g->leading_term();
            Monomial m = lt.mono.quotient(glt.mono);
            Elem c = f_.mul(lt.coeff, f_.inv(glt.coeff));
            subtract_multiple(cur, start, *g, m, c, scratch);
            cur.swap(scratch);
            start = 0;
        }
        return Poly::from_terms(ring_, std::move(done));
    }

    static const Poly* find_reducer(const Monomial& m, const std::vector<const Poly*>& basis) {
        for (const Poly* g : basis)
            if (g->leading_monomial().divides(m)) return g;
        return nullptr;
    }

   private:
    // out = cur[start..] - c*m*g, where the leading terms cancel.
    void subtract_multiple(const std::vector<Term>& cur, std::size_t start, const Poly& g, const Monomial& m,
                           const Elem& c, std::vector<Term>& out) const {
        const Ring<F>& ring = *ring_;
        const auto& gt = g.terms();
        out.clear();
        out.reserve(cur.size() - start + gt.size());
        std::size_t i = start + 1, j = 1;
        Elem nc = f_.neg(c);
        while (i < cur.size() && j < gt.size()) {
            Monomial gm = gt[j].mono * m;
            int cmp = ring.compare(cur[i].mono, gm);
            if (cmp > 0) {
                out.push_back(cur[i++]);
            } else if (cmp < 0) {
                out.push_back({gm, f_.mul(nc, gt[j].coeff)});
                ++j;
            } else {
                Elem e = f_.add(cur[i].coeff, f_.mul(nc, gt[j].coeff));
                if (!f_.is_zero(e)) out.push_back({gm, std::move(e)});
                ++i;
                ++j;
            }
        }
        for (; i < cur.size(); ++i) out.push_back(cur[i]);
        for (; j < gt.size(); ++j) out.push_back({gt[j].mono * m, f_.mul(nc, gt[j].coeff)});
    }

    const RingPtr<F>& ring_;
    const F& f_;
    StepCounter& steps_;
};

template <CoefficientField F>
Polynomial<F> s_polynomial(const Polynomial<F>& a, const Polynomial<F>& b) {
    Monomial l = Monomial::lcm(a.leading_monomial(), b.leading_monomial());
    const F& f = a.field();
    return a.mul_term(l.quotient(a.leading_monomial()), f.inv(a.leading_coeff())) -
           b.mul_term(l.quotient(b.leading_monomial()), f.inv(b.leading_coeff()));
}

struct CriticalPair {
    std::size_t i, j;  // i < j, indices into the polynomial store
    Monomial lcm;
};

template <CoefficientField F>
class Buchberger {
   public:
    using Poly = Polynomial<F>;

    Buchberger(const RingPtr<F>& ring, const GbOptions& opts)
        : ring_(ring), steps_(opts.budget), degree_bound_(opts.degree_bound) {}

    GroebnerBasis<F> run(const std::vector<Poly>& gens) {
        Reducer<F> red(ring_, steps_);
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            Poly h = red.reduce(g, active_polys()).monic();
            if (h.is_zero()) continue;
            if (h.is_constant()) return unit();
            update(std::move(h));
        }
        while (!pairs_.empty()) {
            auto it = std::min_element(pairs_.begin(), pairs_.end(), [&](const CriticalPair& a, const CriticalPair& b) {
                int c = ring_->compare(a.lcm, b.lcm);
                if (c) return c < 0;
                return std::tie(a.j, a.i) < std::tie(b.j, b.i);
            });
            CriticalPair p = *it;
            pairs_.erase(it);
            Poly h = red.reduce(s_polynomial(store_[p.i], store_[p.j]), active_polys()).monic();
            if (h.is_zero()) continue;
            if (h.is_constant()) return unit();
            update(std::move(h));
        }
        return interreduce(red);
    }

    std::uint64_t steps_used() const noexcept { return steps_.used(); }

   private:
    GroebnerBasis<F> unit() const { return {ring_, {Poly::constant(ring_, ring_->field().one())}}; }

    std::vector<const Poly*> active_polys() const {
        std::vector<const Poly*> v;
        v.reserve(active_.size());
        for (auto k : active_) v.push_back(&store_[k]);
        return v;
    }

    const Monomial& lm(std::size_t k) const { return store_[k].leading_monomial(); }

    // Gebauer-Moeller update with the new element h.
    void update(Poly h) {
        std::size_t hn = store_.size();
        store_.push_back(std::move(h));
        const Monomial& lh = lm(hn);

        std::vector<CriticalPair> c;
        for (auto g : active_) c.push_back({g, hn, Monomial::lcm(lm(g), lh)});

        std::vector<CriticalPair> d;
        for (std::size_t a = 0; a < c.size(); ++a) {
            bool keep = Monomial::coprime(lm(c[a].i), lh);
            if (!keep) {
                keep = true;
                for (std::size_t b = 0; b < c.size() && keep; ++b) {
                    if (b == a) continue;
                    if (!c[b].lcm.divides(c[a].lcm)) continue;
                    // Equal lcms: keep only the first of them.
                    if (c[b].lcm == c[a].lcm && b > a) continue;
                    keep = false;
                }
            }
            if (keep) d.push_back(c[a]);
        }
        std::vector<CriticalPair> next;
        for (auto& p : pairs_) {
            bool drop = lh.divides(p.lcm) && !(Monomial::lcm(lm(p.i), lh) == p.lcm) &&
                        !(Monomial::lcm(lm(p.j), lh) == p.lcm);
            if (!drop) next.push_back(std::move(p));
        }
        for (auto& p : d)
            if (!Monomial::coprime(lm(p.i), lh) && (!degree_bound_ || p.lcm.degree() <= *degree_bound_))
                next.push_back(std::move(p));
        pairs_ = std::move(next);

        std::vector<std::size_t> act;
        for (auto g : active_)
            if (!lh.divides(lm(g))) act.push_back(g);
        act.push_back(hn);
        active_ = std::move(act);
    }

    GroebnerBasis<F> interreduce(const Reducer<F>& red) {
        std::vector<Poly> basis;
        for (auto k : active_) basis.push_back(store_[k]);
        std::sort(basis.begin(), basis.end(), [&](const Poly& a, const Poly& b) {
            return ring_->compare(a.leading_monomial(), b.leading_monomial()) < 0;
        });
        std::vector<Poly> out;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            std::vector<const Poly*> others;
            for (std::size_t l = 0; l < basis.size(); ++l)
                if (l != k) others.push_back(&basis[l]);
            // The leading term is irreducible (minimal basis); reduce the tail.
            Poly lead = Poly::monomial(ring_, basis[k].leading_monomial(), basis[k].leading_coeff());
            Poly tail = red.reduce(basis[k] - lead, others);
            out.push_back((lead + tail).monic());
        }
        return {ring_, std::move(out)};
    }

    RingPtr<F> ring_;
    StepCounter steps_;
    std::vector<Poly> store_;
    std::vector<std::size_t> active_;
    std::vector<CriticalPair> pairs_;
    std::optional<unsigned> degree_bound_;
};

}  // namespace detail

/// Reduced Groebner basis of the ideal generated by gens in ring.
template <CoefficientField F>
GroebnerBasis<F> groebner_basis(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens,
                                const GbOptions& opts = {}) {
    for (const auto& g : gens)
        if (!g.is_zero() && !same_ring(g.ring(), ring)) throw InvalidArgument("generator outside the ring");
    if (opts.degree_bound) {
        if (ring->order().kind() != MonomialOrder::Kind::grevlex)
            throw InvalidArgument("degree-bounded bases need the grevlex order");
        for (const auto& g : gens)
            if (!g.is_homogeneous()) throw InvalidArgument("degree-bounded bases need homogeneous generators");
    }
    return detail::Buchberger<F>(ring, opts).run(gens);
}

/// Remainder of f on division by G; no term of the result is divisible by a leading monomial of G.
template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& g, const GbOptions& opts = {}) {
    if (!f.is_zero() && !same_ring(f.ring(), g.ring)) throw InvalidArgument("polynomial outside the basis ring");
    detail::StepCounter steps(opts.budget);
    detail::Reducer<F> red(g.ring, steps);
    std::vector<const Polynomial<F>*> basis;
    for (const auto& e : g.elements) basis.push_back(&e);
    return red.reduce(f.is_zero() ? Polynomial<F>(g.ring) : f, basis);
}

/// Every S-polynomial reduces to zero, and the basis is reduced and monic.
template <CoefficientField F>
bool satisfies_buchberger(const GroebnerBasis<F>& g, const GbOptions& opts = {}) {
    const auto& e = g.elements;
    const F& f = g.ring->field();
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i].is_zero() || !f.is_one(e[i].leading_coeff())) return false;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (i == j) continue;
            for (const auto& t : e[j].terms())
                if (e[i].leading_monomial().divides(t.mono)) return false;
        }
    }
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (!normal_form(detail::s_polynomial(e[i], e[j]), g, opts).is_zero()) return false;
    return true;
}

/*
 * Ideal with a lazily computed reduced Groebner basis. The cache is written
 * at most once; one Ideal object must not be queried from two threads
 * concurrently before its basis exists.
 */
template <CoefficientField F>
class Ideal {
   public:
    using Poly = Polynomial<F>;

    explicit Ideal(RingPtr<F> ring) : ring_(std::move(ring)) {}
    Ideal(RingPtr<F> ring, std::vector<Poly> gens) : ring_(std::move(ring)) {
        for (auto& g : gens) add(std::move(g));
    }

    const RingPtr<F>& ring() const noexcept { return ring_; }
    const std::vector<Poly>& generators() const noexcept { return gens_; }

    Ideal& add(Poly g) {
        if (g.is_zero()) return *this;
        if (!same_ring(g.ring(), ring_)) throw InvalidArgument("generator outside the ideal's ring");
        gens_.push_back(std::move(g));
        cache_.reset();
        return *this;
    }
    Ideal& add_all(const std::vector<Poly>& gs) {
        for (const auto& g : gs) add(g);
        return *this;
    }

    const GroebnerBasis<F>& groebner(const GbOptions& opts = {}) const {
        if (!cache_) cache_ = groebner_basis(ring_, gens_, opts);
        return *cache_;
    }
    bool has_cached_basis() const noexcept { return cache_.has_value(); }

   private:
    RingPtr<F> ring_;
    std::vector<Poly> gens_;
    mutable std::optional<GroebnerBasis<F>> cache_;
};

template <CoefficientField F>
bool ideal_member(const Polynomial<F>& f, const Ideal<F>& ideal, const GbOptions& opts = {}) {
    if (f.is_zero()) return true;
    return normal_form(f, ideal.groebner(opts), opts).is_zero();
}

/*
 * Membership of a homogeneous f in an ideal with homogeneous generators,
 * using a basis truncated at deg f. Falls back to the full basis otherwise.
 */
template <CoefficientField F>
bool homogeneous_member(const Polynomial<F>& f, const Ideal<F>& ideal, const GbOptions& opts = {}) {
    if (f.is_zero()) return true;
    const auto& gens = ideal.generators();
    bool graded = ideal.ring()->order().kind() == MonomialOrder::Kind::grevlex && f.is_homogeneous() &&
                  std::all_of(gens.begin(), gens.end(), [](const Polynomial<F>& g) { return g.is_homogeneous(); });
    if (!graded) return ideal_member(f, ideal, opts);
    GbOptions bounded = opts;
    bounded.degree_bound = static_cast<unsigned>(f.degree());
    return normal_form(f, groebner_basis(ideal.ring(), gens, bounded), opts).is_zero();
}

/// True iff every generator of inner lies in outer.
template <CoefficientField F>
bool ideal_contains(const Ideal<F>& outer, const Ideal<F>& inner, const GbOptions& opts = {}) {
    return std::all_of(inner.generators().begin(), inner.generators().end(),
                       [&](const Polynomial<F>& g) { return ideal_member(g, outer, opts); });
}

template <CoefficientField F>
bool ideal_equal(const Ideal<F>& a, const Ideal<F>& b, const GbOptions& opts = {}) {
    return a.groebner(opts) == b.groebner(opts);
}

template <CoefficientField F>
Ideal<F> ideal_sum(const Ideal<F>& a, const Ideal<F>& b) {
    Ideal<F> s(a.ring(), a.generators());
    s.add_all(b.generators());
    return s;
}

template <CoefficientField F>
Ideal<F> ideal_product(const Ideal<F>& a, const Ideal<F>& b) {
    Ideal<F> p(a.ring());
    for (const auto& f : a.generators())
        for (const auto& g : b.generators()) p.add(f * g);
    return p;
}

namespace detail {

// Smallest set of variables meeting every support mask (each mask nonzero).
inline int min_hitting_set(std::vector<std::uint64_t> sets) {
    std::sort(sets.begin(), sets.end(), [](auto a, auto b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<std::uint64_t> minimal;
    for (auto s : sets)
        if (std::none_of(minimal.begin(), minimal.end(), [&](auto m) { return (m & s) == m; })) minimal.push_back(s);
    int best = std::numeric_limits<int>::max();
    auto rec = [&](auto&& self, std::uint64_t chosen, int size) -> void {
        if (size >= best) return;
        const std::uint64_t* open = nullptr;
        for (const auto& s : minimal)
            if (!(s & chosen)) {
                open = &s;
                break;
            }
        if (!open) {
            best = size;
            return;
        }
        if (size + 1 >= best) return;
        for (std::uint64_t rest = *open; rest; rest &= rest - 1)
            self(self, chosen | (rest & -rest), size + 1);
    };
    rec(rec, 0, 0);
    return best;
}

}  // namespace detail

/// Krull dimension of S/I: largest variable set containing no leading-monomial support. -1 for the unit ideal.
template <CoefficientField F>
int krull_dimension(const Ideal<F>& ideal, const GbOptions& opts = {}) {
    const auto& g = ideal.groebner(opts);
    if (g.is_unit()) return -1;
    const int n = static_cast<int>(ideal.ring()->nvars());
    if (g.elements.empty()) return n;
    std::vector<std::uint64_t> supports;
    for (const auto& e : g.elements) supports.push_back(e.leading_monomial().support());
    return n - detail::min_hitting_set(std::move(supports));
}

/// Codimension in the ambient polynomial ring; nvars + 1 for the unit ideal.
template <CoefficientField F>
int height(const Ideal<F>& ideal, const GbOptions& opts = {}) {
    return static_cast<int>(ideal.ring()->nvars()) - krull_dimension(ideal, opts);
}

/// f in rad(I), via 1 in I + (1 - w f) over the ring with one extra variable w.
template <CoefficientField F>
bool radical_member(const Polynomial<F>& f, const Ideal<F>& ideal, const GbOptions& opts = {}) {
    if (f.is_zero()) return true;
    const Ring<F>& ring = *ideal.ring();
    std::string w = "w";
    while (ring.index_of(w)) w += "_";
    auto names = ring.names();
    names.push_back(w);
    if (names.size() > kMaxVariables) throw InvalidArgument("no room for the auxiliary variable");
    auto ext = make_ring<F>(names, ring.field(), ring.order());
    std::map<std::string, Polynomial<F>> none;
    std::vector<Polynomial<F>> gens;
    for (const auto& g : ideal.generators()) gens.push_back(substitute(g, ext, none));
    auto one = Polynomial<F>::constant(ext, ring.field().one());
    gens.push_back(one - Polynomial<F>::variable(ext, w) * substitute(f, ext, none));
    return groebner_basis(ext, gens, opts).is_unit();
}

}  // namespace nullcone
