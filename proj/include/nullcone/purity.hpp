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
#include <cstdint>
#include <map>
#include <type_traits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "classical.hpp"

namespace nullcone {

struct PurityVerdict {
    bool pure = false;
    std::string clause;
    std::uint64_t p = 0;
};

/// Decides purity of the invariant subring from the group, sizes and characteristic.
inline PurityVerdict purity_oracle(const Params& q) {
    validate(q);
    auto v = [&](bool pure, const char* clause) { return PurityVerdict{pure, clause, q.p}; };
    if (q.p == 0) return v(true, "char 0: linearly reductive");
    const int m = q.m, n = q.n, t = q.t, d = q.d;
    switch (q.group) {
        case Group::gl:
            if (t == 1) return v(true, "gl: t=1");
            if (std::min(m, n) <= t) return v(true, "gl: min(m,n)<=t");
            return v(false, "gl: t>=2 and min(m,n)>t");
        case Group::sp:
            if (n <= t + 1) return v(true, "sp: n<=t+1");
            return v(false, "sp: n>t+1");
        case Group::o:
            if (d == 1) return v(true, "o: d=1");
            if (d == 2 && q.p != 2) return v(true, "o: d=2, p odd");
            if (q.p == 2 && 2 * n <= d + 1) return v(true, "o: p=2, n<=(d+1)/2");
            if (q.p != 2 && 2 * n <= d + 2) return v(true, "o: p odd, n<=(d+2)/2");
            return v(false, q.p == 2 ? "o: p=2, n>(d+1)/2" : "o: p odd, d>=3, n>(d+2)/2");
        case Group::sl:
            if (d == 1) return v(true, "sl: d=1");
            if (d == n) return v(true, "sl: d=n");
            return v(false, "sl: 1<d<n");
    }
    throw std::logic_error("unreachable");
}

/// Outcome of a witness search over k in [2, k_max].
struct WitnessSearch {
    std::optional<int> k;
    /// Values of k whose membership test ran out of budget; k is the smallest witness
    /// exactly when no undecided value lies below it.
    std::vector<int> undecided;

    bool minimal() const { return !k || undecided.empty() || undecided.front() > *k; }
};

inline bool is_power_of(std::uint64_t k, std::uint64_t p) {
    if (p < 2 || k < 1) return false;
    while (k % p == 0) k /= p;
    return k == 1;
}

namespace detail {

template <CoefficientField F>
void check_witness_preconditions(const Setup<F>& s) {
    if (s.params.p == 0) throw InvalidArgument("frobenius witness needs positive characteristic");
    if (!invariant_ring_is_regular(s.params))
        throw InvalidArgument("frobenius witness needs a regular invariant ring: " + describe(s.params) + " has " +
                              std::to_string(invariant_generator_count(s.params)) + " generators but dimension " +
                              std::to_string(invariant_dim(s.params)));
}

template <CoefficientField F>
Polynomial<F> generator_product(const Setup<F>& s) {
    Polynomial<F> product = Polynomial<F>::constant(s.ring, std::int64_t{1});
    for (const auto& x : s.invariant_gens) product *= x;
    return product;
}

}  // namespace detail

/// Whether (x_1...x_r)^(k-1) lies in (x_1^k, ..., x_r^k), by a Groebner basis truncated at the target degree.
template <CoefficientField F>
bool witness_at_by_groebner(const Setup<F>& s, int k, const GbOptions& opts = {}) {
    detail::check_witness_preconditions(s);
    if (k < 2) throw InvalidArgument("witness exponent must be at least 2");
    Ideal<F> frob(s.ring);
    for (const auto& x : s.invariant_gens) frob.add(x.pow(static_cast<unsigned>(k)));
    return homogeneous_member(detail::generator_product(s).pow(static_cast<unsigned>(k - 1)), frob, opts);
}

/*
 * Same question for k = q a power of p. S is free over its subring of q-th
 * powers with basis the monomials y^mu, 0 <= mu_i < q, so writing
 * f = sum_mu f_mu^q y^mu, f lies in (x_1^q, ..., x_r^q) iff every f_mu lies
 * in (x_1, ..., x_r). Over F_p every coefficient is its own q-th root.
 */
inline bool witness_at_by_frobenius(const Setup<PrimeField>& s, int q, const GbOptions& opts = {}) {
    detail::check_witness_preconditions(s);
    if (q < 2 || !is_power_of(static_cast<std::uint64_t>(q), s.params.p))
        throw InvalidArgument("frobenius route needs k to be a power of p");
    using Poly = Polynomial<PrimeField>;
    const auto uq = static_cast<unsigned>(q);
    Poly f = detail::generator_product(s).pow(uq - 1);
    const std::size_t nv = s.ring->nvars();
    std::map<std::vector<unsigned>, std::vector<Poly::Term>> parts;
    for (const auto& t : f.terms()) {
        std::vector<unsigned> mu(nv);
        Monomial root;
        for (std::size_t i = 0; i < nv; ++i) {
            mu[i] = t.mono[i] % uq;
            root.set(i, t.mono[i] / uq);
        }
        parts[mu].push_back({root, t.coeff});
    }
    Ideal<PrimeField> nullcone = nullcone_ideal(s);
    for (auto& [mu, terms] : parts)
        if (!ideal_member(Poly::from_terms(s.ring, std::move(terms)), nullcone, opts)) return false;
    return true;
}

/// Whether k is a witness, by the Frobenius route when k is a power of p and by Groebner bases otherwise.
template <CoefficientField F>
bool witness_at(const Setup<F>& s, int k, const GbOptions& opts = {}) {
    if constexpr (std::is_same_v<F, PrimeField>) {
        if (is_power_of(static_cast<std::uint64_t>(k), s.params.p)) return witness_at_by_frobenius(s, k, opts);
    }
    return witness_at_by_groebner(s, k, opts);
}

/*
 * Smallest k in [2, k_max] with (x_1...x_r)^(k-1) in (x_1^k, ..., x_r^k),
 * where x_i are the invariant generators. Powers of p are tried first since
 * they are cheap; other k are only tried below the first power-of-p witness,
 * because membership at k implies membership at every larger k.
 */
template <CoefficientField F>
WitnessSearch frobenius_witness(const Setup<F>& s, int k_max, const GbOptions& opts = {}) {
    detail::check_witness_preconditions(s);
    WitnessSearch result;
    int upper = k_max + 1;
    for (int k = 2; k <= k_max; ++k) {
        if (!is_power_of(static_cast<std::uint64_t>(k), s.params.p)) continue;
        try {
            if (witness_at(s, k, opts)) {
                upper = k;
                break;
            }
        } catch (const BudgetExhausted&) {
            result.undecided.push_back(k);
        }
    }
    for (int k = 2; k < upper; ++k) {
        if (is_power_of(static_cast<std::uint64_t>(k), s.params.p)) continue;
        try {
            if (witness_at(s, k, opts)) {
                upper = k;
                break;
            }
        } catch (const BudgetExhausted&) {
            result.undecided.push_back(k);
        }
    }
    std::sort(result.undecided.begin(), result.undecided.end());
    std::erase_if(result.undecided, [&](int k) { return k > upper; });
    if (upper <= k_max) result.k = upper;
    return result;
}

/// t^2 + t + 1, after checking it against the component heights for m = n = t + 1.
inline std::int64_t gl_cd_bound(std::int64_t t) {
    if (t < 1) throw InvalidArgument("gl_cd_bound needs t >= 1");
    const std::int64_t m = t + 1, n = t + 1;
    auto level_max = [&](std::int64_t l) {
        std::int64_t best = -1;
        for (std::int64_t i = 0; i <= l; ++i) best = std::max(best, gl_component_height(m, n, t, i, l - i));
        if (best != l * l - (2 * t + 1) * l + 2 * t * (t + 1))
            throw std::logic_error("component height maximum disagrees with its closed form");
        return best;
    };
    std::int64_t bound = level_max(t);
    bound = std::max(bound, level_max(t - 1) - 1);
    const std::int64_t closed = t * t + t + 1;
    if (bound != closed) throw std::logic_error("cohomological dimension bound disagrees with t^2+t+1");
    if (t >= 2 && !(closed < t * t + 2 * t)) throw std::logic_error("bound not below t^2+2t");
    return closed;
}

struct EvidenceReport {
    PurityVerdict verdict;
    std::int64_t invariant_dim = 0;
    std::int64_t generator_count = 0;
    std::optional<std::int64_t> nullcone_codim;
    std::optional<bool> ci;
    bool regular = false;
    std::optional<int> witness_k;
    std::vector<int> witness_undecided;
    std::string witness_status;
    bool consistent = false;
    bool inconclusive = false;
    std::vector<std::string> notes;
};

inline constexpr int kDefaultKMax = 6;

template <CoefficientField F>
EvidenceReport purity_evidence(const Setup<F>& s, int k_max = kDefaultKMax, const GbOptions& opts = {}) {
    const Params& q = s.params;
    if (q.p == 0) throw InvalidArgument("purity_evidence needs positive characteristic");
    EvidenceReport r;
    r.verdict = purity_oracle(q);
    r.invariant_dim = invariant_dim(q);
    r.generator_count = invariant_generator_count(q);
    r.regular = r.generator_count == r.invariant_dim;

    try {
        r.nullcone_codim = height(nullcone_ideal(s), opts);
        r.ci = *r.nullcone_codim == r.generator_count;
    } catch (const BudgetExhausted& e) {
        r.notes.push_back(std::string("nullcone codim: ") + e.what());
    }
    if (r.nullcone_codim) {
        std::string cmp = "codim " + std::to_string(*r.nullcone_codim) + " vs invariant dim " +
                          std::to_string(r.invariant_dim);
        if (*r.nullcone_codim < r.invariant_dim)
            r.notes.push_back(cmp + ": the expanded maximal ideal is too small for the top local cohomology to "
                                    "survive when the nullcone is Cohen-Macaulay");
        else
            r.notes.push_back(cmp + ": no obstruction from heights");
    }

    if (r.regular) {
        WitnessSearch w = frobenius_witness(s, k_max, opts);
        r.witness_k = w.k;
        r.witness_undecided = w.undecided;
        if (w.k)
            r.witness_status = w.minimal() ? "found" : "found, smaller k undecided";
        else
            r.witness_status = w.undecided.empty() ? "none up to k_max" : "none decided up to k_max";
        for (int k : w.undecided) r.notes.push_back("witness test at k=" + std::to_string(k) + ": budget exhausted");
        if (r.witness_k)
            r.notes.push_back("(x_1...x_r)^" + std::to_string(*r.witness_k - 1) + " lies in (x_1^" +
                              std::to_string(*r.witness_k) + ", ..., x_r^" + std::to_string(*r.witness_k) +
                              "): the socle class vanishes, so the embedding is not pure");
    } else {
        r.witness_status = "not attempted: invariant ring not regular";
        if (q.group == Group::gl && q.t >= 2)
            r.notes.push_back("gl component heights bound the cohomological dimension by t^2+t+1 = " +
                              std::to_string(gl_cd_bound(q.t)) + " for m = n = t+1");
    }

    const bool witness = r.witness_k.has_value();
    const bool small_codim = r.nullcone_codim && *r.nullcone_codim < r.invariant_dim;
    if (r.verdict.pure)
        r.consistent = !witness;
    else
        r.consistent = witness || small_codim;
    if (!r.consistent) {
        r.inconclusive = true;
        if (r.witness_status == "none up to k_max" || r.witness_status == "none decided up to k_max")
            r.notes.push_back("inconclusive: k_max reached");
        else r.notes.push_back("inconclusive: no certificate computed");
    }
    if (r.verdict.pure && !witness)
        r.notes.push_back("oracle says pure; absence of a witness up to k_max is evidence, not proof");
    return r;
}

}  // namespace nullcone
