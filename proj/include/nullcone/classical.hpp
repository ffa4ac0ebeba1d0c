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
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "groebner.hpp"
#include "matrix.hpp"

namespace nullcone {

enum class Group { gl, sp, o, sl };

inline std::string group_name(Group g) {
    switch (g) {
        case Group::gl: return "gl";
        case Group::sp: return "sp";
        case Group::o: return "o";
        case Group::sl: return "sl";
    }
    return "?";
}

inline Group parse_group(const std::string& s) {
    if (s == "gl") return Group::gl;
    if (s == "sp") return Group::sp;
    if (s == "o") return Group::o;
    if (s == "sl") return Group::sl;
    throw InvalidArgument("unknown group '" + s + "' (expected gl, sp, o or sl)");
}

/// Binomial coefficient with C(i, j) = 0 whenever i < j or j < 0.
constexpr std::int64_t binom(std::int64_t i, std::int64_t j) noexcept {
    if (j < 0 || i < j) return 0;
    j = std::min(j, i - j);
    std::int64_t r = 1;
    for (std::int64_t k = 1; k <= j; ++k) r = r * (i - j + k) / k;
    return r;
}

/*
 * Group and size parameters. GL uses (m, n, t): Y is m x t and Z is t x n.
 * Sp uses (t, n): Y is 2t x n. O and SL use (d, n): Y is d x n.
 * p = 0 means the rationals.
 */
struct Params {
    Group group = Group::gl;
    int m = 0, n = 0, t = 0, d = 0;
    std::uint64_t p = 0;

    static Params gl(int m, int n, int t, std::uint64_t p = 0) { return {Group::gl, m, n, t, 0, p}; }
    static Params sp(int t, int n, std::uint64_t p = 0) { return {Group::sp, 0, n, t, 0, p}; }
    static Params o(int d, int n, std::uint64_t p = 0) { return {Group::o, 0, n, 0, d, p}; }
    static Params sl(int d, int n, std::uint64_t p = 0) { return {Group::sl, 0, n, 0, d, p}; }

    bool operator==(const Params&) const = default;
};

inline std::string describe(const Params& q) {
    std::string s = group_name(q.group) + "(";
    switch (q.group) {
        case Group::gl: s += "m=" + std::to_string(q.m) + ",n=" + std::to_string(q.n) + ",t=" + std::to_string(q.t); break;
        case Group::sp: s += "t=" + std::to_string(q.t) + ",n=" + std::to_string(q.n); break;
        case Group::o:
        case Group::sl: s += "d=" + std::to_string(q.d) + ",n=" + std::to_string(q.n); break;
    }
    return s + ",p=" + std::to_string(q.p) + ")";
}

inline void validate(const Params& q) {
    auto positive = [](int v, const char* name) {
        if (v < 1) throw InvalidArgument(std::string("parameter ") + name + " must be at least 1");
    };
    switch (q.group) {
        case Group::gl:
            positive(q.m, "m");
            positive(q.n, "n");
            positive(q.t, "t");
            break;
        case Group::sp:
            positive(q.t, "t");
            positive(q.n, "n");
            break;
        case Group::o:
            positive(q.d, "d");
            positive(q.n, "n");
            break;
        case Group::sl:
            positive(q.d, "d");
            positive(q.n, "n");
            if (q.d > q.n) throw InvalidArgument("sl needs d <= n");
            break;
    }
    if (q.p != 0 && (q.p >= (std::uint64_t{1} << 31) || !is_prime(q.p)))
        throw InvalidArgument("characteristic " + std::to_string(q.p) + " is neither 0 nor a prime below 2^31");
}

/// Rows and columns of Y (and of Z for GL).
inline std::pair<int, int> y_shape(const Params& q) {
    switch (q.group) {
        case Group::gl: return {q.m, q.t};
        case Group::sp: return {2 * q.t, q.n};
        case Group::o:
        case Group::sl: return {q.d, q.n};
    }
    return {0, 0};
}

inline std::size_t ambient_variable_count(const Params& q) {
    auto [r, c] = y_shape(q);
    std::size_t v = static_cast<std::size_t>(r) * static_cast<std::size_t>(c);
    if (q.group == Group::gl) v += static_cast<std::size_t>(q.t) * static_cast<std::size_t>(q.n);
    return v;
}

template <CoefficientField F>
struct Setup {
    Params params;
    RingPtr<F> ring;
    PolyMatrix<F> y;
    std::optional<PolyMatrix<F>> z;
    std::vector<Polynomial<F>> invariant_gens;
};

// Entries (i, j) of a square matrix with i < j, or i <= j when diagonal is set.
template <CoefficientField F>
std::vector<Polynomial<F>> upper_entries(const PolyMatrix<F>& m, bool diagonal) {
    std::vector<Polynomial<F>> out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = diagonal ? i : i + 1; j < m.cols(); ++j) out.push_back(m.at(i, j));
    return out;
}

template <CoefficientField F>
Setup<F> build_setup(const Params& q, const F& field, MonomialOrder order = MonomialOrder::grevlex()) {
    validate(q);
    if (field.characteristic() != q.p)
        throw InvalidArgument("field " + field.name() + " does not have characteristic " + std::to_string(q.p));
    auto [rows, cols] = y_shape(q);
    if (ambient_variable_count(q) > kMaxVariables)
        throw InvalidArgument(describe(q) + " needs more than " + std::to_string(kMaxVariables) + " variables");
    auto names = matrix_variable_names(rows, cols, "y");
    if (q.group == Group::gl) {
        auto zn = matrix_variable_names(q.t, q.n, "z");
        names.insert(names.end(), zn.begin(), zn.end());
    }
    auto ring = make_ring<F>(names, field, order);
    Setup<F> s{q, ring, generic_matrix(ring, rows, cols, "y"), std::nullopt, {}};
    switch (q.group) {
        case Group::gl:
            s.z = generic_matrix(ring, q.t, q.n, "z");
            s.invariant_gens = (s.y * *s.z).entries();
            break;
        case Group::sp: s.invariant_gens = upper_entries(gram(omega(ring, q.t), s.y), false); break;
        case Group::o: s.invariant_gens = upper_entries(gram(PolyMatrix<F>::identity(ring, q.d), s.y), true); break;
        case Group::sl: s.invariant_gens = minors(s.y, q.d); break;
    }
    return s;
}

/// Number of listed invariant generators.
inline std::int64_t invariant_generator_count(const Params& q) {
    switch (q.group) {
        case Group::gl: return std::int64_t{q.m} * q.n;
        case Group::sp: return binom(q.n, 2);
        case Group::o: return binom(q.n + 1, 2);
        case Group::sl: return binom(q.n, q.d);
    }
    return 0;
}

/// Krull dimension of the invariant ring.
inline std::int64_t invariant_dim(const Params& q) {
    std::int64_t m = q.m, n = q.n, t = q.t, d = q.d;
    switch (q.group) {
        case Group::gl: return std::min(m, n) <= t ? m * n : m * t + n * t - t * t;
        case Group::sp: return binom(n, 2) - binom(n - 2 * t, 2);
        case Group::o: return binom(n + 1, 2) - binom(n + 1 - d, 2);
        case Group::sl: return d * (n - d) + 1;
    }
    return 0;
}

/// The generators form a system of parameters of a polynomial invariant ring.
inline bool invariant_ring_is_regular(const Params& q) { return invariant_generator_count(q) == invariant_dim(q); }

template <CoefficientField F>
Ideal<F> nullcone_ideal(const Setup<F>& s) {
    return Ideal<F>(s.ring, s.invariant_gens);
}

template <CoefficientField F>
Ideal<F> entries_ideal(const RingPtr<F>& ring, const PolyMatrix<F>& m) {
    return Ideal<F>(ring, m.entries());
}

/// Ideal of k x k minors; the zero ideal when k exceeds a side.
template <CoefficientField F>
Ideal<F> minors_ideal(const RingPtr<F>& ring, const PolyMatrix<F>& m, std::size_t k) {
    if (k == 0) return Ideal<F>(ring, {Polynomial<F>::constant(ring, std::int64_t{1})});
    return Ideal<F>(ring, minors(m, k));
}

/// Height (m-i)(t-i) + (n-j)(t-j) + ij of the GL nullcone component indexed by (i, j).
inline std::int64_t gl_component_height(std::int64_t m, std::int64_t n, std::int64_t t, std::int64_t i,
                                        std::int64_t j) {
    if (i < 0 || j < 0 || i > m || j > n || i + j > t)
        throw InvalidArgument("component index needs 0 <= i <= m, 0 <= j <= n, i + j <= t");
    return (m - i) * (t - i) + (n - j) * (t - j) + i * j;
}

/// I_{i+1}(Y) + I_{j+1}(Z) + (YZ).
template <CoefficientField F>
Ideal<F> gl_component(const Setup<F>& s, int i, int j) {
    if (s.params.group != Group::gl) throw InvalidArgument("gl_component needs a gl setup");
    if (i < 0 || j < 0 || i + j > s.params.t) throw InvalidArgument("gl_component needs i, j >= 0 and i + j <= t");
    Ideal<F> p = minors_ideal(s.ring, s.y, static_cast<std::size_t>(i) + 1);
    p.add_all(minors(*s.z, static_cast<std::size_t>(j) + 1));
    p.add_all(s.invariant_gens);
    return p;
}

/// A sequence (s_0, ..., s_m) with entries in [0, n] and s_m = n.
struct Sigma {
    std::vector<int> s;

    int m() const { return static_cast<int>(s.size()) - 1; }

    void validate(int n) const {
        if (s.empty()) throw InvalidArgument("sigma must be nonempty");
        for (int v : s)
            if (v < 0 || v > n) throw InvalidArgument("sigma entries must lie in [0, n]");
        if (s.back() != n) throw InvalidArgument("sigma must end with n");
    }
    /// 0 = s_0 < s_1 < ... < s_m = n and m <= bound.
    bool is_standard(int n, int bound) const {
        if (s.empty() || s.front() != 0 || s.back() != n || m() > bound) return false;
        return std::adjacent_find(s.begin(), s.end(), [](int a, int b) { return a >= b; }) == s.end();
    }
    /// The standard sequence (0, 1, ..., min(n, bound) - 1, n).
    static Sigma standard_for(int n, int bound) {
        Sigma r;
        for (int k = 0; k < std::min(n, bound); ++k) r.s.push_back(k);
        r.s.push_back(n);
        return r;
    }
};

// Adds I_{k+1}(Y|_{s_k}) for every k.
template <CoefficientField F>
void add_sigma_minors(Ideal<F>& ideal, const PolyMatrix<F>& y, const Sigma& sigma) {
    for (int k = 0; k <= sigma.m(); ++k) {
        auto prefix = column_prefix(y, static_cast<std::size_t>(sigma.s[k]));
        ideal.add_all(minors(prefix, static_cast<std::size_t>(k) + 1));
    }
}

template <CoefficientField F>
Polynomial<F> y_entry(const Setup<F>& s, std::size_t row, std::size_t col) {
    return s.y.at(row - 1, col - 1);
}

/*
 * Symplectic family: (Y^tr Omega Y) + I_1(Y|_{s_0}) + ... + I_{m+1}(Y|_{s_m}),
 * plus (y_11, ..., y_1a), or when primed (y_11, ..., y_1n, y_{t+1,1}, ..., y_{t+1,a}).
 */
template <CoefficientField F>
Ideal<F> prs_ideal_sp(const Setup<F>& s, const Sigma& sigma, int a, bool primed) {
    if (s.params.group != Group::sp) throw InvalidArgument("prs_ideal_sp needs an sp setup");
    const int n = s.params.n, t = s.params.t;
    sigma.validate(n);
    if (a < 0 || a > n) throw InvalidArgument("a must lie in [0, n]");
    Ideal<F> ideal = nullcone_ideal(s);
    add_sigma_minors(ideal, s.y, sigma);
    if (!primed) {
        for (int c = 1; c <= a; ++c) ideal.add(y_entry(s, 1, c));
    } else {
        for (int c = 1; c <= n; ++c) ideal.add(y_entry(s, 1, c));
        for (int c = 1; c <= a; ++c) ideal.add(y_entry(s, static_cast<std::size_t>(t) + 1, c));
    }
    return ideal;
}

/// The smallest i in [1, p) with i^2 = -1 mod p; p must be 1 mod 4.
inline std::uint64_t sqrt_minus_one(std::uint64_t p) {
    if (p < 5 || p % 4 != 1) throw InvalidArgument("F_" + std::to_string(p) + " has no square root of -1");
    PrimeField f(p);
    for (std::uint64_t i = 2; i < p; ++i)
        if (f.mul(static_cast<PrimeField::Elem>(i), static_cast<PrimeField::Elem>(i)) == p - 1) return i;
    throw InvalidArgument("no square root of -1 found");
}

/// (Y^tr Y) + I_{t+1}(Y) with t = floor(d/2); for characteristic other than 2.
template <CoefficientField F>
Ideal<F> o_s_ideal(const Setup<F>& s) {
    if (s.params.group != Group::o) throw InvalidArgument("o_s_ideal needs an o setup");
    if (s.params.p == 2) throw InvalidArgument("o_s_ideal needs characteristic other than 2");
    Ideal<F> ideal = nullcone_ideal(s);
    ideal.add_all(minors(s.y, static_cast<std::size_t>(s.params.d / 2) + 1));
    return ideal;
}

/*
 * For d = 2t: the two ideals generated over o_s_ideal by
 * det(Y_{alpha|beta}) -/+ i^t sgn(alpha) det(Y_{alpha^c|beta}) over all
 * t-subsets alpha of rows and beta of columns.
 */
template <CoefficientField F>
std::pair<Ideal<F>, Ideal<F>> o_pq_ideals(const Setup<F>& s) {
    const Params& q = s.params;
    if (q.group != Group::o) throw InvalidArgument("o_pq_ideals needs an o setup");
    if (q.d % 2) throw InvalidArgument("o_pq_ideals needs even d");
    const int t = q.d / 2;
    if (t > q.n) throw InvalidArgument("o_pq_ideals needs d/2 <= n");
    typename F::Elem it;
    if constexpr (std::is_same_v<F, PrimeField>) {
        const F& f = s.ring->field();
        it = f.pow(static_cast<PrimeField::Elem>(sqrt_minus_one(q.p)), static_cast<std::uint64_t>(t));
    } else {
        throw InvalidArgument("o_pq_ideals needs a prime field containing a square root of -1");
    }
    const F& f = s.ring->field();
    Ideal<F> p = o_s_ideal(s), qq = o_s_ideal(s);
    for (const auto& alpha : subsets(static_cast<std::size_t>(q.d), static_cast<std::size_t>(t))) {
        auto coeff = f.mul(it, f.from_int(sgn_of(alpha)));
        auto comp = alpha.complement();
        for (const auto& beta : subsets(static_cast<std::size_t>(q.n), static_cast<std::size_t>(t))) {
            auto a = det(submatrix(s.y, alpha, beta));
            auto b = det(submatrix(s.y, comp, beta)).scaled(coeff);
            p.add(a - b);
            qq.add(a + b);
        }
    }
    return {std::move(p), std::move(qq)};
}

/*
 * Orthogonal family for characteristic other than 2: base + I_1(Y|_{s_0}) +
 * ... + I_{m+1}(Y|_{s_m}) + (y_11, ..., y_1a), where base is o_s_ideal
 * (plain) or one of o_pq_ideals.
 */
enum class OVariant { plain, P, Q };

template <CoefficientField F>
Ideal<F> prs_ideal_o(const Setup<F>& s, const Sigma& sigma, int a, OVariant variant) {
    if (s.params.group != Group::o) throw InvalidArgument("prs_ideal_o needs an o setup");
    const int n = s.params.n;
    sigma.validate(n);
    if (a < 0 || a > n) throw InvalidArgument("a must lie in [0, n]");
    Ideal<F> ideal = o_s_ideal(s);
    if (variant != OVariant::plain) {
        auto [p, q] = o_pq_ideals(s);
        ideal = variant == OVariant::P ? std::move(p) : std::move(q);
    }
    add_sigma_minors(ideal, s.y, sigma);
    for (int c = 1; c <= a; ++c) ideal.add(y_entry(s, 1, c));
    return ideal;
}

/// Characteristic 2: (Y^tr Y) plus the column sums y_1j + ... + y_dj.
template <CoefficientField F>
Ideal<F> o_char2_ideal(const Setup<F>& s) {
    if (s.params.group != Group::o) throw InvalidArgument("o_char2_ideal needs an o setup");
    if (s.params.p != 2) throw InvalidArgument("o_char2_ideal needs characteristic 2");
    Ideal<F> ideal = nullcone_ideal(s);
    for (std::size_t j = 0; j < s.y.cols(); ++j) {
        Polynomial<F> sum(s.ring);
        for (std::size_t i = 0; i < s.y.rows(); ++i) sum += s.y.at(i, j);
        ideal.add(sum);
    }
    return ideal;
}

struct LabeledDim {
    std::string label;
    std::string formula;
    std::int64_t value;
};

struct DimReport {
    std::int64_t invariant_dim = 0;
    std::string invariant_formula;
    std::int64_t ambient_dim = 0;
    /// The "nullcone" entry is always present; others depend on the group.
    std::vector<LabeledDim> dims;

    std::optional<std::int64_t> find(const std::string& label) const {
        for (const auto& d : dims)
            if (d.label == label) return d.value;
        return std::nullopt;
    }
};

/// Dimension of the symplectic family quotient for standard sigma and a = s_k.
inline std::int64_t sp_prs_dim(int t, int n, const Sigma& sigma, int k, bool primed) {
    if (!sigma.is_standard(n, t)) throw InvalidArgument("sp_prs_dim needs a standard sigma");
    const std::int64_t m = sigma.m();
    if (k < 0 || k > m || (primed && k > m - 1)) throw InvalidArgument("sp_prs_dim: k out of range");
    std::int64_t sum = 0;
    for (int j = 1; j <= m - 1; ++j) sum += sigma.s[j];
    return m * (2 * t + n - m - (primed ? 1 : 0)) - k - sum;
}

/// Dimension of the orthogonal family quotient for standard sigma and a = s_k, k <= m - 1.
inline std::int64_t o_prs_dim(int d, int n, const Sigma& sigma, int k) {
    if (!sigma.is_standard(n, d / 2)) throw InvalidArgument("o_prs_dim needs a standard sigma");
    const std::int64_t m = sigma.m();
    if (k < 0 || k > m - 1) throw InvalidArgument("o_prs_dim: k out of range");
    std::int64_t sum = 0;
    for (int j = 1; j <= m - 1; ++j) sum += sigma.s[j];
    return m * (d + n - m - 1) - k - sum;
}

/// Closed-form dimensions of the invariant ring, the nullcone and its named pieces.
inline DimReport closed_form_dims(const Params& q) {
    validate(q);
    DimReport r;
    r.invariant_dim = invariant_dim(q);
    r.ambient_dim = static_cast<std::int64_t>(ambient_variable_count(q));
    const std::int64_t m = q.m, n = q.n, t = q.t, d = q.d;
    switch (q.group) {
        case Group::gl: {
            r.invariant_formula = std::min(m, n) <= t ? "mn" : "mt+nt-t^2";
            std::int64_t best = -1;
            for (std::int64_t i = 0; i <= t; ++i) {
                std::int64_t ci = std::min(i, m), cj = std::min(t - i, n);
                std::int64_t dim = (m + n) * t - gl_component_height(m, n, t, ci, cj);
                r.dims.push_back({"component_" + std::to_string(i) + "_" + std::to_string(t - i),
                                  "(m+n)t-[(m-i)(t-i)+(n-j)(t-j)+ij]", dim});
                best = std::max(best, dim);
            }
            r.dims.insert(r.dims.begin(), {"nullcone", "max over components i+j=t", best});
            break;
        }
        case Group::sp:
            r.invariant_formula = "C(n,2)-C(n-2t,2)";
            if (n <= t + 1)
                r.dims.push_back({"nullcone", "2nt-C(n,2)", 2 * n * t - binom(n, 2)});
            else
                r.dims.push_back({"nullcone", "nt+C(t+1,2)", n * t + binom(t + 1, 2)});
            break;
        case Group::o:
            r.invariant_formula = "C(n+1,2)-C(n+1-d,2)";
            if (q.p == 2) {
                std::int64_t h = (d - 1) / 2;
                if (n <= h + 1)
                    r.dims.push_back({"nullcone", "nd-C(n+1,2)", n * d - binom(n + 1, 2)});
                else if (d % 2)
                    r.dims.push_back({"nullcone", "nt+C(t+1,2), d=2t+1", n * h + binom(h + 1, 2)});
                else
                    r.dims.push_back({"nullcone", "n(t+1)+C(t+1,2), d=2t+2", n * (h + 1) + binom(h + 1, 2)});
            } else if (d % 2) {
                std::int64_t h = d / 2;
                if (n <= h + 1)
                    r.dims.push_back({"nullcone", "2nt-C(n,2), d=2t+1", 2 * n * h - binom(n, 2)});
                else
                    r.dims.push_back({"nullcone", "nt+C(t+1,2), d=2t+1", n * h + binom(h + 1, 2)});
            } else {
                std::int64_t h = d / 2;
                if (n <= h - 1) {
                    r.dims.push_back({"nullcone", "2nt-C(n+1,2), d=2t", 2 * n * h - binom(n + 1, 2)});
                } else {
                    std::int64_t pq = n * h + binom(h, 2);
                    r.dims.push_back({"nullcone", "nt+C(t,2), d=2t", pq});
                    r.dims.push_back({"P", "nt+C(t,2)", pq});
                    r.dims.push_back({"Q", "nt+C(t,2)", pq});
                    r.dims.push_back({"P+Q", "nt-n-1+C(t+1,2)", n * h - n - 1 + binom(h + 1, 2)});
                }
            }
            break;
        case Group::sl:
            r.invariant_formula = "d(n-d)+1";
            r.dims.push_back({"nullcone", "dn-(n-d+1)", d * n - (n - d + 1)});
            break;
    }
    return r;
}

/// A structured specialization of Y together with its reduced ring.
template <CoefficientField F>
struct CiSpecialization {
    RingPtr<F> ring;
    PolyMatrix<F> ybar;
    std::vector<Polynomial<F>> gram_gens;
};

/*
 * The specialization certifying the complete intersection property. Sp
 * (n <= t+1): rows 1..t+1-n and t+1..2t+1-n vanish and the remaining
 * 2(n-1) x n block is the staircase pattern in y_{r,c}, r < c. O (p odd,
 * n <= (d+1)/2): the top 2n-1 rows carry the palindromic pattern, the rest
 * vanish.
 */
template <CoefficientField F>
CiSpecialization<F> ci_specialization(const Params& q, const F& field) {
    validate(q);
    using Poly = Polynomial<F>;
    if (q.group == Group::sp) {
        if (q.n > q.t + 1) throw InvalidArgument("sp specialization needs n <= t+1");
        const int tp = q.n - 1;
        std::vector<std::string> names;
        for (int r = 1; r <= tp; ++r)
            for (int c = r + 1; c <= q.n; ++c) names.push_back("y_" + std::to_string(r) + "_" + std::to_string(c));
        auto ring = make_ring<F>(names, field);
        auto var = [&](int r, int c) { return Poly::variable(ring, "y_" + std::to_string(r) + "_" + std::to_string(c)); };
        PolyMatrix<F> y(ring, 2 * static_cast<std::size_t>(q.t), static_cast<std::size_t>(q.n));
        const int top0 = q.t + 1 - q.n, bottom0 = 2 * q.t + 1 - q.n;  // zero-based first rows of the blocks
        for (int r = 1; r <= tp; ++r)
            for (int c = 1; c <= q.n; ++c) {
                if (c > r) y.at(top0 + r - 1, c - 1) = var(r, c);
                if (r + c <= tp + 1) y.at(bottom0 + r - 1, c - 1) = var(r, r + c);
            }
        auto g = upper_entries(gram(omega(ring, q.t), y), false);
        return {ring, std::move(y), std::move(g)};
    }
    if (q.group == Group::o) {
        if (q.p == 2) throw InvalidArgument("o specialization needs characteristic other than 2");
        if (2 * q.n > q.d + 1) throw InvalidArgument("o specialization needs n <= (d+1)/2");
        const int n = q.n;
        // label(r, c) is the second index of the variable at (r, c), or 0 for a zero entry.
        auto label = [n](int r, int c) -> int {
            if (r < n) return c <= r ? std::min(c, r + 1 - c) : 0;
            int s = r - n;
            return c > s ? std::min(c, s + 1 + n - c) : 0;
        };
        std::vector<std::string> names;
        for (int r = 1; r <= 2 * n - 1; ++r)
            for (int c = 1; c <= n; ++c) {
                int l = label(r, c);
                if (!l) continue;
                std::string nm = "y_" + std::to_string(r) + "_" + std::to_string(l);
                if (std::find(names.begin(), names.end(), nm) == names.end()) names.push_back(nm);
            }
        auto ring = make_ring<F>(names, field);
        PolyMatrix<F> y(ring, static_cast<std::size_t>(q.d), static_cast<std::size_t>(n));
        for (int r = 1; r <= 2 * n - 1; ++r)
            for (int c = 1; c <= n; ++c)
                if (int l = label(r, c))
                    y.at(r - 1, c - 1) = Poly::variable(ring, "y_" + std::to_string(r) + "_" + std::to_string(l));
        auto g = upper_entries(gram(PolyMatrix<F>::identity(ring, static_cast<std::size_t>(q.d)), y), true);
        return {ring, std::move(y), std::move(g)};
    }
    throw InvalidArgument("ci_specialization is defined for sp and o only");
}

struct SecantDefect {
    std::int64_t expected, actual;
    bool defective;
};

/// Expected versus actual dimension of the secant variety of G(2, n) indexed by t.
inline SecantDefect secant_defect(std::int64_t t, std::int64_t n) {
    if (t < 1 || n < 4) throw InvalidArgument("secant_defect needs t >= 1 and n >= 4");
    std::int64_t actual = binom(n, 2) - binom(n - 2 * t, 2) - 1;
    std::int64_t expected = std::min(binom(n, 2) - 1, 2 * (n - 2) * (t - 1) + 2 * (n - 2) + (t - 1));
    return {expected, actual, actual < expected};
}

}  // namespace nullcone
