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

#include <bit>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace nullcone {

/// Strictly increasing subset of {1, ..., ambient}.
class IndexSet {
   public:
    IndexSet() = default;
    IndexSet(std::vector<std::size_t> elements, std::size_t ambient)
        : elems_(std::move(elements)), ambient_(ambient) {
        for (std::size_t k = 0; k < elems_.size(); ++k) {
            if (elems_[k] < 1 || elems_[k] > ambient_)
                throw InvalidArgument("index " + std::to_string(elems_[k]) + " outside [1, " +
                                      std::to_string(ambient_) + "]");
            if (k && elems_[k] <= elems_[k - 1]) throw InvalidArgument("index set must be strictly increasing");
        }
    }

    /// {lo, lo+1, ..., hi}; empty when hi < lo.
    static IndexSet range(std::size_t lo, std::size_t hi, std::size_t ambient) {
        std::vector<std::size_t> v;
        for (std::size_t i = lo; i <= hi; ++i) v.push_back(i);
        return IndexSet(std::move(v), ambient);
    }
    static IndexSet all(std::size_t ambient) { return range(1, ambient, ambient); }

    const std::vector<std::size_t>& elements() const noexcept { return elems_; }
    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t size() const noexcept { return elems_.size(); }
    std::size_t operator[](std::size_t k) const { return elems_[k]; }

    IndexSet complement() const {
        std::vector<std::size_t> v;
        std::size_t k = 0;
        for (std::size_t i = 1; i <= ambient_; ++i) {
            if (k < elems_.size() && elems_[k] == i)
                ++k;
            else
                v.push_back(i);
        }
        return IndexSet(std::move(v), ambient_);
    }

    bool operator==(const IndexSet&) const = default;

   private:
    std::vector<std::size_t> elems_;
    std::size_t ambient_ = 0;
};

/// All k-subsets of {1..n} in lexicographic order.
inline std::vector<IndexSet> subsets(std::size_t n, std::size_t k) {
    std::vector<IndexSet> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i + 1;
    for (;;) {
        out.emplace_back(cur, n);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

/// Sign of the permutation (1..n) -> (alpha, complement of alpha), both ascending.
inline int sgn_of(const IndexSet& alpha) {
    std::size_t inversions = 0;
    for (std::size_t k = 0; k < alpha.size(); ++k) inversions += alpha[k] - 1 - k;
    return inversions % 2 ? -1 : 1;
}

template <CoefficientField F>
class PolyMatrix {
   public:
    using Poly = Polynomial<F>;

    PolyMatrix(RingPtr<F> ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Poly(ring_)) {}

    PolyMatrix(RingPtr<F> ring, std::size_t rows, std::size_t cols, std::vector<Poly> entries)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_) throw InvalidArgument("entry count does not match matrix shape");
        for (auto& e : entries_) {
            if (e.is_zero())
                e = Poly(ring_);
            else if (!same_ring(e.ring(), ring_))
                throw InvalidArgument("matrix entries must share one ring");
        }
    }

    static PolyMatrix identity(RingPtr<F> ring, std::size_t n) {
        PolyMatrix m(ring, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::constant(ring, ring->field().one());
        return m;
    }

    const RingPtr<F>& ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const std::vector<Poly>& entries() const noexcept { return entries_; }

    // Zero-based access.
    Poly& at(std::size_t i, std::size_t j) { return entries_.at(i * cols_ + j); }
    const Poly& at(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }

    PolyMatrix transpose() const {
        PolyMatrix t(ring_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        if (a.cols_ != b.rows_) throw InvalidArgument("matrix product dimension mismatch");
        PolyMatrix c(a.ring_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) {
                Poly s(a.ring_);
                for (std::size_t k = 0; k < a.cols_; ++k)
                    if (!a.at(i, k).is_zero() && !b.at(k, j).is_zero()) s += a.at(i, k) * b.at(k, j);
                c.at(i, j) = std::move(s);
            }
        return c;
    }
    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix sum dimension mismatch");
        PolyMatrix c(a.ring_, a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.entries_.size(); ++k) c.entries_[k] = a.entries_[k] + b.entries_[k];
        return c;
    }
    PolyMatrix operator-() const {
        PolyMatrix c(*this);
        for (auto& e : c.entries_) e = -e;
        return c;
    }

    bool is_square() const noexcept { return rows_ == cols_; }
    /// X^tr = -X with an explicitly zero diagonal; the diagonal check matters in characteristic 2.
    bool is_alternating() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (!at(i, i).is_zero()) return false;
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (!(at(i, j) + at(j, i)).is_zero()) return false;
        }
        return true;
    }
    bool is_symmetric() const { return is_square() && transpose() == *this; }

    bool operator==(const PolyMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

   private:
    RingPtr<F> ring_;
    std::size_t rows_, cols_;
    std::vector<Poly> entries_;
};

/// Names symbol_i_j for a rows x cols matrix, row-major, 1-based.
inline std::vector<std::string> matrix_variable_names(std::size_t rows, std::size_t cols, const std::string& symbol) {
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= rows; ++i)
        for (std::size_t j = 1; j <= cols; ++j) v.push_back(symbol + "_" + std::to_string(i) + "_" + std::to_string(j));
    return v;
}

/// Names symbol_i_j with i < j, the free entries of an alternating matrix.
inline std::vector<std::string> alternating_variable_names(std::size_t n, const std::string& symbol) {
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            v.push_back(symbol + "_" + std::to_string(i) + "_" + std::to_string(j));
    return v;
}

template <CoefficientField F>
PolyMatrix<F> generic_matrix(const RingPtr<F>& ring, std::size_t rows, std::size_t cols, const std::string& symbol) {
    PolyMatrix<F> m(ring, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = Polynomial<F>::variable(
                ring, symbol + "_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    return m;
}

/// Alternating matrix with (i,j) = symbol_i_j above the diagonal.
template <CoefficientField F>
PolyMatrix<F> generic_alternating(const RingPtr<F>& ring, std::size_t n, const std::string& symbol) {
    PolyMatrix<F> m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto v = Polynomial<F>::variable(ring, symbol + "_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
            m.at(j, i) = -v;
            m.at(i, j) = std::move(v);
        }
    return m;
}

/// The 2t x 2t standard symplectic matrix [[0, 1], [-1, 0]] in t x t blocks.
template <CoefficientField F>
PolyMatrix<F> omega(const RingPtr<F>& ring, std::size_t t) {
    if (t < 1) throw InvalidArgument("omega needs t >= 1");
    PolyMatrix<F> m(ring, 2 * t, 2 * t);
    for (std::size_t i = 0; i < t; ++i) {
        m.at(i, t + i) = Polynomial<F>::constant(ring, std::int64_t{1});
        m.at(t + i, i) = Polynomial<F>::constant(ring, std::int64_t{-1});
    }
    return m;
}

/// Square matrix with every off-diagonal entry 1 and zero diagonal.
template <CoefficientField F>
PolyMatrix<F> psi(const RingPtr<F>& ring, std::size_t size) {
    if (size < 1) throw InvalidArgument("psi needs size >= 1");
    PolyMatrix<F> m(ring, size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            if (i != j) m.at(i, j) = Polynomial<F>::constant(ring, std::int64_t{1});
    return m;
}

/// Y^tr * form * Y.
template <CoefficientField F>
PolyMatrix<F> gram(const PolyMatrix<F>& form, const PolyMatrix<F>& y) {
    if (!form.is_square() || form.rows() != y.rows()) throw InvalidArgument("gram: form side must equal rows of Y");
    return y.transpose() * (form * y);
}

/// Entries at the given 1-based rows and columns, in order.
template <CoefficientField F>
PolyMatrix<F> submatrix(const PolyMatrix<F>& m, const IndexSet& rows, const IndexSet& cols) {
    PolyMatrix<F> s(m.ring(), rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (rows[i] > m.rows() || cols[j] > m.cols()) throw InvalidArgument("submatrix index out of range");
            s.at(i, j) = m.at(rows[i] - 1, cols[j] - 1);
        }
    return s;
}

/// The first s columns.
template <CoefficientField F>
PolyMatrix<F> column_prefix(const PolyMatrix<F>& m, std::size_t s) {
    if (s > m.cols()) throw InvalidArgument("column prefix longer than the matrix");
    return submatrix(m, IndexSet::all(m.rows()), IndexSet::range(1, s, m.cols()));
}

/// Laplace expansion along rows, memoized on the set of columns still unused.
template <CoefficientField F>
Polynomial<F> det_cofactor(const PolyMatrix<F>& m) {
    if (!m.is_square()) throw InvalidArgument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n > 24) throw InvalidArgument("cofactor determinant limited to side 24");
    using Poly = Polynomial<F>;
    std::unordered_map<std::uint32_t, Poly> memo;
    auto rec = [&](auto&& self, std::uint32_t mask) -> Poly {
        if (!mask) return Poly::constant(m.ring(), std::int64_t{1});
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
        Poly sum(m.ring());
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(mask >> c & 1u)) continue;
            const Poly& a = m.at(row, c);
            if (!a.is_zero()) {
                Poly term = a * self(self, mask & ~(1u << c));
                if (sign > 0)
                    sum += term;
                else
                    sum -= term;
            }
            sign = -sign;
        }
        memo.emplace(mask, sum);
        return sum;
    };
    return rec(rec, n == 32 ? ~0u : (1u << n) - 1u);
}

/// Fraction-free Gaussian elimination; every division is exact in the polynomial ring.
template <CoefficientField F>
Polynomial<F> det_bareiss(const PolyMatrix<F>& m) {
    if (!m.is_square()) throw InvalidArgument("determinant of a non-square matrix");
    using Poly = Polynomial<F>;
    const std::size_t n = m.rows();
    if (n == 0) return Poly::constant(m.ring(), std::int64_t{1});
    std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n, Poly(m.ring())));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    bool negate = false;
    Poly prev = Poly::constant(m.ring(), std::int64_t{1});
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && a[r][k].is_zero()) ++r;
            if (r == n) return Poly(m.ring());
            std::swap(a[k], a[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                a[i][j] = divide_exact(v, prev);
            }
            a[i][k] = Poly(m.ring());
        }
        prev = a[k][k];
    }
    Poly d = a[n - 1][n - 1];
    return negate ? -d : d;
}

/// Determinant; cofactor expansion for small sides, Bareiss otherwise.
template <CoefficientField F>
Polynomial<F> det(const PolyMatrix<F>& m) {
    if (!m.is_square()) throw InvalidArgument("determinant of a non-square matrix");
    return m.rows() <= 4 ? det_cofactor(m) : det_bareiss(m);
}

/// All k x k minors ordered lexicographically by (row set, column set); empty if k exceeds a side.
template <CoefficientField F>
std::vector<Polynomial<F>> minors(const PolyMatrix<F>& m, std::size_t k) {
    if (k < 1) throw InvalidArgument("minor size must be at least 1");
    std::vector<Polynomial<F>> out;
    if (k > m.rows() || k > m.cols()) return out;
    auto row_sets = subsets(m.rows(), k);
    auto col_sets = subsets(m.cols(), k);
    for (const auto& r : row_sets)
        for (const auto& c : col_sets) out.push_back(det(submatrix(m, r, c)));
    return out;
}

/// Pfaffian by expansion along the first remaining row, memoized on the remaining index set.
template <CoefficientField F>
Polynomial<F> pfaffian(const PolyMatrix<F>& x) {
    if (!x.is_square()) throw InvalidArgument("pfaffian of a non-square matrix");
    const std::size_t n = x.rows();
    if (n % 2) throw InvalidArgument("pfaffian needs an even side");
    if (n > 32) throw InvalidArgument("pfaffian limited to side 32");
    if (!x.is_alternating()) throw InvalidArgument("pfaffian needs an alternating matrix");
    using Poly = Polynomial<F>;
    std::unordered_map<std::uint64_t, Poly> memo;
    auto rec = [&](auto&& self, std::uint64_t mask) -> Poly {
        if (!mask) return Poly::constant(x.ring(), std::int64_t{1});
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        std::size_t i = static_cast<std::size_t>(std::countr_zero(mask));
        std::uint64_t rest = mask & ~(std::uint64_t{1} << i);
        Poly sum(x.ring());
        int sign = 1;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!(rest >> j & 1u)) continue;
            const Poly& a = x.at(i, j);
            if (!a.is_zero()) {
                Poly term = a * self(self, rest & ~(std::uint64_t{1} << j));
                if (sign > 0)
                    sum += term;
                else
                    sum -= term;
            }
            sign = -sign;
        }
        memo.emplace(mask, sum);
        return sum;
    };
    return rec(rec, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

/// Pfaffians of all principal r x r submatrices, subsets in lexicographic order.
template <CoefficientField F>
std::vector<Polynomial<F>> pfaffian_ideal_gens(const PolyMatrix<F>& x, std::size_t r) {
    if (r % 2) throw InvalidArgument("pfaffian ideal needs an even size");
    if (!x.is_alternating()) throw InvalidArgument("pfaffian ideal needs an alternating matrix");
    std::vector<Polynomial<F>> out;
    if (r < 2 || r > x.rows()) return out;
    for (const auto& s : subsets(x.rows(), r)) out.push_back(pfaffian(submatrix(x, s, s)));
    return out;
}

}  // namespace nullcone
