/*
   Copyright 2026 The dtlsum Authors

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

#ifndef DTLSUM_POLYMATRIX_HPP
#define DTLSUM_POLYMATRIX_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "dtlsum/errors.hpp"
#include "dtlsum/log.hpp"
#include "dtlsum/ring.hpp"
#include "dtlsum/symfunc.hpp"

namespace dtlsum {

/// Dense row-major matrix.
template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Matrix out(nr, nc, data_.empty() ? T{} : data_[0]);
        for (std::size_t i = 0; i < nr; ++i) {
            for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
        }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using PolyMatrix = Matrix<LaurentPoly>;

enum class MatrixKind { E_STAIRCASE, EPS_DOUBLED, V_MINUS, W_PLUS, MU, NU_DIFF, LAMBDA_DIFF };

std::string_view to_string(MatrixKind kind);
std::optional<MatrixKind> parse_matrix_kind(std::string_view name);
const std::vector<MatrixKind>& all_matrix_kinds();

/// Side length for L arguments; throws SizeRuleError naming the rule.
std::size_t matrix_size(MatrixKind kind, int L);

template <ExactRing R>
Matrix<typename R::value_type> identity(const R& ring, std::size_t n) {
    Matrix<typename R::value_type> m(n, n, ring.zero());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
    return m;
}

template <ExactRing R>
Matrix<typename R::value_type> mat_mul(const R& ring, const Matrix<typename R::value_type>& a,
                                       const Matrix<typename R::value_type>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not compose");
    Matrix<typename R::value_type> out(a.rows(), b.cols(), ring.zero());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (ring.is_zero(a(i, k))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (!ring.is_zero(b(k, j))) out(i, j) = out(i, j) + a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

/// Builds a determinant matrix from the families of one argument list.
/// Out-of-range family indices give zero entries.
template <ExactRing R>
Matrix<typename R::value_type> build_matrix(Families<R>& f, MatrixKind kind) {
    using T = typename R::value_type;
    const int L = f.size();
    const std::size_t n = matrix_size(kind, L);
    Matrix<T> m(n, n, f.ring().zero());
    auto fill = [&](int base, auto entry) {
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) m(r, c) = entry(base + static_cast<int>(r), base + static_cast<int>(c));
        }
    };
    switch (kind) {
        case MatrixKind::E_STAIRCASE: fill(1, [&](int i, int j) { return f.E(3 * j - 2 * i); }); break;
        case MatrixKind::EPS_DOUBLED: fill(1, [&](int i, int j) { return f.eps(3 * j - 2 * i); }); break;
        case MatrixKind::V_MINUS:
            fill(1, [&](int i, int j) -> T { return f.eps(3 * j - 2 * i) - f.eps(3 * j + 2 * i - 4 * L); });
            break;
        case MatrixKind::W_PLUS:
            fill(L, [&](int i, int j) -> T { return f.eps(3 * j - 2 * i) + f.eps(3 * j + 2 * i - 4 * L); });
            break;
        case MatrixKind::MU:
            if (L % 2 == 0) {
                fill(0, [&](int i, int j) { return f.mu(3 * i - j + 1); });
            } else {
                fill(1, [&](int i, int j) { return f.mu(3 * i - j); });
            }
            break;
        case MatrixKind::NU_DIFF:
            if (L % 2 == 1) {
                fill(0, [&](int i, int j) -> T { return f.nu(3 * i - j + 1) - f.nu(3 * i + j + 3 - L); });
            } else {
                fill(0, [&](int i, int j) -> T { return f.nu(3 * i - j + 2) - f.nu(3 * i + j + 2 - L); });
            }
            break;
        case MatrixKind::LAMBDA_DIFF:
            fill(1, [&](int i, int j) -> T { return f.lam(3 * i - j) - f.lam(3 * i + j); });
            break;
    }
    return m;
}

template <ExactRing R>
Matrix<typename R::value_type> build_matrix(const R& ring, MatrixKind kind, Args<R> args) {
    Families<R> f(ring, {args.begin(), args.end()});
    return build_matrix(f, kind);
}

PolyMatrix build_matrix(MatrixKind kind, const VarSetPtr& vars);

enum class DetAlgo { AUTO, COFACTOR, BAREISS, GAUSS };

std::string_view to_string(DetAlgo algo);

namespace detail {

template <ExactRing R>
typename R::value_type det_cofactor(const R& ring, const Matrix<typename R::value_type>& m) {
    using T = typename R::value_type;
    const std::size_t n = m.rows();
    if (n > 24) throw std::invalid_argument("cofactor expansion limited to 24x24");
    // minors over the trailing columns, keyed by the set of rows already used
    std::unordered_map<std::uint32_t, T> memo;
    auto rec = [&](auto&& self, std::size_t col, std::uint32_t used) -> T {
        if (col == n) return ring.one();
        auto hit = memo.find(used);
        if (hit != memo.end()) return hit->second;
        T s = ring.zero();
        int pos = 0;
        for (std::size_t r = 0; r < n; ++r) {
            if (used & (1u << r)) continue;
            if (!ring.is_zero(m(r, col))) {
                T minor = self(self, col + 1, used | (1u << r));
                if (!ring.is_zero(minor)) {
                    T t = m(r, col) * minor;
                    s = (pos % 2 == 0) ? s + t : s - t;
                }
            }
            ++pos;
        }
        return memo.emplace(used, std::move(s)).first->second;
    };
    return rec(rec, 0, 0);
}

template <ExactRing R>
typename R::value_type det_bareiss(const R& ring, Matrix<typename R::value_type> m) {
    using T = typename R::value_type;
    const std::size_t n = m.rows();
    if (n == 0) return ring.one();
    bool negate = false;
    T prev = ring.one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (ring.is_zero(m(k, k))) {
            std::size_t p = k + 1;
            while (p < n && ring.is_zero(m(p, k))) ++p;
            if (p == n) return ring.zero();
            m.swap_rows(k, p);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = ring.divide(num, prev);
            }
            m(i, k) = ring.zero();
        }
        prev = m(k, k);
    }
    T d = m(n - 1, n - 1);
    return negate ? -d : d;
}

template <ExactRing R>
typename R::value_type det_gauss(const R& ring, Matrix<typename R::value_type> m) {
    using T = typename R::value_type;
    const std::size_t n = m.rows();
    T d = ring.one();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && ring.is_zero(m(p, k))) ++p;
        if (p == n) return ring.zero();
        if (p != k) {
            m.swap_rows(k, p);
            d = -d;
        }
        d = d * m(k, k);
        T inv = ring.divide(ring.one(), m(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (ring.is_zero(m(i, k))) continue;
            T f = m(i, k) * inv;
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = m(i, j) - f * m(k, j);
        }
    }
    return d;
}

// Bareiss over Z[w] after clearing row denominators; no gcds on the way.
Cyclo det_cyclo_integral(const Matrix<Cyclo>& m);

}  // namespace detail

/// Exact determinant.
///
/// AUTO picks BAREISS over the field, which runs on cleared-denominator
/// entries in Z[w]; over polynomials, memoized COFACTOR up to
/// kCofactorAutoLimit (Bareiss intermediates grow much faster there) and
/// BAREISS above. GAUSS needs every nonzero element to be invertible. A
/// divisibility failure inside BAREISS falls back to COFACTOR with a log note.
inline constexpr std::size_t kCofactorAutoLimit = 8;

template <ExactRing R>
typename R::value_type det(const R& ring, const Matrix<typename R::value_type>& m, DetAlgo algo = DetAlgo::AUTO) {
    if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
    constexpr bool field = std::is_same_v<R, CycloRing>;
    if (algo == DetAlgo::AUTO) {
        if (field) {
            algo = DetAlgo::BAREISS;
        } else {
            algo = m.rows() <= kCofactorAutoLimit ? DetAlgo::COFACTOR : DetAlgo::BAREISS;
        }
    }
    switch (algo) {
        case DetAlgo::COFACTOR: return detail::det_cofactor(ring, m);
        case DetAlgo::GAUSS:
            if constexpr (field) {
                return detail::det_gauss(ring, m);
            } else {
                throw std::invalid_argument("GAUSS determinant needs a field");
            }
        case DetAlgo::BAREISS:
        default:
            if constexpr (field) return detail::det_cyclo_integral(m);
            try {
                return detail::det_bareiss(ring, m);
            } catch (const DivisibilityFailure& e) {
                log_note(std::string("Bareiss step not exact, falling back to cofactor expansion: ") + e.what());
                return detail::det_cofactor(ring, m);
            }
    }
}

LaurentPoly det(const PolyMatrix& m, DetAlgo algo = DetAlgo::BAREISS);

template <class T>
struct CentroBlocks {
    Matrix<T> minus;  // upper-left block of T M T^-1
    Matrix<T> plus;   // lower-right block
    std::size_t residue = 0;  // nonzero entries outside the two blocks
};

/// T M T^-1 with T = [[-I, J], [I, J]], T^-1 = 1/2 [[-I, I], [J, J]].
template <ExactRing R>
CentroBlocks<typename R::value_type> centro_blocks(const R& ring, const Matrix<typename R::value_type>& m) {
    using T = typename R::value_type;
    if (!m.square() || m.rows() % 2 != 0) throw SizeRuleError("centro_blocks needs an even square matrix");
    const std::size_t n = m.rows(), k = n / 2;
    Matrix<T> t(n, n, ring.zero()), ti(n, n, ring.zero());
    const T half = ring.constant(Cyclo(Rational(1, 2)));
    for (std::size_t i = 0; i < k; ++i) {
        t(i, i) = ring.constant(Cyclo(-1));
        t(i, n - 1 - i) = ring.one();  // J in the upper-right block
        t(k + i, i) = ring.one();
        t(k + i, n - 1 - i) = ring.one();
        ti(i, i) = -half;
        ti(i, k + i) = half;
        ti(k + i, k - 1 - i) = half;  // J in the lower-left block
        ti(k + i, n - 1 - i) = half;
    }
    Matrix<T> full = mat_mul(ring, mat_mul(ring, t, m), ti);
    CentroBlocks<T> out{full.block(0, 0, k, k), full.block(k, k, k, k), 0};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if ((i < k) != (j < k) && !ring.is_zero(full(i, j))) ++out.residue;
        }
    }
    return out;
}

CentroBlocks<LaurentPoly> centro_blocks(const PolyMatrix& m);

/// A: lower triangular, A(k, i) = z^(6(k - i)).
template <ExactRing R>
Matrix<typename R::value_type> reduce_left(const R& ring, std::size_t n, const typename R::value_type& z) {
    Matrix<typename R::value_type> a(n, n, ring.zero());
    auto z6 = z * z * z * z * z * z;
    for (std::size_t k = 0; k < n; ++k) {
        auto p = ring.one();
        for (std::size_t i = k + 1; i-- > 0;) {
            a(k, i) = p;
            p = p * z6;
        }
    }
    return a;
}

/// B: unit diagonal, -z^2 on the subdiagonal.
template <ExactRing R>
Matrix<typename R::value_type> reduce_right(const R& ring, std::size_t n, const typename R::value_type& z) {
    Matrix<typename R::value_type> b = identity(ring, n);
    for (std::size_t j = 0; j + 1 < n; ++j) b(j + 1, j) = -(z * z);
    return b;
}

template <class T>
struct ReducedMatrix {
    Matrix<T> block;          // leading (n-1) x (n-1) block of A M B
    T corner;                 // entry (n-1, n-1)
    std::vector<T> last_row;  // the rest of the last row
    std::size_t residue = 0;  // nonzero entries in last_row
};

/// A M B for the MU matrix after the (-z, z) specialization.
template <ExactRing R>
ReducedMatrix<typename R::value_type> row_column_reduce(const R& ring, const Matrix<typename R::value_type>& m,
                                                        const typename R::value_type& z) {
    if (!m.square() || m.rows() == 0) throw std::invalid_argument("row_column_reduce needs a nonempty square matrix");
    const std::size_t n = m.rows();
    auto full = mat_mul(ring, mat_mul(ring, reduce_left(ring, n, z), m), reduce_right(ring, n, z));
    ReducedMatrix<typename R::value_type> out{full.block(0, 0, n - 1, n - 1), full(n - 1, n - 1), {}, 0};
    for (std::size_t j = 0; j + 1 < n; ++j) {
        out.last_row.push_back(full(n - 1, j));
        if (!ring.is_zero(full(n - 1, j))) ++out.residue;
    }
    return out;
}

ReducedMatrix<LaurentPoly> row_column_reduce(const PolyMatrix& m, std::string_view z);

/// Applies one substitution to every entry.
PolyMatrix substitute(const PolyMatrix& m, std::string_view var, const SubstImage& image);

}  // namespace dtlsum

#endif  // DTLSUM_POLYMATRIX_HPP
