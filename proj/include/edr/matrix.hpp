#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "edr/errors.hpp"
#include "edr/rings.hpp"

namespace edr {

/// Dense row-major matrix over one exact coefficient ring.
template <RingElement T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t m, std::size_t n) : m_(m), n_(n), e_(m * n, T{}) {}
    Matrix(std::size_t m, std::size_t n, std::vector<T> entries)
        : m_(m), n_(n), e_(std::move(entries)) {
        if (e_.size() != m * n) throw DimensionError("matrix entry count != m*n");
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        m_ = rows.size();
        n_ = m_ ? rows.begin()->size() : 0;
        e_.reserve(m_ * n_);
        for (const auto& r : rows) {
            if (r.size() != n_) throw DimensionError("ragged initializer");
            for (const auto& x : r) e_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix I(n, n);
        for (std::size_t i = 0; i < n; ++i) I(i, i) = T(1);
        return I;
    }

    std::size_t rows() const { return m_; }
    std::size_t cols() const { return n_; }

    const T& operator()(std::size_t i, std::size_t j) const {
        check(i, j);
        return e_[i * n_ + j];
    }
    T& operator()(std::size_t i, std::size_t j) {
        check(i, j);
        return e_[i * n_ + j];
    }

    const std::vector<T>& entries() const { return e_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.m_ != b.m_ || a.n_ != b.n_) return false;
        for (std::size_t k = 0; k < a.e_.size(); ++k)
            if (!(a.e_[k] == b.e_[k])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix operator-() const {
        Matrix r = *this;
        for (T& x : r.e_) x = -x;
        return r;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.same_shape(b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] += b.e_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.same_shape(b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] -= b.e_[k];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.n_ != b.m_) throw DimensionError("matrix product shape mismatch");
        Matrix r(a.m_, b.n_);
        for (std::size_t i = 0; i < a.m_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                const T& aik = a.e_[i * a.n_ + k];
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.n_; ++j)
                    r.e_[i * r.n_ + j] += aik * b.e_[k * b.n_ + j];
            }
        return r;
    }
    friend Matrix operator*(const T& c, const Matrix& a) {
        Matrix r = a;
        for (T& x : r.e_) x = c * x;
        return r;
    }

    Matrix transpose() const {
        Matrix r(n_, m_);
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r.e_[j * m_ + i] = e_[i * n_ + j];
        return r;
    }

    // In-place elementary operations; the checked public interface around
    // them is apply_elementary below.
    void swap_rows(std::size_t i, std::size_t j) {
        check_row(i); check_row(j);
        if (i == j) return;
        for (std::size_t k = 0; k < n_; ++k) std::swap(e_[i * n_ + k], e_[j * n_ + k]);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        check_col(i); check_col(j);
        if (i == j) return;
        for (std::size_t k = 0; k < m_; ++k) std::swap(e_[k * n_ + i], e_[k * n_ + j]);
    }
    void scale_row(std::size_t i, const T& c) {
        check_row(i);
        for (std::size_t k = 0; k < n_; ++k) e_[i * n_ + k] = c * e_[i * n_ + k];
    }
    void scale_col(std::size_t j, const T& c) {
        check_col(j);
        for (std::size_t k = 0; k < m_; ++k) e_[k * n_ + j] = c * e_[k * n_ + j];
    }
    /// row i += c * row j
    void row_axpy(std::size_t i, std::size_t j, const T& c) {
        check_row(i); check_row(j);
        for (std::size_t k = 0; k < n_; ++k) e_[i * n_ + k] += c * e_[j * n_ + k];
    }
    /// col i += c * col j
    void col_axpy(std::size_t i, std::size_t j, const T& c) {
        check_col(i); check_col(j);
        for (std::size_t k = 0; k < m_; ++k) e_[k * n_ + i] += c * e_[k * n_ + j];
    }
    /// (row i, row j) <- (a*row i + b*row j, c*row i + d*row j)
    void combine_rows(std::size_t i, std::size_t j, const T& a, const T& b, const T& c,
                      const T& d) {
        check_row(i); check_row(j);
        if (i == j) throw DomainError("combine on a single row");
        for (std::size_t k = 0; k < n_; ++k) {
            T ri = e_[i * n_ + k], rj = e_[j * n_ + k];
            e_[i * n_ + k] = a * ri + b * rj;
            e_[j * n_ + k] = c * ri + d * rj;
        }
    }
    void combine_cols(std::size_t i, std::size_t j, const T& a, const T& b, const T& c,
                      const T& d) {
        check_col(i); check_col(j);
        if (i == j) throw DomainError("combine on a single column");
        for (std::size_t k = 0; k < m_; ++k) {
            T ci = e_[k * n_ + i], cj = e_[k * n_ + j];
            e_[k * n_ + i] = a * ci + b * cj;
            e_[k * n_ + j] = c * ci + d * cj;
        }
    }

private:
    std::size_t m_ = 0, n_ = 0;
    std::vector<T> e_;

    void check(std::size_t i, std::size_t j) const {
        if (i >= m_ || j >= n_) throw std::out_of_range("matrix index out of range");
    }
    void check_row(std::size_t i) const {
        if (i >= m_) throw std::out_of_range("row index out of range");
    }
    void check_col(std::size_t j) const {
        if (j >= n_) throw std::out_of_range("column index out of range");
    }
    void same_shape(const Matrix& o) const {
        if (m_ != o.m_ || n_ != o.n_) throw DimensionError("matrix shape mismatch");
    }
};

template <RingElement T>
bool is_zero_matrix(const Matrix<T>& a) {
    for (const T& x : a.entries())
        if (!is_zero(x)) return false;
    return true;
}

/// m x n matrix with s placed along the diagonal (missing entries are zero;
/// excess entries in s are cut by the dimensions).
template <RingElement T>
Matrix<T> diag_mx_seq(std::size_t m, std::size_t n, const std::vector<T>& s) {
    Matrix<T> r(m, n);
    std::size_t k = std::min(std::min(m, n), s.size());
    for (std::size_t i = 0; i < k; ++i) r(i, i) = s[i];
    return r;
}

template <RingElement T>
Matrix<T> const_mx(std::size_t m, std::size_t n, const T& v) {
    Matrix<T> r(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = v;
    return r;
}

template <RingElement T, class F>
auto map_entries(const Matrix<T>& a, F&& f) -> Matrix<decltype(f(a(0, 0)))> {
    using U = decltype(f(a(0, 0)));
    Matrix<U> r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = f(a(i, j));
    return r;
}

// Block decomposition at the split point (r, c) and its inverse block_mx.

template <RingElement T>
Matrix<T> top_left(const Matrix<T>& a, std::size_t r, std::size_t c) {
    if (r > a.rows() || c > a.cols()) throw DimensionError("block split out of range");
    Matrix<T> out(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) out(i, j) = a(i, j);
    return out;
}
template <RingElement T>
Matrix<T> top_right(const Matrix<T>& a, std::size_t r, std::size_t c) {
    if (r > a.rows() || c > a.cols()) throw DimensionError("block split out of range");
    Matrix<T> out(r, a.cols() - c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = c; j < a.cols(); ++j) out(i, j - c) = a(i, j);
    return out;
}
template <RingElement T>
Matrix<T> bottom_left(const Matrix<T>& a, std::size_t r, std::size_t c) {
    if (r > a.rows() || c > a.cols()) throw DimensionError("block split out of range");
    Matrix<T> out(a.rows() - r, c);
    for (std::size_t i = r; i < a.rows(); ++i)
        for (std::size_t j = 0; j < c; ++j) out(i - r, j) = a(i, j);
    return out;
}
template <RingElement T>
Matrix<T> bottom_right(const Matrix<T>& a, std::size_t r, std::size_t c) {
    if (r > a.rows() || c > a.cols()) throw DimensionError("block split out of range");
    Matrix<T> out(a.rows() - r, a.cols() - c);
    for (std::size_t i = r; i < a.rows(); ++i)
        for (std::size_t j = c; j < a.cols(); ++j) out(i - r, j - c) = a(i, j);
    return out;
}

template <RingElement T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) throw DimensionError("hstack row mismatch");
    Matrix<T> r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

template <RingElement T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.cols()) throw DimensionError("vstack column mismatch");
    Matrix<T> r(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
    return r;
}

template <RingElement T>
Matrix<T> block_mx(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c,
                   const Matrix<T>& d) {
    return vstack(hstack(a, b), hstack(c, d));
}

/// block_mx(I_1, 0, 0, a): embeds a as the trailing block.
template <RingElement T>
Matrix<T> lift0_mx(const Matrix<T>& a) {
    Matrix<T> r(a.rows() + 1, a.cols() + 1);
    r(0, 0) = T(1);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i + 1, j + 1) = a(i, j);
    return r;
}

// ---------------------------------------------------------------------------
// Elementary row/column transforms behind a checked interface.
// ---------------------------------------------------------------------------

enum class Side { Row, Col };

template <RingElement T>
struct ElSwap {
    std::size_t i, j;
};
template <RingElement T>
struct ElScale {
    std::size_t i;
    T u;  // must be a unit
};
template <RingElement T>
struct ElAxpy {
    std::size_t i, j;  // line i += c * line j
    T c;
};
template <RingElement T>
struct ElCombine {
    std::size_t i, j;
    T a, b, c, d;  // [[a,b],[c,d]] must have unit determinant
};

template <RingElement T>
using ElementaryOp = std::variant<ElSwap<T>, ElScale<T>, ElAxpy<T>, ElCombine<T>>;

/// Applies one invertible elementary transform, returning the new matrix.
/// Equals multiplication by the corresponding elementary matrix on the
/// stated side.
template <DvdRingElement T>
Matrix<T> apply_elementary(const Matrix<T>& m, const ElementaryOp<T>& op, Side side) {
    Matrix<T> r = m;
    std::visit(
        [&](const auto& o) {
            using Op = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<Op, ElSwap<T>>) {
                side == Side::Row ? r.swap_rows(o.i, o.j) : r.swap_cols(o.i, o.j);
            } else if constexpr (std::is_same_v<Op, ElScale<T>>) {
                if (!is_unit(o.u)) throw DomainError("scale factor is not a unit");
                side == Side::Row ? r.scale_row(o.i, o.u) : r.scale_col(o.i, o.u);
            } else if constexpr (std::is_same_v<Op, ElAxpy<T>>) {
                if (o.i == o.j) throw DomainError("axpy must use two distinct lines");
                side == Side::Row ? r.row_axpy(o.i, o.j, o.c) : r.col_axpy(o.i, o.j, o.c);
            } else {
                if (!is_unit(o.a * o.d - o.b * o.c))
                    throw DomainError("combine determinant is not a unit");
                side == Side::Row ? r.combine_rows(o.i, o.j, o.a, o.b, o.c, o.d)
                                  : r.combine_cols(o.i, o.j, o.a, o.b, o.c, o.d);
            }
        },
        op);
    return r;
}

// ---------------------------------------------------------------------------
// Submatrices, minors, determinants.
// ---------------------------------------------------------------------------

/// A map {0..p-1} -> {0..m-1} selecting rows or columns. Arbitrary maps are
/// allowed; a cached flag records whether the map is strictly increasing.
class IndexMap {
public:
    IndexMap(std::vector<std::size_t> indices, std::size_t target)
        : idx_(std::move(indices)), target_(target) {
        strict_ = true;
        for (std::size_t k = 0; k < idx_.size(); ++k) {
            if (idx_[k] >= target_) throw std::out_of_range("index map out of range");
            if (k > 0 && idx_[k - 1] >= idx_[k]) strict_ = false;
        }
    }

    static IndexMap identity(std::size_t n) {
        std::vector<std::size_t> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = i;
        return IndexMap(std::move(v), n);
    }

    std::size_t size() const { return idx_.size(); }
    std::size_t target() const { return target_; }
    bool strict() const { return strict_; }
    std::size_t operator()(std::size_t k) const { return idx_.at(k); }
    const std::vector<std::size_t>& indices() const { return idx_; }

private:
    std::vector<std::size_t> idx_;
    std::size_t target_;
    bool strict_;
};

template <RingElement T>
Matrix<T> submatrix(const IndexMap& f, const IndexMap& g, const Matrix<T>& m) {
    if (f.target() != m.rows() || g.target() != m.cols())
        throw DimensionError("index map targets do not match the matrix");
    Matrix<T> r(f.size(), g.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) r(i, j) = m(f(i), g(j));
    return r;
}

/// All C(l, k) strictly increasing maps {0..k-1} -> {0..l-1}, lexicographic.
inline std::vector<IndexMap> strict_maps(std::size_t k, std::size_t l) {
    std::vector<IndexMap> out;
    if (k > l) return out;
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    while (true) {
        out.emplace_back(c, l);
        // advance to the next combination
        std::size_t i = k;
        while (i > 0 && c[i - 1] == l - k + i - 1) --i;
        if (i == 0) break;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

namespace detail {

template <DvdRingElement T>
T det_cofactor(const Matrix<T>& m) {
    std::size_t n = m.rows();
    if (n == 0) return T(1);
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    T acc{};
    bool neg = false;
    for (std::size_t j = 0; j < n; ++j) {
        if (!is_zero(m(0, j))) {
            Matrix<T> sub(n - 1, n - 1);
            for (std::size_t i = 1; i < n; ++i) {
                std::size_t jj = 0;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == j) continue;
                    sub(i - 1, jj++) = m(i, k);
                }
            }
            T term = m(0, j) * det_cofactor(sub);
            acc = neg ? acc - term : acc + term;
        }
        neg = !neg;
    }
    return acc;
}

/// Fraction-free Bareiss elimination; the interior divisions are exact over
/// any integral domain (Sylvester identity) and are taken through div_opt.
template <DvdRingElement T>
T det_bareiss(Matrix<T> a) {
    std::size_t n = a.rows();
    T prev = T(1);
    bool neg = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(a(k, k))) {
            std::size_t l = k + 1;
            while (l < n && is_zero(a(l, k))) ++l;
            if (l == n) return T{};
            a.swap_rows(k, l);
            neg = !neg;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = exact_div(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
        prev = a(k, k);
    }
    T d = a(n - 1, n - 1);
    return neg ? -d : d;
}

}  // namespace detail

/// Exact determinant: cofactor expansion up to 4x4, Bareiss beyond.
template <DvdRingElement T>
T determinant(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
    if (m.rows() <= 4) return detail::det_cofactor(m);
    return detail::det_bareiss(m);
}

/// Minor of order f.size(): det of the (f, g)-submatrix.
template <DvdRingElement T>
T minor(const IndexMap& f, const IndexMap& g, const Matrix<T>& m) {
    if (f.size() != g.size()) throw DimensionError("minor needs equal-order maps");
    return determinant(submatrix(f, g, m));
}

}  // namespace edr
