#pragma once

#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

#include "edr/errors.hpp"
#include "edr/matrix.hpp"
#include "edr/rings.hpp"

namespace edr {

/// Transition matrices and the nonzero invariant factors: P*M*Q equals
/// diag_mx_seq(m, n, d), P and Q have unit determinant, every d[i] is
/// nonzero and canonical, and d[i] | d[i+1].
template <RingElement T>
struct SmithResult {
    Matrix<T> P;
    std::vector<T> d;
    Matrix<T> Q;
};

/// Result triple of improve_pivot: P*M*Q = M' with M'(0,0) dividing every
/// entry of M' and the whole first column of M' equal to M'(0,0).
template <RingElement T>
struct PivotReport {
    Matrix<T> P;
    Matrix<T> M;
    Matrix<T> Q;
};

/// The E_Bezout elementary matrix: identity except for rows 0 and k, which
/// hold the egcdr(a, b) coefficients u, v, -b1, a1. Its determinant is
/// u*a1 + v*b1 = 1.
template <BezoutDomainElement T>
Matrix<T> bezout_mx(const T& a, const T& b, std::size_t n, std::size_t k) {
    if (k == 0 || k >= n) throw std::out_of_range("bezout_mx: k must satisfy 0 < k < n");
    ExtGcd<T> e = egcdr(a, b);
    Matrix<T> r = Matrix<T>::identity(n);
    r(0, 0) = e.u;
    r(0, k) = e.v;
    r(k, 0) = -e.b1;
    r(k, k) = e.a1;
    return r;
}

/// One Bezout elementary step mixing line 0 with line k, with coefficients
/// from egcdr(a, b). On the row side this equals bezout_mx(a, b, m, k) * M;
/// the column side acts on the transpose.
template <BezoutDomainElement T>
Matrix<T> bezout_step(const T& a, const T& b, Matrix<T> m, std::size_t k, Side side) {
    ExtGcd<T> e = egcdr(a, b);
    if (side == Side::Row) {
        if (k == 0 || k >= m.rows()) throw std::out_of_range("bezout_step: row index");
        m.combine_rows(0, k, e.u, e.v, -e.b1, e.a1);
    } else {
        if (k == 0 || k >= m.cols()) throw std::out_of_range("bezout_step: column index");
        m.combine_cols(0, k, e.u, e.v, -e.b1, e.a1);
    }
    return m;
}

enum class PivotStrategy { Fuel, WellFounded };

namespace detail {

template <BezoutDomainElement T>
void bezout_rows_inplace(const T& a, const T& b, Matrix<T>& m, std::size_t k) {
    ExtGcd<T> e = egcdr(a, b);
    m.combine_rows(0, k, e.u, e.v, -e.b1, e.a1);
}
template <BezoutDomainElement T>
void bezout_cols_inplace(const T& a, const T& b, Matrix<T>& m, std::size_t k) {
    ExtGcd<T> e = egcdr(a, b);
    m.combine_cols(0, k, e.u, e.v, -e.b1, e.a1);
}

/// Pivot improvement loop shared by the fuel-bounded Euclidean variant and
/// the well-founded PID variant.
///
/// Each round searches column 0 for an entry the pivot does not divide
/// (find1) and folds it in with a Bezout row step. Once the pivot divides
/// the whole column, the column is made constantly equal to the pivot by
/// row combinations; then the rest of the matrix is searched (find2), the
/// offending row is swapped to the top (the pivot survives, the column
/// being constant) and a Bezout column step folds the entry in.
///
/// With fuel, the loop is capped at enorm(M(0,0)) + 1 improving steps and
/// exceeding the cap is a hard internal error. Without fuel, every
/// improving step must strictly shrink the pivot under divisibility, which
/// is asserted; on a constructive PID that descent cannot be infinite.
template <BezoutDomainElement T>
PivotReport<T> improve_pivot_loop(Matrix<T> m, bool use_fuel) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0 || is_zero(m(0, 0)))
        throw DomainError("improve_pivot: M(0,0) must be nonzero");
    Matrix<T> p = Matrix<T>::identity(rows);
    Matrix<T> q = Matrix<T>::identity(cols);

    Int fuel{0};
    if constexpr (EuclideanBasis<T>) {
        if (use_fuel) fuel = enorm(m(0, 0)) + Int(1);
    }
    Int steps{0};
    auto count_step = [&] {
        steps += Int(1);
        if (use_fuel && steps > fuel)
            internal_violation("improve_pivot: fuel exhausted (broken ring instance)");
    };
    auto check_descent = [&](const T& before) {
        if (!use_fuel && !strictly_divides(m(0, 0), before))
            internal_violation("improve_pivot: pivot did not strictly divide its predecessor");
    };

    while (true) {
        const T a = m(0, 0);
        // find1: column 0
        std::size_t bad_row = 0;
        for (std::size_t i = 1; i < rows; ++i)
            if (!divides(a, m(i, 0))) {
                bad_row = i;
                break;
            }
        if (bad_row != 0) {
            const T b = m(bad_row, 0);
            bezout_rows_inplace(a, b, m, bad_row);
            bezout_rows_inplace(a, b, p, bad_row);
            count_step();
            check_descent(a);
            continue;
        }
        // Column 0 is divisible by the pivot: make it constantly a by adding
        // (1 - M(i,0)/a) times row 0 to each row below.
        for (std::size_t i = 1; i < rows; ++i) {
            T c = T(1) - exact_div(m(i, 0), a);
            if (!is_zero(c)) {
                m.row_axpy(i, 0, c);
                p.row_axpy(i, 0, c);
            }
        }
        // find2: the whole matrix (column 0 is now all a)
        bool found = false;
        std::size_t fi = 0, fj = 0;
        for (std::size_t i = 0; i < rows && !found; ++i)
            for (std::size_t j = 1; j < cols && !found; ++j)
                if (!divides(a, m(i, j))) {
                    fi = i;
                    fj = j;
                    found = true;
                }
        if (!found) return {std::move(p), std::move(m), std::move(q)};
        m.swap_rows(0, fi);
        p.swap_rows(0, fi);
        const T b = m(0, fj);
        bezout_cols_inplace(a, b, m, fj);
        bezout_cols_inplace(a, b, q, fj);
        count_step();
        check_descent(a);
    }
}

}  // namespace detail

/// Pivot improvement at (0,0). Requires M(0,0) != 0. The fuel strategy needs
/// a Euclidean ring (the fuel is the norm of the pivot); the well-founded
/// strategy needs a constructive PID.
template <BezoutDomainElement T>
PivotReport<T> improve_pivot(const Matrix<T>& m, PivotStrategy strategy) {
    if (strategy == PivotStrategy::Fuel) {
        if constexpr (EuclideanDomainElement<T>)
            return detail::improve_pivot_loop(m, true);
        else
            throw CapabilityError("improve_pivot: fuel strategy needs a Euclidean ring");
    } else {
        if constexpr (PidElement<T>)
            return detail::improve_pivot_loop(m, false);
        else
            throw CapabilityError("improve_pivot: well-founded strategy needs a constructive PID");
    }
}

/// Canonicalize a raw (P, d, Q) triple: strip trailing zero factors and
/// scale the rows of P so every invariant factor is the canonical associate.
template <DvdRingElement T>
SmithResult<T> finalize_smith(Matrix<T> p, std::vector<T> d, Matrix<T> q) {
    while (!d.empty() && is_zero(d.back())) d.pop_back();
    for (const T& x : d) require_internal(!is_zero(x), "non-trailing zero invariant factor");
    for (std::size_t i = 0; i < d.size(); ++i) {
        T w = normalizing_unit(d[i]);
        if (!(w == T(1))) {
            p.scale_row(i, w);
            d[i] = w * d[i];
        }
    }
    return {std::move(p), std::move(d), std::move(q)};
}

namespace detail {

/// The Smith recursion: move a pivot to (0,0), improve it until it divides
/// everything, clear its row and column, divide the trailing block by it and
/// recurse. The returned factors are g1, g1*g2, ..., as products of the
/// successive pivots.
template <BezoutDomainElement T, class Improve>
std::tuple<Matrix<T>, std::vector<T>, Matrix<T>> smith_rec(const Matrix<T>& m0,
                                                           Improve&& improve) {
    const std::size_t rows = m0.rows(), cols = m0.cols();
    auto trivial = [&] {
        return std::tuple<Matrix<T>, std::vector<T>, Matrix<T>>{
            Matrix<T>::identity(rows), {}, Matrix<T>::identity(cols)};
    };
    if (rows == 0 || cols == 0) return trivial();
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = 0; i < rows && pi == rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (!is_zero(m0(i, j))) {
                pi = i;
                pj = j;
                break;
            }
    if (pi == rows) return trivial();  // zero matrix: empty factor list

    Matrix<T> m1 = m0;
    m1.swap_rows(0, pi);
    m1.swap_cols(0, pj);
    PivotReport<T> rep = improve(std::move(m1));
    Matrix<T> p = std::move(rep.P);
    Matrix<T> w = std::move(rep.M);
    Matrix<T> q = std::move(rep.Q);
    // Fold the initial pivot moves into the transition matrices.
    p.swap_cols(0, pi);
    q.swap_rows(0, pj);

    const T a = w(0, 0);
    // Column 0 of w is constantly a; subtract row 0 from the others.
    for (std::size_t i = 1; i < rows; ++i) {
        w.row_axpy(i, 0, T(-1));
        p.row_axpy(i, 0, T(-1));
    }
    // Clear the first row with exact column subtractions.
    for (std::size_t j = 1; j < cols; ++j) {
        T c = exact_div(w(0, j), a);
        if (!is_zero(c)) {
            w.col_axpy(j, 0, -c);
            q.col_axpy(j, 0, -c);
        }
    }
    Matrix<T> b = map_entries(bottom_right(w, 1, 1), [&](const T& x) { return exact_div(x, a); });
    auto [p2, d2, q2] = smith_rec(b, improve);
    std::vector<T> d;
    d.reserve(1 + d2.size());
    d.push_back(a);
    for (const T& x : d2) d.push_back(x * a);
    return {lift0_mx(p2) * p, std::move(d), q * lift0_mx(q2)};
}

}  // namespace detail

/// Smith normal form over a Euclidean domain (fuel-bounded pivot loop).
template <EuclideanDomainElement T>
SmithResult<T> smith_euclidean(const Matrix<T>& m) {
    auto [p, d, q] = detail::smith_rec(
        m, [](Matrix<T> a) { return detail::improve_pivot_loop(std::move(a), true); });
    return finalize_smith(std::move(p), std::move(d), std::move(q));
}

/// Smith normal form over a constructive PID (well-founded pivot loop).
template <PidElement T>
SmithResult<T> smith_pid(const Matrix<T>& m) {
    auto [p, d, q] = detail::smith_rec(
        m, [](Matrix<T> a) { return detail::improve_pivot_loop(std::move(a), false); });
    return finalize_smith(std::move(p), std::move(d), std::move(q));
}

// ---------------------------------------------------------------------------
// smith_spec verification and the determinantal-divisor uniqueness oracle.
// ---------------------------------------------------------------------------

struct SmithVerification {
    bool product_equal = false;        // P*M*Q == diag_mx_seq(m, n, d)
    bool divisibility_sorted = false;  // d[i] | d[i+1]
    bool p_unit = false;               // det P is a unit
    bool q_unit = false;               // det Q is a unit
    bool d_nonzero = false;            // no zero factor, length <= min(m, n)
    bool d_canonical = false;          // every factor is its canonical associate

    bool ok() const {
        return product_equal && divisibility_sorted && p_unit && q_unit && d_nonzero &&
               d_canonical;
    }
};

/// Checks every smith_spec clause separately; failures are reported, never
/// thrown.
template <GcdDomainElement T>
SmithVerification verify_smith(const Matrix<T>& m, const SmithResult<T>& r) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (r.P.rows() != rows || r.P.cols() != rows || r.Q.rows() != cols || r.Q.cols() != cols)
        throw DimensionError("verify_smith: transition matrix shapes do not match");
    SmithVerification v;
    v.product_equal = (r.P * m * r.Q == diag_mx_seq(rows, cols, r.d));
    v.divisibility_sorted = true;
    for (std::size_t i = 0; i + 1 < r.d.size(); ++i)
        if (!divides(r.d[i], r.d[i + 1])) v.divisibility_sorted = false;
    v.p_unit = is_unit(determinant(r.P));
    v.q_unit = is_unit(determinant(r.Q));
    v.d_nonzero = r.d.size() <= std::min(rows, cols);
    for (const T& x : r.d)
        if (is_zero(x)) v.d_nonzero = false;
    v.d_canonical = true;
    for (const T& x : r.d)
        if (!(x == canon(x))) v.d_canonical = false;
    return v;
}

/// Canonical gcd of all k x k minors over strictly increasing maps; the
/// empty product convention gives 1 for k = 0.
template <GcdDomainElement T>
T determinantal_divisor(const Matrix<T>& m, std::size_t k) {
    if (k > std::min(m.rows(), m.cols()))
        throw DimensionError("determinantal_divisor: order exceeds dimensions");
    if (k == 0) return T(1);
    T acc{};
    for (const IndexMap& f : strict_maps(k, m.rows()))
        for (const IndexMap& g : strict_maps(k, m.cols())) acc = gcd(acc, minor(f, g, m));
    return canon(acc);
}

/// True iff both lists, zero-padded to the ambient bound, agree entrywise up
/// to associates.
template <DvdRingElement T>
bool compare_invariant_factors(const std::vector<T>& d1, const std::vector<T>& d2,
                               std::size_t bound) {
    std::size_t len = std::max({bound, d1.size(), d2.size()});
    for (std::size_t i = 0; i < len; ++i) {
        T a = i < d1.size() ? d1[i] : T{};
        T b = i < d2.size() ? d2[i] : T{};
        if (!associates(a, b)) return false;
    }
    return true;
}

}  // namespace edr
