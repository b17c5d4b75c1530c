#pragma once

#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

#include "edr/errors.hpp"
#include "edr/matrix.hpp"
#include "edr/rings.hpp"
#include "edr/smith.hpp"

namespace edr {

/// Witnesses p, q of the Kaplansky condition for a triple with unit gcd:
/// gcd(p*a, p*b + q*c) is a unit.
///
/// Realized through gdco: for nonzero non-unit a take p = 1 and q = the
/// greatest divisor of a coprime to b; for a = 0 the Bezout coefficients of
/// (b, c) already work, and for unit a the pair (1, 0) does.
template <GdcoCapable T>
std::pair<T, T> kap(const T& a, const T& b, const T& c) {
    if (!is_unit(gcd(a, gcd(b, c))))
        throw DomainError("kap: gcd(a, b, c) must be a unit");
    if (is_unit(a)) return {T(1), T{}};
    if (is_zero(a)) {
        ExtGcd<T> e = egcdr(b, c);
        return {e.u, e.v};
    }
    return {T(1), gdco(b, a)};
}

/// The coprimality witnesses x1, y1 with x1*p*a + y1*(p*b + q*c) = 1,
/// obtained by one extended-gcd call on the coprime pair produced by kap.
template <GdcoCapable T>
std::pair<T, T> kapW(const T& a, const T& b, const T& c) {
    auto [p, q] = kap(a, b, c);
    ExtGcd<T> e = egcdr(p * a, p * b + q * c);
    require_internal(is_unit(e.g), "kapW: kap produced a non-coprime pair");
    T ginv = exact_div(T(1), e.g);
    return {e.u * ginv, e.v * ginv};
}

/// Smith normal form of a 2x2 matrix through the Kaplansky condition.
///
/// One Bezout row step clears the (1,0) entry; egcdr3 extracts the content d
/// of the remaining triangle; kap/kapW then produce the explicit transition
/// matrices [[p,q],[-y,x]] and [[x1, pb+qc],[y1, -pa]] that send the
/// normalized triangle to diag(1, -ac), so the factors are d and -d*a*c.
template <GdcoCapable T>
SmithResult<T> kap_smith2x2(const Matrix<T>& m) {
    if (m.rows() != 2 || m.cols() != 2) throw DimensionError("kap_smith2x2 needs a 2x2 matrix");
    const T m00 = m(0, 0), m10 = m(1, 0);
    Matrix<T> tri = bezout_step(m00, m10, m, 1, Side::Row);
    Matrix<T> p0 = bezout_mx(m00, m10, 2, 1);
    ExtGcd3<T> e = egcdr3(tri(0, 0), tri(0, 1), tri(1, 1));
    if (is_zero(e.g))
        return finalize_smith(std::move(p0), std::vector<T>{}, Matrix<T>::identity(2));
    const T a = e.a1, b = e.b1, c = e.c1;  // normalized triangle, gcd(a, b, c) = 1
    auto [p, q] = kap(a, b, c);
    auto [x1, y1] = kapW(a, b, c);
    T x = a * x1 + y1 * b;
    T y = c * y1;
    Matrix<T> pw = Matrix<T>{{p, q}, {-y, x}} * p0;
    Matrix<T> qw{{x1, p * b + q * c}, {y1, -(p * a)}};
    std::vector<T> d{e.g, e.g * (-(a * c))};
    return finalize_smith(std::move(pw), std::move(d), std::move(qw));
}

namespace detail {

template <RingElement T>
bool pivot_divides_all(const T& a, const Matrix<T>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (i == 0 && j == 0) continue;
            if (!divides(a, m(i, j))) return false;
        }
    return true;
}

/// One level of the oracle-driven reduction; returns raw diagonal entries.
///
/// Per round: (A) Bezout row steps clear column 0; if the pivot now divides
/// every entry the first row is cleared exactly and the level recurses on
/// the trailing block. Otherwise an offending interior row is first added
/// to row 0 if needed, and (B) the residual first row is folded into the
/// pivot through embedded 2x2 oracle gates on rows/columns {0, j} (plain
/// column steps for columns beyond the row count). Every extra round must
/// strictly shrink the pivot under divisibility, which is asserted, so on a
/// constructive PID the loop terminates and on a broken instance it faults
/// instead of spinning.
template <BezoutDomainElement T, class Oracle>
std::tuple<Matrix<T>, std::vector<T>, Matrix<T>> smithmxn_rec(Oracle& smith2x2,
                                                              const Matrix<T>& m0) {
    const std::size_t rows = m0.rows(), cols = m0.cols();
    if (rows == 0 || cols == 0)
        return {Matrix<T>::identity(rows), {}, Matrix<T>::identity(cols)};
    if (rows == 2 && cols == 2) {
        SmithResult<T> r = smith2x2(m0);
        return {std::move(r.P), std::move(r.d), std::move(r.Q)};
    }
    Matrix<T> m = m0;
    Matrix<T> p = Matrix<T>::identity(rows);
    Matrix<T> q = Matrix<T>::identity(cols);
    if (is_zero_matrix(m)) return {std::move(p), {}, std::move(q)};

    T prev_pivot{};
    bool first_round = true;
    while (true) {
        // Phase A: clear column 0.
        for (std::size_t i = 1; i < rows; ++i)
            if (!is_zero(m(i, 0))) {
                const T a = m(0, 0), b = m(i, 0);
                bezout_rows_inplace(a, b, m, i);
                bezout_rows_inplace(a, b, p, i);
            }
        const T a = m(0, 0);
        if (!is_zero(a) && pivot_divides_all(a, m)) {
            for (std::size_t j = 1; j < cols; ++j) {
                T c = exact_div(m(0, j), a);
                if (!is_zero(c)) {
                    m.col_axpy(j, 0, -c);
                    q.col_axpy(j, 0, -c);
                }
            }
            auto [p2, d2, q2] = smithmxn_rec(smith2x2, bottom_right(m, 1, 1));
            std::vector<T> d;
            d.reserve(1 + d2.size());
            d.push_back(a);
            for (const T& x : d2) d.push_back(x);
            return {lift0_mx(p2) * p, std::move(d), q * lift0_mx(q2)};
        }
        if (!first_round) {
            if (!strictly_divides(canon(a), prev_pivot))
                internal_violation("smithmxn: pivot did not strictly improve");
        }
        first_round = false;
        prev_pivot = canon(a);

        // If row 0 is already divisible by the pivot the offender is in the
        // interior; import its row so the gates below can reach it.
        bool row0_divisible = true;
        for (std::size_t j = 1; j < cols; ++j)
            if (!divides(a, m(0, j))) row0_divisible = false;
        if (row0_divisible) {
            for (std::size_t i = 1; i < rows; ++i) {
                bool bad = false;
                for (std::size_t j = 1; j < cols; ++j)
                    if (!divides(a, m(i, j))) bad = true;
                if (bad) {
                    m.row_axpy(0, i, T(1));
                    p.row_axpy(0, i, T(1));
                    break;
                }
            }
        }
        // Phase B: fold the residual first row into the pivot.
        for (std::size_t j = 1; j < cols; ++j) {
            if (is_zero(m(0, j))) continue;
            if (j < rows) {
                Matrix<T> sub{{m(0, 0), m(0, j)}, {m(j, 0), m(j, j)}};
                SmithResult<T> g = smith2x2(sub);
                m.combine_rows(0, j, g.P(0, 0), g.P(0, 1), g.P(1, 0), g.P(1, 1));
                p.combine_rows(0, j, g.P(0, 0), g.P(0, 1), g.P(1, 0), g.P(1, 1));
                m.combine_cols(0, j, g.Q(0, 0), g.Q(1, 0), g.Q(0, 1), g.Q(1, 1));
                q.combine_cols(0, j, g.Q(0, 0), g.Q(1, 0), g.Q(0, 1), g.Q(1, 1));
            } else {
                const T piv = m(0, 0), b = m(0, j);
                bezout_cols_inplace(piv, b, m, j);
                bezout_cols_inplace(piv, b, q, j);
            }
        }
    }
}

}  // namespace detail

/// Smith normal form of an arbitrary m x n matrix from a 2x2 routine, the
/// reduction behind the Kaplansky route. After the recursive reduction a
/// fixed bubble network of k(k-1)/2 adjacent diagonal gates (each gate one
/// 2x2 oracle call) enforces the divisibility chain.
template <BezoutDomainElement T, class Oracle>
SmithResult<T> smithmxn(Oracle&& smith2x2, const Matrix<T>& m) {
    auto [p, d, q] = detail::smithmxn_rec(smith2x2, m);
    const std::size_t k = d.size();
    if (k >= 2) {
        for (std::size_t pass = 0; pass + 1 < k; ++pass) {
            for (std::size_t i = 0; i + 2 + pass <= k; ++i) {
                Matrix<T> gate{{d[i], T{}}, {T{}, d[i + 1]}};
                SmithResult<T> g = smith2x2(gate);
                require_internal(g.d.size() == 2, "smithmxn: chain gate lost a factor");
                p.combine_rows(i, i + 1, g.P(0, 0), g.P(0, 1), g.P(1, 0), g.P(1, 1));
                q.combine_cols(i, i + 1, g.Q(0, 0), g.Q(1, 0), g.Q(0, 1), g.Q(1, 1));
                d[i] = g.d[0];
                d[i + 1] = g.d[1];
            }
        }
        for (std::size_t i = 0; i + 1 < k; ++i)
            require_internal(divides(d[i], d[i + 1]), "smithmxn: chain fix failed");
    }
    return finalize_smith(std::move(p), std::move(d), std::move(q));
}

/// Factorization b = b1 * b2 with b1 coprime to a and b2 | a^n, the
/// element-wise engine behind Krull dimension <= 1.
template <RingElement T>
struct Krull1Factorization {
    std::size_t n = 1;
    T b1, b2;
};

template <GdcoCapable T>
Krull1Factorization<T> krull1_factor(const T& a, const T& b) {
    if (is_zero(b)) {
        if (is_zero(a)) return {1, T(1), T{}};
        if (is_unit(a)) return {1, T{}, T(1)};
        throw DomainError("krull1_factor: b = 0 admits no factorization for this a");
    }
    T b1 = gdco(a, b);
    T b2 = exact_div(b, b1);
    std::size_t cap = exponent_search_cap(b2);
    std::size_t n = 0;
    T pw = T(1);
    while (!divides(b2, pw)) {
        ++n;
        pw = pw * a;
        require_internal(n <= cap, "krull1_factor: exponent cap exceeded");
    }
    if (n == 0) n = 1;  // the spec of the factorization wants a positive exponent
    return {n, std::move(b1), std::move(b2)};
}

/// The adequate witness r for (a, b): realized by gdco, whose spec is
/// equivalent to adequacy.
template <GdcoCapable T>
T adequate_of_gdco(const T& a, const T& b) {
    return gdco(a, b);
}

// ---------------------------------------------------------------------------
// Strategy front-end.
// ---------------------------------------------------------------------------

enum class SmithStrategy { Euclidean, Pid, Kaplansky };

inline const char* to_string(SmithStrategy s) {
    switch (s) {
        case SmithStrategy::Euclidean: return "euclidean";
        case SmithStrategy::Pid: return "pid";
        case SmithStrategy::Kaplansky: return "kaplansky";
    }
    return "?";
}

template <BezoutDomainElement T>
constexpr SmithStrategy default_smith_strategy() {
    if constexpr (EuclideanDomainElement<T>)
        return SmithStrategy::Euclidean;
    else
        return SmithStrategy::Kaplansky;
}

/// Smith normal form with an explicit algorithm choice. A strategy the
/// ring's capabilities cannot support raises CapabilityError.
template <BezoutDomainElement T>
SmithResult<T> smith(const Matrix<T>& m, SmithStrategy s = default_smith_strategy<T>()) {
    switch (s) {
        case SmithStrategy::Euclidean:
            if constexpr (EuclideanDomainElement<T>)
                return smith_euclidean(m);
            else
                throw CapabilityError("smith: ring is not Euclidean");
        case SmithStrategy::Pid:
            if constexpr (PidElement<T>)
                return smith_pid(m);
            else
                throw CapabilityError("smith: ring is not a constructive PID");
        case SmithStrategy::Kaplansky:
            if constexpr (GdcoCapable<T>)
                return smithmxn([](const Matrix<T>& a) { return kap_smith2x2(a); }, m);
            else
                throw CapabilityError("smith: ring has no gdco operation");
    }
    throw CapabilityError("smith: unknown strategy");
}

/// gcd through the Smith normal form of the 1x2 matrix [a b]; cross-checks
/// the ring gcd.
template <BezoutDomainElement T>
T gcd_via_smith(const T& a, const T& b) {
    Matrix<T> row(1, 2);
    row(0, 0) = a;
    row(0, 1) = b;
    SmithResult<T> r = smith(row);
    return r.d.empty() ? T{} : r.d.front();
}

}  // namespace edr
