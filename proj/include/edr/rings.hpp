#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <utility>

#include "edr/errors.hpp"
#include "edr/fp.hpp"
#include "edr/integers.hpp"
#include "edr/polynomial.hpp"
#include "edr/rational.hpp"

namespace edr {

/// Extended-gcd witness of a Bezout computation:
///   g = u*a + v*b,  a = a1*g,  b = b1*g,  u*a1 + v*b1 = 1,
/// with g the canonical associate of gcd(a, b).
template <class T>
struct ExtGcd {
    T g, u, v, a1, b1;
};

/// Three-element Bezout witness: g = u*a + v*b + w*c with cofactors
/// a = a1*g, b = b1*g, c = c1*g and u*a1 + v*b1 + w*c1 = 1.
template <class T>
struct ExtGcd3 {
    T g, u, v, w, a1, b1, c1;
};

// ---------------------------------------------------------------------------
// Capability hierarchy. Each concept subsumes the previous one, which is the
// inclusion chain Euclidean < PID < Bezout < GCD < explicit divisibility.
// ---------------------------------------------------------------------------

template <class T>
concept RingElement = std::copy_constructible<T> && std::default_initializable<T> &&
    requires(const T a, const T b) {
        { a + b } -> std::convertible_to<T>;
        { a - b } -> std::convertible_to<T>;
        { -a } -> std::convertible_to<T>;
        { a * b } -> std::convertible_to<T>;
        { a == b } -> std::convertible_to<bool>;
        T(1);
    };

/// Explicit divisibility: a decidable divisibility test that also returns
/// the quotient witness, plus a canonical choice of associates.
template <class T>
concept DvdRingElement = RingElement<T> && requires(const T a, const T b) {
    { div_opt(a, b) } -> std::same_as<std::optional<T>>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { is_unit(a) } -> std::convertible_to<bool>;
    { canon(a) } -> std::convertible_to<T>;
    { normalizing_unit(a) } -> std::convertible_to<T>;
};

template <class T>
concept GcdDomainElement = DvdRingElement<T> && requires(const T a, const T b) {
    { gcd(a, b) } -> std::convertible_to<T>;
};

/// Norm and division with remainder; deliberately does not mention egcdr so
/// that the generic extended Euclid below can be constrained on it.
template <class T>
concept EuclideanBasis = GcdDomainElement<T> && requires(const T a, const T b) {
    { enorm(a) } -> std::convertible_to<Int>;
    { ediv(a, b) } -> std::convertible_to<std::pair<T, T>>;
};

/// a divides b.
template <DvdRingElement T>
bool divides(const T& a, const T& b) {
    return div_opt(b, a).has_value();
}

/// a strictly divides b: a | b but b does not divide a.
template <DvdRingElement T>
bool strictly_divides(const T& a, const T& b) {
    return divides(a, b) && !divides(b, a);
}

template <DvdRingElement T>
bool associates(const T& a, const T& b) {
    return canon(a) == canon(b);
}

template <DvdRingElement T>
T exact_div(const T& a, const T& b) {
    auto q = div_opt(a, b);
    require_internal(q.has_value(), "exact division has no witness");
    return *q;
}

/// Extended Euclidean algorithm. The returned g is canonical; u and v are
/// whatever the iteration yields (they are not minimized).
template <class T>
    requires EuclideanBasis<T>
ExtGcd<T> egcdr(const T& a, const T& b) {
    T old_r = a, r = b;
    T old_u = T(1), u{};
    T old_v{}, v = T(1);
    while (!is_zero(r)) {
        auto [q, rem] = ediv(old_r, r);
        old_r = r;
        r = rem;
        T nu = old_u - q * u;
        old_u = u;
        u = nu;
        T nv = old_v - q * v;
        old_v = v;
        v = nv;
    }
    if (is_zero(old_r)) return {T{}, T(1), T{}, T(1), T{}};  // egcdr(0,0), by convention
    T w = normalizing_unit(old_r);
    T g = w * old_r;
    return {g, w * old_u, w * old_v, exact_div(a, g), exact_div(b, g)};
}

template <class T>
concept BezoutDomainElement = GcdDomainElement<T> && requires(const T a, const T b) {
    { egcdr(a, b) } -> std::convertible_to<ExtGcd<T>>;
};

/// Constructive PID: a Bezout domain whose strict divisibility is
/// well-founded. Euclidean rings qualify automatically.
template <class T>
concept PidElement =
    BezoutDomainElement<T> && (is_constructive_pid_v<T> || EuclideanBasis<T>);

template <class T>
concept EuclideanDomainElement = BezoutDomainElement<T> && EuclideanBasis<T>;

// Rings may ship a native gdco (adequacy witness) instead of relying on the
// PID algorithm; overload native_gdco and set this flag.
template <class T>
inline constexpr bool has_native_gdco_v = false;

template <class T>
concept GdcoCapable =
    (BezoutDomainElement<T> && has_native_gdco_v<T>) || PidElement<T>;

template <class T>
concept Krull1Capable = GdcoCapable<T> && declares_krull1_v<T>;

/// Bezout coefficients for three elements, by two nested egcdr calls.
template <BezoutDomainElement T>
ExtGcd3<T> egcdr3(const T& a, const T& b, const T& c) {
    ExtGcd<T> bc = egcdr(b, c);
    ExtGcd<T> ag = egcdr(a, bc.g);
    return {ag.g,
            ag.u,
            ag.v * bc.u,
            ag.v * bc.v,
            ag.a1,
            bc.a1 * ag.b1,
            bc.b1 * ag.b1};
}

/// Greatest divisor of b coprime to a.
///
/// Default algorithm on constructive PIDs: repeatedly strip gcd(c, a) from
/// c, starting at c = b. Every step divides c by a non-unit, so strict
/// divisibility descends; on Euclidean instances the descent is also checked
/// through the norm.
template <GdcoCapable T>
T gdco(const T& a, const T& b) {
    if constexpr (has_native_gdco_v<T>) {
        return native_gdco(a, b);
    } else {
        if (is_zero(b)) return T{};
        T c = b;
        while (true) {
            T g = gcd(c, a);
            if (is_unit(g)) break;
            T next = exact_div(c, g);
            if constexpr (EuclideanBasis<T>)
                require_internal(enorm(next) < enorm(c), "gdco: norm did not decrease");
            c = next;
        }
        return canon(c);
    }
}

// Search cap for the exponent in krull1_witness / krull1_factor: bit length
// for integers, degree for polynomials, each plus slack.
inline std::size_t exponent_search_cap(const Int& b) {
    if (is_zero(b)) return 2;
    return static_cast<std::size_t>(boost::multiprecision::msb(canon(b).value())) + 2;
}
template <class K>
std::size_t exponent_search_cap(const Poly<K>& b) {
    return b.size() + 2;
}

template <RingElement T>
T ring_pow(const T& a, std::size_t n) {
    T r = T(1);
    for (std::size_t i = 0; i < n; ++i) r = r * a;
    return r;
}

/// Element-wise Krull-dimension-1 witness: m and v with a | u^m * (1 - u*v).
///
/// Realized through gdco: split a = b1*b2 with b1 coprime to u and b2 | u^m,
/// then take v = inverse of u modulo b1. The corners u = 0 and unit a or
/// unit u are handled directly; a = 0 with a non-unit nonzero u admits no
/// witness at all and is rejected.
template <Krull1Capable T>
std::pair<std::size_t, T> krull1_witness(const T& a, const T& u) {
    if (is_zero(u)) return {1, T{}};   // a | 0^1 * (1 - 0)
    if (is_unit(a)) return {0, T{}};   // a | 1
    if (is_zero(a)) {
        if (is_unit(u)) return {0, exact_div(T(1), u)};
        throw DomainError("krull1_witness: no witness exists for a = 0 and non-unit u");
    }
    T b1 = gdco(u, a);
    T b2 = exact_div(a, b1);
    std::size_t cap = exponent_search_cap(b2);
    std::size_t m = 0;
    T pw = T(1);
    while (!divides(b2, pw)) {
        ++m;
        pw = pw * u;
        require_internal(m <= cap, "krull1_witness: exponent cap exceeded");
    }
    ExtGcd<T> e = egcdr(u, b1);
    require_internal(is_unit(e.g), "krull1_witness: gdco factor not coprime");
    T v = e.u * exact_div(T(1), e.g);
    return {m, v};
}

// ---------------------------------------------------------------------------
// Runtime-queryable capability descriptor.
// ---------------------------------------------------------------------------

enum class RingLevel { IntegralDomain, Dvd, Gcd, Bezout, Pid, Euclidean };

struct RingCapabilities {
    RingLevel level = RingLevel::IntegralDomain;
    bool gdco_capable = false;
    bool krull1_capable = false;

    bool divisibility_witness() const { return level >= RingLevel::Dvd; }
    bool has_gcd() const { return level >= RingLevel::Gcd; }
    bool has_egcdr() const { return level >= RingLevel::Bezout; }
    bool pid() const { return level >= RingLevel::Pid; }
    bool euclidean() const { return level >= RingLevel::Euclidean; }
};

template <RingElement T>
constexpr RingCapabilities capabilities() {
    RingCapabilities c;
    if constexpr (EuclideanDomainElement<T>)
        c.level = RingLevel::Euclidean;
    else if constexpr (PidElement<T>)
        c.level = RingLevel::Pid;
    else if constexpr (BezoutDomainElement<T>)
        c.level = RingLevel::Bezout;
    else if constexpr (GcdDomainElement<T>)
        c.level = RingLevel::Gcd;
    else if constexpr (DvdRingElement<T>)
        c.level = RingLevel::Dvd;
    c.gdco_capable = GdcoCapable<T>;
    c.krull1_capable = Krull1Capable<T>;
    return c;
}

}  // namespace edr
