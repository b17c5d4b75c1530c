#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "edr/errors.hpp"

namespace edr {

/// Arbitrary-precision integer: the ring Z.
///
/// A thin value wrapper around boost::multiprecision::cpp_int so that the
/// ring operations (div_opt, gcd, egcdr, ...) live in this namespace and
/// resolve uniformly for every coefficient ring.
class Int {
public:
    using rep = boost::multiprecision::cpp_int;

    Int() = default;
    Int(int v) : v_(v) {}
    Int(long v) : v_(v) {}
    Int(long long v) : v_(v) {}
    explicit Int(rep v) : v_(std::move(v)) {}
    explicit Int(const std::string& decimal) : v_(decimal) {}

    const rep& value() const { return v_; }

    Int operator-() const { return Int(-v_); }
    Int& operator+=(const Int& o) { v_ += o.v_; return *this; }
    Int& operator-=(const Int& o) { v_ -= o.v_; return *this; }
    Int& operator*=(const Int& o) { v_ *= o.v_; return *this; }

    friend Int operator+(Int a, const Int& b) { return a += b; }
    friend Int operator-(Int a, const Int& b) { return a -= b; }
    friend Int operator*(Int a, const Int& b) { return a *= b; }
    friend bool operator==(const Int& a, const Int& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Int& a, const Int& b) { return a.v_ != b.v_; }
    friend bool operator<(const Int& a, const Int& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Int& a, const Int& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Int& a, const Int& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Int& a, const Int& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Int& a) {
        return os << a.v_;
    }

private:
    rep v_;
};

inline bool is_zero(const Int& a) { return a.value().is_zero(); }

inline bool is_unit(const Int& a) { return a.value() == 1 || a.value() == -1; }

/// Canonical associate: the nonnegative representative.
inline Int canon(const Int& a) { return Int(abs(a.value())); }

/// The unit u with canon(a) == u * a.
inline Int normalizing_unit(const Int& a) { return a.value() < 0 ? Int(-1) : Int(1); }

/// Divisibility witness: Some(x) with a == x * b when b | a, None otherwise.
inline std::optional<Int> div_opt(const Int& a, const Int& b) {
    if (is_zero(b)) {
        if (is_zero(a)) return Int(0);  // 0 = 0 * 0, canonical witness
        return std::nullopt;
    }
    Int::rep q, r;
    divide_qr(a.value(), b.value(), q, r);
    if (!r.is_zero()) return std::nullopt;
    return Int(std::move(q));
}

inline Int gcd(const Int& a, const Int& b) {
    return Int(boost::multiprecision::gcd(a.value(), b.value()));
}

/// Euclidean norm |a|, as an unbounded natural number.
inline Int enorm(const Int& a) { return canon(a); }

/// Euclidean division with the nonnegative-remainder convention:
/// a = b*q + r with 0 <= r < |b|.
inline std::pair<Int, Int> ediv(const Int& a, const Int& b) {
    if (is_zero(b)) throw DomainError("ediv: division by zero");
    Int::rep q, r;
    divide_qr(a.value(), b.value(), q, r);
    if (r < 0) {
        r += abs(b.value());
        q = (a.value() - r) / b.value();
    }
    return {Int(std::move(q)), Int(std::move(r))};
}

inline std::string to_string(const Int& a) { return a.value().str(); }

// Capability markers: strict divisibility in Z is well-founded, and Z has
// Krull dimension 1.
template <class T>
inline constexpr bool is_constructive_pid_v = false;
template <>
inline constexpr bool is_constructive_pid_v<Int> = true;

template <class T>
inline constexpr bool declares_krull1_v = false;
template <>
inline constexpr bool declares_krull1_v<Int> = true;

}  // namespace edr
