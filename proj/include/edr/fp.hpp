#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "edr/errors.hpp"

namespace edr {

/// Element of the prime field F_p for a runtime modulus p < 2^32.
///
/// Attached elements (modulus() != 0) keep their value reduced to [0, p).
/// Elements built from a bare integer literal carry modulus 0: a small
/// context-free constant that adopts the modulus of the first attached
/// element it is combined with. Generic ring code only manufactures 0 and
/// +-1 this way, so the raw value always fits comfortably in int64.
class Fp {
public:
    Fp() = default;
    Fp(int raw) : raw_(raw) {}
    Fp(long long raw) : raw_(raw) {}
    Fp(long long value, std::uint64_t p) : p_(p) {
        if (p == 0) throw DomainError("Fp: zero modulus");
        raw_ = reduce(value, p);
    }

    std::uint64_t modulus() const { return p_; }
    bool attached() const { return p_ != 0; }

    /// Reduced representative in [0, p) for attached elements.
    std::uint64_t residue() const {
        if (!attached()) throw DomainError("Fp: residue of an unattached constant");
        return static_cast<std::uint64_t>(raw_);
    }
    long long raw() const { return raw_; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        auto [x, y, p] = unify(a, b);
        if (p == 0) return Fp(x + y);
        std::uint64_t s = static_cast<std::uint64_t>(x) + static_cast<std::uint64_t>(y);
        if (s >= p) s -= p;
        return make(s, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        auto [x, y, p] = unify(a, b);
        if (p == 0) return Fp(x - y);
        std::uint64_t s = static_cast<std::uint64_t>(x) + p - static_cast<std::uint64_t>(y);
        if (s >= p) s -= p;
        return make(s, p);
    }
    Fp operator-() const {
        if (!attached()) return Fp(-raw_);
        return raw_ == 0 ? *this : make(p_ - static_cast<std::uint64_t>(raw_), p_);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        auto [x, y, p] = unify(a, b);
        if (p == 0) return Fp(x * y);
        unsigned __int128 prod = static_cast<unsigned __int128>(static_cast<std::uint64_t>(x)) *
                                 static_cast<std::uint64_t>(y);
        return make(static_cast<std::uint64_t>(prod % p), p);
    }
    friend Fp operator/(const Fp& a, const Fp& b);

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    friend bool operator==(const Fp& a, const Fp& b) {
        auto [x, y, p] = unify(a, b);
        return x == y;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Fp& a);

private:
    long long raw_ = 0;
    std::uint64_t p_ = 0;

    static long long reduce(long long v, std::uint64_t p) {
        long long m = static_cast<long long>(p);
        long long r = v % m;
        if (r < 0) r += m;
        return r;
    }
    static Fp make(std::uint64_t v, std::uint64_t p) {
        Fp r;
        r.raw_ = static_cast<long long>(v);
        r.p_ = p;
        return r;
    }
    // Bring both operands to a common modulus; 0 means both are bare constants.
    struct Unified { long long a, b; std::uint64_t p; };
    static Unified unify(const Fp& a, const Fp& b) {
        if (a.p_ == b.p_) return {a.raw_, b.raw_, a.p_};
        if (a.p_ == 0) return {reduce(a.raw_, b.p_), b.raw_, b.p_};
        if (b.p_ == 0) return {a.raw_, reduce(b.raw_, a.p_), a.p_};
        throw DomainError("Fp: mixing elements of different moduli");
    }
};

inline bool is_zero(const Fp& a) { return a.attached() ? a.raw() == 0 : a.raw() == 0; }

/// Inverse modulo p by the extended Euclidean algorithm.
inline Fp inverse(const Fp& a) {
    if (is_zero(a)) throw DomainError("Fp: inverse of zero");
    if (!a.attached()) {
        if (a.raw() == 1 || a.raw() == -1) return a;
        throw DomainError("Fp: inverse of an unattached constant");
    }
    long long p = static_cast<long long>(a.modulus());
    long long r0 = p, r1 = static_cast<long long>(a.residue());
    long long t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw DomainError("Fp: modulus is not prime");
    return Fp(t0, a.modulus());
}

inline Fp operator/(const Fp& a, const Fp& b) { return a * inverse(b); }

inline std::string to_string(const Fp& a) {
    return std::to_string(a.attached() ? static_cast<long long>(a.residue()) : a.raw());
}

inline std::ostream& operator<<(std::ostream& os, const Fp& a) {
    return os << to_string(a);
}

}  // namespace edr
