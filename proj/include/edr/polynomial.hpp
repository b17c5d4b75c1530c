#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edr/errors.hpp"
#include "edr/fp.hpp"
#include "edr/integers.hpp"
#include "edr/rational.hpp"

namespace edr {

/// Dense univariate polynomial over a field K, coefficients stored in
/// ascending order with no trailing zeros. With K = Rat this is the ring
/// Q[x]; with K = Fp it is F_p[x]. Both are Euclidean domains.
template <class K>
class Poly {
public:
    Poly() = default;
    Poly(int c) {
        if (c != 0) c_.push_back(K(c));
    }
    explicit Poly(K c) {
        if (!is_zero(c)) c_.push_back(std::move(c));
    }
    explicit Poly(std::vector<K> ascending) : c_(std::move(ascending)) { trim(); }

    static Poly monomial(std::size_t degree, K coeff) {
        Poly p;
        if (!is_zero(coeff)) {
            p.c_.assign(degree + 1, K(0));
            p.c_[degree] = std::move(coeff);
        }
        return p;
    }

    const std::vector<K>& coeffs() const { return c_; }
    std::size_t size() const { return c_.size(); }  // 0 for the zero polynomial
    bool zero() const { return c_.empty(); }
    /// Degree; only defined for nonzero polynomials.
    std::size_t degree() const {
        if (zero()) throw DomainError("degree of the zero polynomial");
        return c_.size() - 1;
    }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
    const K& leading() const {
        if (zero()) throw DomainError("leading coefficient of the zero polynomial");
        return c_.back();
    }

    Poly operator-() const {
        Poly r = *this;
        for (K& c : r.c_) c = -c;
        return r;
    }
    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), K(0));
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.zero() || b.zero()) return Poly();
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    std::vector<K> c_;

    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
};

using PolyQ = Poly<Rat>;
using PolyF = Poly<Fp>;

template <class K>
bool is_zero(const Poly<K>& a) {
    return a.zero();
}

/// Units of k[x] are the nonzero constants.
template <class K>
bool is_unit(const Poly<K>& a) {
    return a.size() == 1;
}

/// Long division by a nonzero divisor: a = b*q + r with r = 0 or deg r < deg b.
template <class K>
std::pair<Poly<K>, Poly<K>> poly_divmod(const Poly<K>& a, const Poly<K>& b) {
    if (b.zero()) throw DomainError("polynomial division by zero");
    if (a.size() < b.size()) return {Poly<K>(), a};
    std::vector<K> rem(a.coeffs());
    std::vector<K> quot(a.size() - b.size() + 1, K(0));
    K lead_inv = K(1) / b.leading();
    for (std::size_t shift = quot.size(); shift-- > 0;) {
        K c = rem[shift + b.size() - 1] * lead_inv;
        if (is_zero(c)) continue;
        quot[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            rem[shift + i] -= c * b.coeffs()[i];
    }
    return {Poly<K>(std::move(quot)), Poly<K>(std::move(rem))};
}

template <class K>
std::pair<Poly<K>, Poly<K>> ediv(const Poly<K>& a, const Poly<K>& b) {
    return poly_divmod(a, b);
}

/// Euclidean norm: 0 for the zero polynomial, 1 + degree otherwise.
template <class K>
Int enorm(const Poly<K>& a) {
    return Int(static_cast<long long>(a.size()));
}

template <class K>
std::optional<Poly<K>> div_opt(const Poly<K>& a, const Poly<K>& b) {
    if (b.zero()) {
        if (a.zero()) return Poly<K>();
        return std::nullopt;
    }
    auto [q, r] = poly_divmod(a, b);
    if (!r.zero()) return std::nullopt;
    return q;
}

/// Canonical associate: monic, or zero.
template <class K>
Poly<K> canon(const Poly<K>& a) {
    if (a.zero()) return a;
    return a * Poly<K>(K(1) / a.leading());
}

template <class K>
Poly<K> normalizing_unit(const Poly<K>& a) {
    if (a.zero()) return Poly<K>(1);
    return Poly<K>(K(1) / a.leading());
}

template <class K>
Poly<K> gcd(const Poly<K>& a, const Poly<K>& b) {
    Poly<K> x = a, y = b;
    while (!y.zero()) {
        auto [q, r] = poly_divmod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return canon(x);
}

template <>
inline constexpr bool is_constructive_pid_v<PolyQ> = true;
template <>
inline constexpr bool is_constructive_pid_v<PolyF> = true;
template <>
inline constexpr bool declares_krull1_v<PolyQ> = true;
template <>
inline constexpr bool declares_krull1_v<PolyF> = true;

/// Renders in the ascending bracket syntax also used by the CLI: [c0,c1,...].
template <class K>
std::string to_string(const Poly<K>& a) {
    if (a.zero()) return "[0]";
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ',';
        s += to_string(a.coeffs()[i]);
    }
    return s + "]";
}

template <class K>
std::ostream& operator<<(std::ostream& os, const Poly<K>& a) {
    return os << to_string(a);
}

}  // namespace edr
