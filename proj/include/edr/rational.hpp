#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <utility>

#include "edr/errors.hpp"
#include "edr/integers.hpp"

namespace edr {

/// Exact rational number: the coefficient field Q.
///
/// Always in lowest terms with positive denominator (cpp_rational maintains
/// this canonical form through every operation).
class Rat {
public:
    using rep = boost::multiprecision::cpp_rational;

    Rat() = default;
    Rat(int v) : v_(v) {}
    Rat(long long v) : v_(v) {}
    explicit Rat(rep v) : v_(std::move(v)) {}
    Rat(const Int& num, const Int& den) : v_(num.value(), den.value()) {
        if (is_zero(den)) throw DomainError("rational with zero denominator");
    }

    const rep& value() const { return v_; }
    Int num() const { return Int(numerator(v_)); }
    Int den() const { return Int(denominator(v_)); }

    Rat operator-() const { return Rat(-v_); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.v_.is_zero()) throw DomainError("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& a);

private:
    rep v_;
};

inline bool is_zero(const Rat& a) { return a.value().is_zero(); }

inline Rat inverse(const Rat& a) { return Rat(1) / a; }

inline std::string to_string(const Rat& a) {
    if (denominator(a.value()) == 1) return numerator(a.value()).str();
    return numerator(a.value()).str() + "/" + denominator(a.value()).str();
}

inline std::ostream& operator<<(std::ostream& os, const Rat& a) {
    return os << to_string(a);
}

}  // namespace edr
