#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision reduced rationals.
 *
 * Every quantity in this library is an exact rational; Rational is the
 * universal scalar type. Invariants maintained by construction:
 *
 *   - denominator >= 1 always (sign lives on the numerator)
 *   - gcd(|numerator|, denominator) == 1
 *   - zero is uniquely 0/1
 *
 * Canonical equality on the two fields is therefore value equality, which
 * is what every identity check in the library relies on.
 *
 * Storage is boost::multiprecision::cpp_int, so there is no overflow and
 * no machine-word fast path to get wrong.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace cauchyconv {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}              // NOLINT: implicit by design
    Rational(long long n) : num_(n), den_(1) {}        // NOLINT
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    const BigInt& numerator() const noexcept { return num_; }
    const BigInt& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_integer() const noexcept { return den_ == 1; }
    bool is_negative() const noexcept { return num_ < 0; }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational reciprocal() const {
        if (is_zero())
            throw std::domain_error("Rational: reciprocal of zero");
        return Rational(den_, num_);
    }

    // Canonical form makes field-wise comparison exact.
    bool operator==(const Rational& o) const noexcept {
        return num_ == o.num_ && den_ == o.den_;
    }

    // Total order by cross-multiplication (denominators are positive).
    std::strong_ordering operator<=>(const Rational& o) const {
        const BigInt lhs = num_ * o.den_;
        const BigInt rhs = o.num_ * den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Canonical text form: "p/q" with q > 0 and no spaces, "p" when q == 1.
    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    /// Parses the canonical form ("p" or "p/q", optional leading '-').
    static Rational parse(std::string_view text) {
        const auto bad = [&] {
            throw std::invalid_argument("Rational: cannot parse \"" + std::string(text) + "\"");
        };
        const auto slash = text.find('/');
        std::string_view num_part = text.substr(0, slash);
        std::string_view den_part =
            slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
        const auto check_integer = [&](std::string_view part, bool allow_sign) {
            if (part.empty()) bad();
            std::size_t i = (allow_sign && part.front() == '-') ? 1 : 0;
            if (i == part.size()) bad();
            for (; i < part.size(); ++i)
                if (part[i] < '0' || part[i] > '9') bad();
        };
        check_integer(num_part, true);
        check_integer(den_part, false);
        if (BigInt(std::string(den_part)).is_zero()) bad();
        return Rational(BigInt(std::string(num_part)), BigInt(std::string(den_part)));
    }

    /// Nearest double; reporting only, exact paths never use this.
    double to_double() const {
        boost::multiprecision::cpp_rational r(num_, den_);
        return r.convert_to<double>();
    }

private:
    void normalize() {
        if (den_.is_zero())
            throw std::domain_error("Rational: zero denominator");
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace cauchyconv
