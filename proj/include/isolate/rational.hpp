#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "isolate/errors.hpp"

namespace isolate {

// Exact rational with 64-bit numerator/denominator, always normalized so the
// denominator is positive and gcd(|num|, den) == 1.  The magnitudes that show
// up in bound formulas are tiny, so no overflow handling beyond asserts.
class Rational {
  public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
        if (den_ == 0) throw parameter_error("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator+(const Rational &o) const { return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
    Rational operator-(const Rational &o) const { return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
    Rational operator*(const Rational &o) const { return Rational(num_ * o.num_, den_ * o.den_); }
    Rational operator/(const Rational &o) const {
        if (o.num_ == 0) throw parameter_error("rational division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }

    bool operator==(const Rational &o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational &o) const { return !(*this == o); }
    bool operator<(const Rational &o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator<=(const Rational &o) const { return num_ * o.den_ <= o.num_ * den_; }
    bool operator>(const Rational &o) const { return o < *this; }
    bool operator>=(const Rational &o) const { return o <= *this; }

    // floor(num/den) with the usual round-toward-negative-infinity convention.
    std::int64_t floor() const {
        std::int64_t q = num_ / den_, r = num_ % den_;
        return (r < 0) ? q - 1 : q;
    }
    std::int64_t ceil() const { return -Rational(-num_, den_).floor(); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // "p/q", or just "p" when the value is integral.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

  private:
    std::int64_t num_;
    std::int64_t den_;
};

} // namespace isolate
