#pragma once

#include "mtpath/bigint.hpp"
#include "mtpath/errors.hpp"

namespace mtpath {

/// Exact rational number over bigint.  Denominator is kept positive and the
/// fraction reduced after every operation.
class rational {
public:
    rational() : num_(0), den_(1) {}
    rational(bigint n) : num_(std::move(n)), den_(1) {}
    rational(long long n) : num_(n), den_(1) {}

    rational(bigint n, bigint d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw std::domain_error("rational: zero denominator");
        normalize();
    }

    const bigint& numerator() const { return num_; }
    const bigint& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == bigint(1); }

    bigint to_integer() const {
        if (!is_integer())
            throw integrality_violation("expected integer, got " + num_.to_string() + "/" + den_.to_string());
        return num_;
    }

    friend rational operator+(const rational& a, const rational& b) {
        return rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend rational operator-(const rational& a, const rational& b) {
        return rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend rational operator*(const rational& a, const rational& b) {
        return rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend rational operator/(const rational& a, const rational& b) {
        if (b.num_.is_zero()) throw std::domain_error("rational: division by zero");
        return rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    rational operator-() const {
        rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    rational& operator+=(const rational& o) { return *this = *this + o; }
    rational& operator-=(const rational& o) { return *this = *this - o; }
    rational& operator*=(const rational& o) { return *this = *this * o; }
    rational& operator/=(const rational& o) { return *this = *this / o; }

    friend bool operator==(const rational& a, const rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const {
        if (is_integer()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    bigint num_, den_;

    void normalize() {
        if (num_.is_zero()) {
            den_ = bigint(1);
            return;
        }
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        bigint g = bigint::gcd(num_, den_);
        if (!(g == bigint(1))) {
            num_ /= g;
            den_ /= g;
        }
    }
};

} // namespace mtpath
