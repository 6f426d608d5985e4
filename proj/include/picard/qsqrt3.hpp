#pragma once

#include "picard/rational.hpp"

namespace picard {

// Element a + b*sqrt(3) of the real quadratic field Q(sqrt 3), with exact
// rational components. The fixed root coordinates live in this field.
class QSqrt3 {
public:
    QSqrt3() : a_(0), b_(0) {}
    QSqrt3(Rational a) : a_(a), b_(0) {}
    QSqrt3(Rational a, Rational b) : a_(a), b_(b) {}

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QSqrt3 operator-() const { return {-a_, -b_}; }
    QSqrt3 operator+(const QSqrt3& o) const { return {a_ + o.a_, b_ + o.b_}; }
    QSqrt3 operator-(const QSqrt3& o) const { return {a_ - o.a_, b_ - o.b_}; }
    QSqrt3 operator*(const QSqrt3& o) const {
        // (a + b s)(c + d s) = ac + 3bd + (ad + bc) s
        return {a_ * o.a_ + Rational(3) * b_ * o.b_, a_ * o.b_ + b_ * o.a_};
    }
    QSqrt3 operator/(const QSqrt3& o) const {
        // multiply by the conjugate; norm = c^2 - 3 d^2
        Rational n = o.a_ * o.a_ - Rational(3) * o.b_ * o.b_;
        if (n.is_zero()) throw std::domain_error("QSqrt3: division by zero");
        QSqrt3 num = *this * QSqrt3(o.a_, -o.b_);
        return {num.a_ / n, num.b_ / n};
    }

    bool operator==(const QSqrt3& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const QSqrt3& o) const { return !(*this == o); }

    // sign of a + b sqrt(3), decided exactly
    int sign() const {
        if (b_.is_zero()) return a_.sign();
        if (a_.is_zero()) return b_.sign();
        if (a_.sign() == b_.sign()) return a_.sign();
        // compare a^2 with 3 b^2; the larger magnitude wins
        Rational a2 = a_ * a_, b23 = Rational(3) * b_ * b_;
        if (a2 == b23) return 0; // impossible for rational a,b both nonzero
        return (a2 > b23) ? a_.sign() : b_.sign();
    }

private:
    Rational a_, b_;
};

} // namespace picard
