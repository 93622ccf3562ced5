#pragma once

#include "exth/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace exth {

// Element base + surd*sqrt(d) of the quadratic field Q(sqrt(d)), d a nonzero
// squarefree integer (negative for the weight-polynomial fields, positive for
// the p^{1/2} appearing in local zeta factors).  d is part of the value;
// values with different nonzero d never interoperate.  d == 0 marks a plain
// rational, which combines with any field.
class QuadExt {
public:
    QuadExt() : d_(0) {}
    QuadExt(const Rational& r) : base_(r), d_(0) {}  // NOLINT: implicit by design
    QuadExt(long n) : base_(n), d_(0) {}             // NOLINT
    QuadExt(Rational base, Rational surd, long long d)
        : base_(std::move(base)), surd_(std::move(surd)), d_(d) {
        if (d == 0 || d == 1 || !is_squarefree(d))
            throw std::domain_error("QuadExt: d must be a squarefree integer != 0,1");
        normalize();
    }

    static QuadExt sqrt_of(long long d) { return QuadExt(Rational(0), Rational(1), d); }

    static bool is_squarefree(long long d) {
        d = std::llabs(d);
        if (d == 0) return false;
        for (long long f = 2; f * f <= d; ++f)
            while (d % f == 0) {
                d /= f;
                if (d % f == 0) return false;
            }
        return true;
    }

    const Rational& base() const { return base_; }
    const Rational& surd() const { return surd_; }
    long long d() const { return d_; }

    bool is_zero() const { return base_.is_zero() && surd_.is_zero(); }
    bool is_rational() const { return surd_.is_zero(); }

    QuadExt conj() const {
        QuadExt r = *this;
        r.surd_ = -r.surd_;
        return r;
    }
    // base^2 - d*surd^2, always rational.
    Rational norm() const { return base_ * base_ - Rational(d_) * surd_ * surd_; }

    QuadExt operator-() const {
        QuadExt r = *this;
        r.base_ = -r.base_;
        r.surd_ = -r.surd_;
        return r;
    }

    QuadExt& operator+=(const QuadExt& o) {
        long long d = joined(o);
        base_ += o.base_;
        surd_ += o.surd_;
        d_ = d;
        normalize();
        return *this;
    }
    QuadExt& operator-=(const QuadExt& o) { return *this += -o; }
    QuadExt& operator*=(const QuadExt& o) {
        long long d = joined(o);
        Rational b = base_ * o.base_ + Rational(d) * surd_ * o.surd_;
        Rational s = base_ * o.surd_ + surd_ * o.base_;
        base_ = std::move(b);
        surd_ = std::move(s);
        d_ = d;
        normalize();
        return *this;
    }
    QuadExt inverse() const {
        Rational n = norm();
        if (n.is_zero()) throw std::domain_error("QuadExt: division by zero");
        QuadExt r = conj();
        r.base_ /= n;
        r.surd_ /= n;
        return r;
    }
    QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

    friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
    friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
    friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
    friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        if (a.base_ != b.base_ || a.surd_ != b.surd_) return false;
        return a.surd_.is_zero() || a.d_ == b.d_;
    }
    friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

    double to_double() const {
        double s = surd_.to_double();
        if (s == 0.0) return base_.to_double();
        if (d_ < 0) throw std::domain_error("QuadExt: no real embedding for d < 0");
        return base_.to_double() + s * std::sqrt(static_cast<double>(d_));
    }

    std::string str() const {
        if (surd_.is_zero()) return base_.str();
        return base_.str() + " + " + surd_.str() + "*sqrt(" + std::to_string(d_) + ")";
    }

private:
    void normalize() {
        if (surd_.is_zero()) d_ = 0;
    }
    long long joined(const QuadExt& o) const {
        if (d_ == 0) return o.d_;
        if (o.d_ == 0 || o.d_ == d_) return d_;
        throw std::domain_error("QuadExt: mixing sqrt(" + std::to_string(d_) +
                                ") with sqrt(" + std::to_string(o.d_) + ")");
    }

    Rational base_, surd_;
    long long d_;
};

inline QuadExt pow(const QuadExt& base, long e) {
    if (e < 0) return pow(base, -e).inverse();
    QuadExt acc(Rational(1)), b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

}  // namespace exth
