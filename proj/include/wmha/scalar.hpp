#pragma once

// Exact Gaussian rationals: a + b i with a, b in Q.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace wmha {

using Rational = mpq_class;

class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}                       // NOLINT(google-explicit-constructor)
    Scalar(int v) : re_(v) {}                        // NOLINT(google-explicit-constructor)
    Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }
    Scalar(long num, long den) : re_(num, den) { re_.canonicalize(); }

    static Scalar i() { return {Rational(0), Rational(1)}; }

    /// Parses "3", "-1/2", "2i", "1/2-3/4i", "i", "-i".
    static Scalar parse(std::string_view text);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar conj() const { return {re_, -im_}; }
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const { return {-re_, -im_}; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Total order (lexicographic on (re, im)); only used for deterministic sorting.
    friend bool operator<(const Scalar& a, const Scalar& b) {
        const int c = cmp(a.re_, b.re_);
        return c != 0 ? c < 0 : cmp(a.im_, b.im_) < 0;
    }

    std::string str() const;

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace wmha
