#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qmink {

/// Exact Gaussian rational re + im*i. Both parts are kept canonical (lowest
/// terms, positive denominator) by GMP after every operation.
class Scalar {
public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}
  Scalar(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  /// num/den + (inum/iden) i; throws ParseError on a zero denominator.
  static Scalar from_parts(const mpz_class &num, const mpz_class &den,
                           const mpz_class &inum, const mpz_class &iden);
  static Scalar i() { return Scalar(0, 1); }

  /// Accepts "3", "-1/2", "i", "-2/3i", "1/2+3/4i", "1-i".
  static Scalar parse(std::string_view text);

  const mpq_class &re() const { return re_; }
  const mpq_class &im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  Scalar inverse() const;

  Scalar &operator+=(const Scalar &o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar &operator-=(const Scalar &o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar &operator*=(const Scalar &o);
  Scalar &operator/=(const Scalar &o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar &a, const Scalar &b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string to_string() const;

private:
  mpq_class re_{0};
  mpq_class im_{0};
};

} // namespace qmink
