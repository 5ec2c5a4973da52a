#include "qmink/scalar.hpp"

#include "qmink/errors.hpp"

#include <cctype>

namespace qmink {

Scalar Scalar::from_parts(const mpz_class &num, const mpz_class &den,
                          const mpz_class &inum, const mpz_class &iden) {
  if (sgn(den) == 0 || sgn(iden) == 0)
    throw ParseError("zero denominator in scalar");
  return Scalar(mpq_class(num, den), mpq_class(inum, iden));
}

Scalar Scalar::inverse() const {
  mpq_class norm = re_ * re_ + im_ * im_;
  if (sgn(norm) == 0)
    throw std::domain_error("division by zero scalar");
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar &Scalar::operator*=(const Scalar &o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

std::string Scalar::to_string() const {
  if (sgn(im_) == 0)
    return re_.get_str();
  std::string imag;
  if (im_ == 1)
    imag = "i";
  else if (im_ == -1)
    imag = "-i";
  else
    imag = im_.get_str() + "i";
  if (sgn(re_) == 0)
    return imag;
  if (imag[0] != '-')
    imag = "+" + imag;
  return re_.get_str() + imag;
}

namespace {

// One signed rational term, optionally suffixed with 'i'.
struct Term {
  mpq_class value;
  bool imaginary = false;
};

bool parse_term(std::string_view text, size_t &pos, Term &out) {
  size_t start = pos;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  size_t digits = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    ++pos;
  std::string num(text.substr(digits, pos - digits));
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    if (num.empty())
      return false;
    size_t d0 = ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    den = std::string(text.substr(d0, pos - d0));
    if (den.empty())
      return false;
  }
  if (pos < text.size() && text[pos] == 'i') {
    out.imaginary = true;
    ++pos;
    if (num.empty())
      num = "1";
  }
  if (num.empty() || pos == start)
    return false;
  mpz_class n(num), d(den);
  if (sgn(d) == 0)
    throw ParseError("zero denominator in scalar '" + std::string(text) + "'");
  out.value = mpq_class(n, d);
  out.value.canonicalize();
  if (negative)
    out.value = -out.value;
  return true;
}

} // namespace

Scalar Scalar::parse(std::string_view text) {
  if (text.empty())
    throw ParseError("empty scalar");
  size_t pos = 0;
  mpq_class re = 0, im = 0;
  int terms = 0;
  while (pos < text.size()) {
    Term t;
    if (!parse_term(text, pos, t) || ++terms > 2)
      throw ParseError("malformed scalar '" + std::string(text) + "'");
    (t.imaginary ? im : re) += t.value;
  }
  return Scalar(re, im);
}

} // namespace qmink
