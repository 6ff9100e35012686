#include "rowadj/scalar.hpp"

#include <cctype>
#include <ostream>

#include "rowadj/error.hpp"

namespace rowadj {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Unsigned rational literal: digits or digits/digits.
mpq_class parse_unsigned_rational(std::string_view body, std::string_view whole) {
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed scalar '" + std::string(whole) + "'");
  const mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in scalar '" + std::string(whole) + "'");
  mpq_class q{n, d};
  q.canonicalize();
  return q;
}

// Signed term with optional trailing 'i'. Sets `imaginary` accordingly.
mpq_class parse_term(std::string_view term, bool& imaginary, std::string_view whole) {
  bool negative = false;
  if (!term.empty() && (term.front() == '+' || term.front() == '-')) {
    negative = term.front() == '-';
    term.remove_prefix(1);
  }
  imaginary = !term.empty() && term.back() == 'i';
  if (imaginary) term.remove_suffix(1);
  mpq_class value = (imaginary && term.empty()) ? mpq_class(1)
                                                : parse_unsigned_rational(term, whole);
  return negative ? mpq_class(-value) : value;
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

}  // namespace

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty scalar");
  // Split at a sign that is not the leading character: "a+bi" / "a-bi".
  std::size_t split = std::string_view::npos;
  for (std::size_t k = 1; k < text.size(); ++k) {
    if (text[k] == '+' || text[k] == '-') {
      if (split != std::string_view::npos)
        throw ParseError("malformed scalar '" + std::string(text) + "'");
      split = k;
    }
  }
  bool first_imag = false;
  if (split == std::string_view::npos) {
    mpq_class v = parse_term(text, first_imag, text);
    return first_imag ? Scalar(0, v) : Scalar(v, 0);
  }
  bool second_imag = false;
  mpq_class a = parse_term(text.substr(0, split), first_imag, text);
  mpq_class b = parse_term(text.substr(split), second_imag, text);
  if (first_imag || !second_imag)
    throw ParseError("complex scalar must be written re+imi: '" + std::string(text) + "'");
  return Scalar(a, b);
}

Scalar Scalar::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (sgn(im_) == 0 && sgn(rhs.im_) == 0) {
    re_ *= rhs.re_;
    return *this;
  }
  mpq_class re = re_ * rhs.re_ - im_ * rhs.im_;
  mpq_class im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  if (sgn(im_) == 0 && sgn(rhs.im_) == 0) {
    re_ /= rhs.re_;
    return *this;
  }
  return *this *= rhs.reciprocal();
}

std::string Scalar::str() const {
  if (sgn(im_) == 0) return rational_str(re_);
  std::string imag_part;
  if (im_ == 1) imag_part = "i";
  else if (im_ == -1) imag_part = "-i";
  else imag_part = rational_str(im_) + "i";
  if (sgn(re_) == 0) return imag_part;
  if (sgn(im_) > 0) return rational_str(re_) + "+" + imag_part;
  return rational_str(re_) + imag_part;
}

std::ostream& operator<<(std::ostream& os, const Scalar& value) {
  return os << value.str();
}

}  // namespace rowadj
