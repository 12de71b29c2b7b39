#include "quatcoh/gaussian_rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "quatcoh/errors.hpp"

namespace quatcoh {

namespace {

Rational parse_rational(std::string_view text, std::string_view whole) {
  if (text.empty()) throw CoefficientParseError("empty rational in literal '" + std::string(whole) + "'");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  const auto valid = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t k = part[0] == '-' ? 1 : 0;
    if (k == part.size()) return false;
    return std::all_of(part.begin() + static_cast<long>(k), part.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den) || den[0] == '-') {
    throw CoefficientParseError("malformed rational '" + std::string(text) + "' in literal '" +
                                std::string(whole) + "'");
  }
  mpz_class n(num), d(den);
  if (d == 0) throw DivisionByZero("zero denominator in literal '" + std::string(whole) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace

GaussianRational GaussianRational::from_ratio(long num, long den) {
  if (den == 0) throw DivisionByZero("from_ratio: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return GaussianRational(q);
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  const Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero");
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag = im_.get_str() + "*i";
  if (sgn(re_) == 0) return imag;
  return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + imag;
}

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw CoefficientParseError("empty scalar literal");
  if (s.back() != 'i') return GaussianRational(parse_rational(s, text));

  // Split "re±im*i"; the split sign is the last '+'/'-' not at the front.
  std::string body = s.substr(0, s.size() - 1);
  if (!body.empty() && body.back() == '*') body.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "" : body.substr(0, split);
  std::string im_part = split == std::string::npos ? body : body.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part, text);
  return {re, parse_rational(im_part, text)};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

std::strong_ordering lex_compare(const GaussianRational& a, const GaussianRational& b) {
  const int c1 = cmp(a.re(), b.re());
  if (c1 != 0) return c1 < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  const int c2 = cmp(a.im(), b.im());
  if (c2 != 0) return c2 < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace quatcoh
