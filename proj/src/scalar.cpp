#include "cyclerep/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace cyclerep {
namespace {

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) throw ParseError("malformed rational " + quoted(text));
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in rational " + quoted(text));
  if (negative) n = -n;
  return from_mpq(mpq_class(n, d));
}

std::size_t Rational::height() const {
  return mpz_sizeinbase(v_.get_num_mpz_t(), 2) + mpz_sizeinbase(v_.get_den_mpz_t(), 2);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(Canonical{}, std::move(r));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
  thread_local mpq_class tmp;
  mpq_mul(tmp.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
  mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), tmp.get_mpq_t());
}

void Rational::sub_product(const Rational& a, const Rational& b) {
  thread_local mpq_class tmp;
  mpq_mul(tmp.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
  mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), tmp.get_mpq_t());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_;
  re.sub_product(im_, o.im_);
  Rational im = re_ * o.im_;
  im.add_product(im_, o.re_);
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Rational norm = re_ * re_;
  norm.add_product(im_, im_);
  return {re_ / norm, -im_ / norm};
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  const std::string imag = (im_.sign() < 0 ? (-im_).str() : im_.str()) + "*i";
  if (re_.is_zero()) return im_.sign() < 0 ? "-" + imag : imag;
  return re_.str() + (im_.sign() < 0 ? "-" : "+") + imag;
}

GaussianRational GaussianRational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty Gaussian rational");
  if (text.back() != 'i') return GaussianRational(Rational::parse(text));

  std::string_view head = text.substr(0, text.size() - 1);
  if (!head.empty() && head.back() == '*') head.remove_suffix(1);
  else if (!head.empty() && std::isdigit(static_cast<unsigned char>(head.back())) != 0)
    throw ParseError("malformed Gaussian rational '" + std::string(text) + "' (write c*i)");

  // The imaginary coefficient starts at the last sign that is not leading.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = head.size(); k-- > 1;) {
    if (head[k] == '+' || head[k] == '-') {
      split = k;
      break;
    }
  }
  const std::string_view real_part = split == std::string_view::npos ? std::string_view{} : head.substr(0, split);
  std::string_view imag_part = split == std::string_view::npos ? head : head.substr(split);

  Rational imag;
  if (imag_part.empty() || imag_part == "+") imag = Rational(1L);
  else if (imag_part == "-") imag = Rational(-1L);
  else imag = Rational::parse(imag_part);
  try {
    return {real_part.empty() ? Rational() : Rational::parse(real_part), imag};
  } catch (const ParseError&) {
    throw ParseError("malformed Gaussian rational '" + std::string(text) + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.str(); }

}  // namespace cyclerep
