#ifndef CYCLEREP_SCALAR_HPP
#define CYCLEREP_SCALAR_HPP

// Exact scalars. Rational is a thin value wrapper over GMP's mpq_class so
// that arithmetic never leaks expression templates into generic code;
// GaussianRational is Q(i) built on top of it.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "cyclerep/errors.hpp"

namespace cyclerep {

class Rational {
 public:
  static constexpr std::string_view kFieldName = "Q";

  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  static Rational from_mpq(mpq_class v) {
    v.canonicalize();
    return Rational(Canonical{}, std::move(v));
  }

  /// Accepts "n", "-n", "p/q"; q must be positive after sign handling and nonzero.
  static Rational parse(std::string_view text);

  static Rational zero() { return {}; }
  static Rational one() { return Rational(1L); }

  [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
  [[nodiscard]] bool is_one() const { return v_ == 1; }
  [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(v_); }
  [[nodiscard]] const mpq_class& value() const { return v_; }
  [[nodiscard]] mpz_class numerator() const { return v_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return v_.get_den(); }
  /// Bit length of numerator plus denominator; a cheap size measure for pivot selection.
  [[nodiscard]] std::size_t height() const;
  [[nodiscard]] std::string str() const { return v_.get_str(); }

  [[nodiscard]] Rational inverse() const;
  [[nodiscard]] Rational conj() const { return *this; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(Canonical{}, mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// a·b added into *this without a temporary.
  void add_product(const Rational& a, const Rational& b);
  /// *this -= a·b.
  void sub_product(const Rational& a, const Rational& b);

 private:
  struct Canonical {};
  Rational(Canonical, mpq_class v) : v_(std::move(v)) {}

  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Elements a + b·i of Q(i).
class GaussianRational {
 public:
  static constexpr std::string_view kFieldName = "Q(i)";

  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  /// Accepts "a", "c*i", "i", "-i", "a+c*i", "a-c*i" with a, c rationals "p/q".
  static GaussianRational parse(std::string_view text);

  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return GaussianRational(1L); }
  static GaussianRational imaginary_unit() { return {Rational(0L), Rational(1L)}; }

  [[nodiscard]] const Rational& re() const { return re_; }
  [[nodiscard]] const Rational& im() const { return im_; }
  [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  [[nodiscard]] bool is_one() const { return re_.is_one() && im_.is_zero(); }
  [[nodiscard]] std::size_t height() const { return re_.height() + im_.height(); }
  [[nodiscard]] std::string str() const;

  [[nodiscard]] GaussianRational inverse() const;
  [[nodiscard]] GaussianRational conj() const { return {re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

  void add_product(const GaussianRational& a, const GaussianRational& b) { *this += a * b; }
  void sub_product(const GaussianRational& a, const GaussianRational& b) { *this -= a * b; }

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& g);

/// The operations the elimination code needs from a scalar type.
template <class F>
concept ExactField = std::regular<F> && std::constructible_from<F, long> &&
                     requires(F a, const F& b, std::string_view text) {
                       { a + b } -> std::same_as<F>;
                       { a - b } -> std::same_as<F>;
                       { a * b } -> std::same_as<F>;
                       { a / b } -> std::same_as<F>;
                       { -a } -> std::same_as<F>;
                       { b.is_zero() } -> std::convertible_to<bool>;
                       { b.is_one() } -> std::convertible_to<bool>;
                       { b.inverse() } -> std::same_as<F>;
                       { b.height() } -> std::convertible_to<std::size_t>;
                       { b.str() } -> std::same_as<std::string>;
                       { F::parse(text) } -> std::same_as<F>;
                       a.sub_product(b, b);
                       F::kFieldName;
                     };

static_assert(ExactField<Rational>);
static_assert(ExactField<GaussianRational>);

}  // namespace cyclerep

#endif  // CYCLEREP_SCALAR_HPP
