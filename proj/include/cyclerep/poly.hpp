#ifndef CYCLEREP_POLY_HPP
#define CYCLEREP_POLY_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cyclerep/scalar.hpp"

namespace cyclerep {

/// Univariate polynomial, coefficients lowest degree first, no trailing zeros.
template <ExactField F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(const F& constant) {  // NOLINT(google-explicit-constructor)
    if (!constant.is_zero()) c_.push_back(constant);
  }

  /// x - a
  static Poly linear(const F& a) { return Poly(std::vector<F>{-a, F(1L)}); }
  static Poly monomial(std::size_t degree, const F& coeff = F(1L)) {
    std::vector<F> c(degree + 1);
    c[degree] = coeff;
    return Poly(std::move(c));
  }

  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] long degree() const { return static_cast<long>(c_.size()) - 1; }
  [[nodiscard]] const std::vector<F>& coeffs() const { return c_; }
  [[nodiscard]] F coeff(std::size_t k) const { return k < c_.size() ? c_[k] : F(); }
  [[nodiscard]] const F& leading() const { return c_.back(); }
  [[nodiscard]] bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

  [[nodiscard]] std::size_t height() const {
    std::size_t h = 0;
    for (const auto& x : c_) h += x.height();
    return h;
  }

  [[nodiscard]] Poly monic() const {
    if (is_zero()) return {};
    Poly out = *this;
    const F inv = leading().inverse();
    for (auto& x : out.c_) x *= inv;
    return out;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return Poly() - a; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j].add_product(a.c_[i], b.c_[j]);
    }
    return Poly(std::move(c));
  }
  friend bool operator==(const Poly&, const Poly&) = default;

  /// "x^2 - 3/2*x + 1"; coefficients in Q(i) are parenthesised when they have two parts.
  [[nodiscard]] std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const F& a = c_[k];
      if (a.is_zero()) continue;
      std::string s = a.str();
      bool negative = s.front() == '-' && s.find_first_of("+-", 1) == std::string::npos;
      if (negative) s.erase(0, 1);
      if (s.find_first_of("+-", 1) != std::string::npos) s = "(" + s + ")";
      if (out.empty()) out = negative ? "-" : "";
      else out += negative ? " - " : " + ";
      if (k == 0) out += s;
      else {
        if (s != "1") out += s + "*";
        out += k == 1 ? "x" : "x^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<F> c_;
};

/// Quotient and remainder of a by a nonzero b.
template <ExactField F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<F>(), a};
  std::vector<F> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<F> quot(rem.size() - db);
  const F inv_lead = b.leading().inverse();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    const F q = rem[k] * inv_lead;
    quot[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j].sub_product(q, b.coeffs()[j]);
  }
  rem.resize(db);
  return {Poly<F>(std::move(quot)), Poly<F>(std::move(rem))};
}

template <ExactField F>
bool divides(const Poly<F>& d, const Poly<F>& a) {
  return divmod(a, d).second.is_zero();
}

}  // namespace cyclerep

#endif  // CYCLEREP_POLY_HPP
