#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polycurve/exact.hpp"

namespace polycurve {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;
using ExponentVector = IntegerVector;

/// Complex number with exact rational real and imaginary parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

  bool is_zero() const { return re == 0 && im == 0; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational den = b.re * b.re + b.im * b.im;
    if (den == 0) throw std::domain_error("division by zero coefficient");
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
  }
  GaussianRational operator-() const { return {-re, -im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// Per-field hooks used by the polynomial template and the parser.
template <class C>
struct CoefficientTraits;

template <>
struct CoefficientTraits<Complex> {
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex imaginary_unit() { return {0.0, 1.0}; }
  static bool is_zero(const Complex& c) { return c == Complex(0.0, 0.0); }
  /// Post-arithmetic cleanup threshold.
  static bool is_negligible(const Complex& c) { return std::abs(c) <= 1e-12; }
  static Complex from_literal(std::string_view digits);
  static std::string format(const Complex& c);
  static Complex to_complex(const Complex& c) { return c; }
};

template <>
struct CoefficientTraits<GaussianRational> {
  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return {1}; }
  static GaussianRational imaginary_unit() { return {0, 1}; }
  static bool is_zero(const GaussianRational& c) { return c.is_zero(); }
  static bool is_negligible(const GaussianRational& c) { return c.is_zero(); }
  static GaussianRational from_literal(std::string_view digits);
  static std::string format(const GaussianRational& c);
  static Complex to_complex(const GaussianRational& c) {
    return {c.re.get_d(), c.im.get_d()};
  }
};

/// Sparse Laurent polynomial in n variables. Terms are keyed by exponent
/// vector, so iteration order is lexicographic on exponents and no
/// exponent occurs twice. Zero coefficients are never stored.
template <class C>
class BasicLaurentPolynomial {
 public:
  using Coefficient = C;
  using Traits = CoefficientTraits<C>;
  using TermMap = std::map<ExponentVector, C>;

  explicit BasicLaurentPolynomial(std::size_t n = 0) : n_(n) {}

  static BasicLaurentPolynomial constant(std::size_t n, const C& c) {
    BasicLaurentPolynomial p(n);
    p.add_term(ExponentVector(n, 0), c);
    return p;
  }
  static BasicLaurentPolynomial monomial(ExponentVector e, const C& c) {
    BasicLaurentPolynomial p(e.size());
    p.add_term(std::move(e), c);
    return p;
  }
  static BasicLaurentPolynomial variable(std::size_t n, std::size_t i) {
    ExponentVector e(n, 0);
    e.at(i) = 1;
    return monomial(std::move(e), Traits::one());
  }

  std::size_t dimension() const { return n_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  /// Accumulates c·x^e; the term disappears if the sum is exactly zero.
  void add_term(ExponentVector e, const C& c) {
    if (e.size() != n_) throw std::invalid_argument("exponent length does not match polynomial dimension");
    if (Traits::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second = it->second + c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Drops terms whose coefficients fall under the field's cleanup threshold.
  void cleanup() {
    std::erase_if(terms_, [](const auto& t) { return Traits::is_negligible(t.second); });
  }

  friend bool operator==(const BasicLaurentPolynomial& a, const BasicLaurentPolynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t n_;
  TermMap terms_;
};

using Polynomial = BasicLaurentPolynomial<Complex>;
using ExactPolynomial = BasicLaurentPolynomial<GaussianRational>;

// Raw arithmetic: exact cancellation only. The operators below add the
// field's cleanup pass on top.
template <class C>
BasicLaurentPolynomial<C> add(const BasicLaurentPolynomial<C>& a, const BasicLaurentPolynomial<C>& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("dimension mismatch");
  BasicLaurentPolynomial<C> r = a;
  for (const auto& [e, c] : b.terms()) r.add_term(e, c);
  return r;
}

template <class C>
BasicLaurentPolynomial<C> scale(const BasicLaurentPolynomial<C>& a, const C& s) {
  BasicLaurentPolynomial<C> r(a.dimension());
  for (const auto& [e, c] : a.terms()) r.add_term(e, c * s);
  return r;
}

template <class C>
BasicLaurentPolynomial<C> multiply(const BasicLaurentPolynomial<C>& a, const BasicLaurentPolynomial<C>& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("dimension mismatch");
  BasicLaurentPolynomial<C> r(a.dimension());
  ExponentVector e(a.dimension());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

template <class C>
BasicLaurentPolynomial<C> power(const BasicLaurentPolynomial<C>& a, unsigned k) {
  auto r = BasicLaurentPolynomial<C>::constant(a.dimension(), CoefficientTraits<C>::one());
  for (unsigned i = 0; i < k; ++i) r = multiply(r, a);
  return r;
}

template <class C>
BasicLaurentPolynomial<C> operator+(const BasicLaurentPolynomial<C>& a, const BasicLaurentPolynomial<C>& b) {
  auto r = add(a, b);
  r.cleanup();
  return r;
}

template <class C>
BasicLaurentPolynomial<C> operator-(const BasicLaurentPolynomial<C>& a, const BasicLaurentPolynomial<C>& b) {
  auto r = add(a, scale(b, C(0) - CoefficientTraits<C>::one()));
  r.cleanup();
  return r;
}

template <class C>
BasicLaurentPolynomial<C> operator*(const BasicLaurentPolynomial<C>& a, const BasicLaurentPolynomial<C>& b) {
  auto r = multiply(a, b);
  r.cleanup();
  return r;
}

/// Ordered list of polynomials sharing the same variables.
template <class C>
class BasicPolySystem {
 public:
  using PolynomialType = BasicLaurentPolynomial<C>;

  BasicPolySystem() = default;
  BasicPolySystem(std::size_t n, std::vector<PolynomialType> polys) : n_(n), polys_(std::move(polys)) {
    for (const auto& p : polys_) {
      if (p.dimension() != n_) throw std::invalid_argument("polynomial dimension differs from system dimension");
    }
  }

  std::size_t variables() const { return n_; }
  std::size_t equations() const { return polys_.size(); }
  const PolynomialType& operator[](std::size_t i) const { return polys_.at(i); }
  const std::vector<PolynomialType>& polynomials() const { return polys_; }
  auto begin() const { return polys_.begin(); }
  auto end() const { return polys_.end(); }

  friend bool operator==(const BasicPolySystem&, const BasicPolySystem&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<PolynomialType> polys_;
};

using PolySystem = BasicPolySystem<Complex>;
using ExactPolySystem = BasicPolySystem<GaussianRational>;

/// Syntax error with the byte offset where parsing stopped.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses one polynomial in x0..x{n-1}. Grammar:
///   poly   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*      division by constants only
///   factor := number | 'i' | var ['^' ['-'] digits] | '(' poly ')' ['^' digits]
/// Whitespace is ignored.
template <class C = Complex>
BasicLaurentPolynomial<C> parse_polynomial(std::string_view text, std::size_t n);

/// Parses a system file: "n [N]" followed by N semicolon-terminated polynomials.
template <class C = Complex>
BasicPolySystem<C> parse_system(std::string_view text);

PolySystem read_system_file(const std::string& path);

/// Canonical text form; parse_polynomial(to_string(f), n) == f.
template <class C>
std::string to_string(const BasicLaurentPolynomial<C>& f);

template <class C>
std::string to_string(const BasicPolySystem<C>& sys);

/// Equation k (1 ≤ k < n) sums the n cyclic products of k consecutive
/// variables; the last equation is x0·x1···x{n-1} − 1.
PolySystem cyclic_system(std::size_t n);

template <class C>
std::vector<ExponentVector> support(const BasicLaurentPolynomial<C>& f) {
  std::vector<ExponentVector> s;
  s.reserve(f.size());
  for (const auto& [e, c] : f.terms()) s.push_back(e);
  return s;
}

template <class C>
std::vector<std::vector<ExponentVector>> supports(const BasicPolySystem<C>& sys) {
  std::vector<std::vector<ExponentVector>> s;
  for (const auto& f : sys) s.push_back(support(f));
  return s;
}

/// z^k for integer k by repeated squaring; throws on 0^k with k < 0.
Complex integer_power(Complex z, std::int64_t k);

Complex evaluate(const Polynomial& f, std::span<const Complex> point);
ComplexVector evaluate(const PolySystem& sys, std::span<const Complex> point);

/// Largest modulus among the equations' values.
double residual(const PolySystem& sys, std::span<const Complex> point);

Polynomial to_approximate(const ExactPolynomial& f);
PolySystem to_approximate(const ExactPolySystem& sys);

/// Largest total degree over the terms (Laurent exponents counted as given).
std::int64_t total_degree(const Polynomial& f);

}  // namespace polycurve
