#include "polycurve/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace polycurve {

std::int64_t content(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g;
}

IntegerVector primitive(IntegerVector v) {
  std::int64_t g = content(v);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// ---------------------------------------------------------------------------
// Coefficient literals and formatting

Complex CoefficientTraits<Complex>::from_literal(std::string_view digits) {
  std::string s(digits);
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) throw std::invalid_argument("bad numeric literal '" + s + "'");
  return {v, 0.0};
}

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Exact value of a decimal literal such as "-12.5e-3".
Rational decimal_to_rational(std::string_view digits) {
  std::string mantissa;
  long exponent = 0;
  std::size_t i = 0;
  bool seen_point = false;
  long fraction_digits = 0;
  for (; i < digits.size(); ++i) {
    char ch = digits[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      mantissa.push_back(ch);
      if (seen_point) ++fraction_digits;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (mantissa.empty()) throw std::invalid_argument("bad numeric literal");
  if (i < digits.size()) {
    if (digits[i] != 'e' && digits[i] != 'E') throw std::invalid_argument("bad numeric literal");
    ++i;
    std::string ex(digits.substr(i));
    if (ex.empty()) throw std::invalid_argument("bad numeric literal");
    auto [p, ec] = std::from_chars(ex.data() + (ex[0] == '+' ? 1 : 0), ex.data() + ex.size(), exponent);
    if (ec != std::errc() || p != ex.data() + ex.size()) throw std::invalid_argument("bad numeric literal");
  }
  Rational r(Integer(mantissa), 1);
  long shift = exponent - fraction_digits;
  Integer ten = 10;
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(std::labs(shift)));
  if (shift >= 0) {
    r *= scale;
  } else {
    r /= scale;
  }
  r.canonicalize();
  return r;
}

}  // namespace

std::string CoefficientTraits<Complex>::format(const Complex& c) {
  if (c.imag() == 0.0) return format_double(c.real());
  if (c.real() == 0.0) return format_double(c.imag()) + "*i";
  std::string im = format_double(c.imag());
  if (im.front() != '-') im = "+" + im;
  return "(" + format_double(c.real()) + im + "*i)";
}

GaussianRational CoefficientTraits<GaussianRational>::from_literal(std::string_view digits) {
  return {decimal_to_rational(digits), 0};
}

std::string CoefficientTraits<GaussianRational>::format(const GaussianRational& c) {
  if (c.im == 0) return c.re.get_str();
  if (c.re == 0) return c.im.get_str() + "*i";
  std::string im = c.im.get_str();
  if (im.front() != '-') im = "+" + im;
  return "(" + c.re.get_str() + im + "*i)";
}

// ---------------------------------------------------------------------------
// Parser

namespace {

template <class C>
class Parser {
 public:
  using Poly = BasicLaurentPolynomial<C>;
  using Traits = CoefficientTraits<C>;

  Parser(std::string_view text, std::size_t n) : text_(text), n_(n) {}

  Poly parse_all() {
    Poly p = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

  Poly parse_sum() {
    skip_space();
    Poly result(n_);
    bool first = true;
    while (true) {
      skip_space();
      bool negate = false;
      if (peek() == '+' || peek() == '-') {
        negate = peek() == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      Poly t = parse_term();
      result = add(result, negate ? scale(t, C(0) - Traits::one()) : t);
      first = false;
      skip_space();
      if (peek() != '+' && peek() != '-') break;
    }
    return result;
  }

 private:
  Poly parse_term() {
    Poly t = parse_factor();
    while (true) {
      skip_space();
      char ch = peek();
      if (ch == '*') {
        ++pos_;
        t = multiply(t, parse_factor());
      } else if (ch == '/') {
        ++pos_;
        std::size_t at = pos_;
        Poly d = parse_factor();
        if (d.size() != 1 || d.terms().begin()->first != ExponentVector(n_, 0)) {
          pos_ = at;
          fail("division is only allowed by a nonzero constant");
        }
        C inv = Traits::one() / d.terms().begin()->second;
        t = scale(t, inv);
      } else {
        break;
      }
    }
    return t;
  }

  Poly parse_factor() {
    skip_space();
    char ch = peek();
    if (ch == '(') {
      ++pos_;
      Poly inner = parse_sum();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      skip_space();
      if (peek() == '^') {
        ++pos_;
        skip_space();
        std::int64_t k = parse_exponent();
        if (k < 0) {
          if (inner.size() != 1) fail("negative power of a non-monomial");
          const auto& [e, c] = *inner.terms().begin();
          ExponentVector ne(e.size());
          for (std::size_t j = 0; j < e.size(); ++j) ne[j] = e[j] * k;
          C cc = Traits::one();
          for (std::int64_t j = 0; j < -k; ++j) cc = cc / c;
          return Poly::monomial(std::move(ne), cc);
        }
        return power(inner, static_cast<unsigned>(k));
      }
      return inner;
    }
    if (ch == 'x') {
      std::size_t at = pos_;
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index after 'x'");
      std::size_t idx = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        idx = idx * 10 + static_cast<std::size_t>(text_[pos_] - '0');
        ++pos_;
      }
      if (idx >= n_) {
        pos_ = at;
        fail("unknown variable x" + std::to_string(idx) + " (system has " + std::to_string(n_) + " variables)");
      }
      std::int64_t k = 1;
      skip_space();
      if (peek() == '^') {
        ++pos_;
        skip_space();
        k = parse_exponent();
      }
      ExponentVector e(n_, 0);
      e[idx] = k;
      return Poly::monomial(std::move(e), Traits::one());
    }
    if (ch == 'i' || ch == 'I') {
      ++pos_;
      return Poly::constant(n_, Traits::imaginary_unit());
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') ++pos_;
      if (peek() == 'e' || peek() == 'E') {
        std::size_t save = pos_;
        ++pos_;
        if (peek() == '+' || peek() == '-') ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
          pos_ = save;
        } else {
          while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
      }
      C value;
      try {
        value = Traits::from_literal(text_.substr(start, pos_ - start));
      } catch (const std::invalid_argument&) {
        pos_ = start;
        fail("malformed number");
      }
      Poly p(n_);
      p.add_term(ExponentVector(n_, 0), value);
      return p;
    }
    if (ch == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, ch) + "'");
  }

  std::int64_t parse_exponent() {
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
      skip_space();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer exponent");
    std::int64_t k = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      k = k * 10 + (text_[pos_] - '0');
      ++pos_;
      if (k > 1'000'000) fail("exponent too large");
    }
    return negative ? -k : k;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class C>
BasicLaurentPolynomial<C> parse_polynomial(std::string_view text, std::size_t n) {
  return Parser<C>(text, n).parse_all();
}

template <class C>
BasicPolySystem<C> parse_system(std::string_view text) {
  std::size_t line_end = text.find('\n');
  std::string_view header = text.substr(0, line_end);
  std::istringstream hs{std::string(header)};
  long n = -1;
  long count = -1;
  if (!(hs >> n) || n < 1) throw ParseError("header must start with the number of variables", 0);
  if (!(hs >> count)) count = n;
  std::string rest;
  if (hs >> rest) throw ParseError("unexpected token in header", header.size());
  if (count < 1) throw ParseError("a system needs at least one equation", 0);
  if (line_end == std::string_view::npos) throw ParseError("missing polynomials after header", header.size());

  std::vector<BasicLaurentPolynomial<C>> polys;
  std::size_t offset = line_end + 1;
  for (long k = 0; k < count; ++k) {
    std::size_t semi = text.find(';', offset);
    if (semi == std::string_view::npos) {
      throw ParseError("expected " + std::to_string(count) + " semicolon-terminated polynomials, found " +
                           std::to_string(k),
                       text.size());
    }
    try {
      polys.push_back(parse_polynomial<C>(text.substr(offset, semi - offset), static_cast<std::size_t>(n)));
    } catch (const ParseError& e) {
      throw ParseError(std::string("polynomial ") + std::to_string(k + 1) + ": " + e.what(), offset + e.position());
    }
    offset = semi + 1;
  }
  for (std::size_t i = offset; i < text.size(); ++i) {
    if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      throw ParseError("trailing input after the last polynomial (check N in the header)", i);
    }
  }
  return BasicPolySystem<C>(static_cast<std::size_t>(n), std::move(polys));
}

template BasicLaurentPolynomial<Complex> parse_polynomial<Complex>(std::string_view, std::size_t);
template BasicLaurentPolynomial<GaussianRational> parse_polynomial<GaussianRational>(std::string_view, std::size_t);
template BasicPolySystem<Complex> parse_system<Complex>(std::string_view);
template BasicPolySystem<GaussianRational> parse_system<GaussianRational>(std::string_view);

PolySystem read_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open system file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_system<Complex>(buf.str());
}

// ---------------------------------------------------------------------------
// Printing

template <class C>
std::string to_string(const BasicLaurentPolynomial<C>& f) {
  using Traits = CoefficientTraits<C>;
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coef = Traits::format(c);
    bool negative = coef.front() == '-';
    if (negative) coef.erase(0, 1);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mono.empty()) {
      out += coef;
    } else if (coef == "1") {
      out += mono;
    } else {
      out += coef + "*" + mono;
    }
    first = false;
  }
  return out;
}

template <class C>
std::string to_string(const BasicPolySystem<C>& sys) {
  std::string out = std::to_string(sys.variables()) + " " + std::to_string(sys.equations()) + "\n";
  for (const auto& f : sys) out += to_string(f) + ";\n";
  return out;
}

template std::string to_string<Complex>(const BasicLaurentPolynomial<Complex>&);
template std::string to_string<GaussianRational>(const BasicLaurentPolynomial<GaussianRational>&);
template std::string to_string<Complex>(const BasicPolySystem<Complex>&);
template std::string to_string<GaussianRational>(const BasicPolySystem<GaussianRational>&);

// ---------------------------------------------------------------------------

PolySystem cyclic_system(std::size_t n) {
  if (n < 1) throw std::invalid_argument("cyclic_system needs n >= 1");
  std::vector<Polynomial> polys;
  for (std::size_t k = 1; k < n; ++k) {
    Polynomial f(n);
    for (std::size_t i = 0; i < n; ++i) {
      ExponentVector e(n, 0);
      for (std::size_t j = 0; j < k; ++j) e[(i + j) % n] = 1;
      f.add_term(std::move(e), 1.0);
    }
    polys.push_back(std::move(f));
  }
  Polynomial last(n);
  last.add_term(ExponentVector(n, 1), 1.0);
  last.add_term(ExponentVector(n, 0), -1.0);
  polys.push_back(std::move(last));
  return PolySystem(n, std::move(polys));
}

Complex integer_power(Complex z, std::int64_t k) {
  if (k < 0) {
    if (z == Complex(0.0, 0.0)) throw std::domain_error("negative power of zero");
    z = 1.0 / z;
    k = -k;
  }
  Complex r(1.0, 0.0);
  while (k > 0) {
    if (k & 1) r *= z;
    z *= z;
    k >>= 1;
  }
  return r;
}

Complex evaluate(const Polynomial& f, std::span<const Complex> point) {
  if (point.size() != f.dimension()) throw std::invalid_argument("evaluate: point has wrong dimension");
  Complex sum(0.0, 0.0);
  for (const auto& [e, c] : f.terms()) {
    Complex m = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) m *= integer_power(point[i], e[i]);
    }
    sum += m;
  }
  return sum;
}

ComplexVector evaluate(const PolySystem& sys, std::span<const Complex> point) {
  ComplexVector out;
  out.reserve(sys.equations());
  for (const auto& f : sys) out.push_back(evaluate(f, point));
  return out;
}

double residual(const PolySystem& sys, std::span<const Complex> point) {
  double r = 0.0;
  for (const auto& f : sys) r = std::max(r, std::abs(evaluate(f, point)));
  return r;
}

Polynomial to_approximate(const ExactPolynomial& f) {
  Polynomial p(f.dimension());
  for (const auto& [e, c] : f.terms()) p.add_term(e, CoefficientTraits<GaussianRational>::to_complex(c));
  return p;
}

PolySystem to_approximate(const ExactPolySystem& sys) {
  std::vector<Polynomial> polys;
  for (const auto& f : sys) polys.push_back(to_approximate(f));
  return PolySystem(sys.variables(), std::move(polys));
}

std::int64_t total_degree(const Polynomial& f) {
  std::int64_t d = 0;
  for (const auto& [e, c] : f.terms()) {
    std::int64_t s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

}  // namespace polycurve
