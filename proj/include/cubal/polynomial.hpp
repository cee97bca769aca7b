#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace cubal {

/** Exact arbitrary-precision integer coefficient type. */
using Coeff = boost::multiprecision::cpp_int;

/**
 * Dense univariate polynomial with exact integer coefficients.
 *
 * Coefficients are stored lowest degree first and kept canonical: trailing
 * zero coefficients are trimmed, and the zero polynomial stores nothing.
 * The degree of the zero polynomial is reported as an empty optional, never
 * as an integer sentinel.
 *
 * Instances are immutable values; all operations return new polynomials.
 */
class Polynomial {
public:
  /** The zero polynomial. */
  Polynomial() = default;

  /** Constant polynomial. */
  explicit Polynomial(Coeff constant);

  /** From dense coefficients, lowest degree first.  Trailing zeros are trimmed. */
  explicit Polynomial(std::vector<Coeff> coeffs);

  /** Convenience for literal coefficient lists, lowest degree first. */
  static Polynomial of(std::initializer_list<long long> coeffs);

  /** The monomial c * x^degree. */
  static Polynomial monomial(int degree, Coeff c = 1);

  static Polynomial one() { return Polynomial(Coeff(1)); }
  static Polynomial x() { return monomial(1); }

  bool is_zero() const { return coeffs_.empty(); }

  /** Degree, or an empty optional for the zero polynomial. */
  std::optional<int> degree() const;

  /** Dense coefficients, lowest degree first; empty for the zero polynomial. */
  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  /** Coefficient of x^i; zero outside the stored range (i may exceed the degree). */
  Coeff coeff(int i) const;

  bool operator==(const Polynomial&) const = default;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator*(const Coeff& scalar) const;

  /** Evaluate at an integer point. */
  Coeff eval(const Coeff& at) const;

  /** Human-readable form like "4 + 8x + 4x^2"; "0" for the zero polynomial. */
  std::string to_string() const;

private:
  void trim();

  std::vector<Coeff> coeffs_;
};

inline Polynomial operator*(const Coeff& scalar, const Polynomial& p) { return p * scalar; }

/** p^n for n >= 0 (p^0 = 1, including for the zero polynomial). */
Polynomial power(const Polynomial& p, int n);

/**
 * Reflection x^d * p(1/x), i.e. the coefficient sequence reversed inside
 * degree window [0, d].
 *
 * Requires deg(p) <= d; throws std::invalid_argument ("degree-exceeds-bound")
 * otherwise.  reflect(0, d) = 0.
 */
Polynomial reflect(const Polynomial& p, int d);

/**
 * Exact quotient p / q.
 *
 * Throws std::invalid_argument on division by zero and std::domain_error
 * ("nonzero-remainder") when q does not divide p exactly over the integers.
 * A nonzero remainder signals a violated identity upstream, so callers never
 * silently truncate.
 */
Polynomial exact_div(const Polynomial& p, const Polynomial& q);

/**
 * Clears denominators in p(num/den): returns sum_i p_i * num^i * den^(m-i).
 *
 * Requires deg(p) <= m; throws std::invalid_argument ("degree-exceeds-bound")
 * otherwise.
 */
Polynomial rational_substitute(const Polynomial& p, const Polynomial& num,
                               const Polynomial& den, int m);

/**
 * True iff reflect(p, d) == p.  Degree overflow (deg(p) > d) is reported as
 * false; when `diagnostic` is non-null it receives an explanation.
 */
bool is_palindromic(const Polynomial& p, int d, std::string* diagnostic = nullptr);

/** True iff every coefficient is >= 0 (vacuously true for the zero polynomial). */
bool is_nonnegative(const Polynomial& p);

}  // namespace cubal
