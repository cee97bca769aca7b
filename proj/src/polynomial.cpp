#include "cubal/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace cubal {

Polynomial::Polynomial(Coeff constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::of(std::initializer_list<long long> coeffs) {
  std::vector<Coeff> c;
  c.reserve(coeffs.size());
  for (long long v : coeffs) c.emplace_back(v);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::monomial(int degree, Coeff c) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  if (c == 0) return Polynomial();
  std::vector<Coeff> v(static_cast<size_t>(degree) + 1);
  v.back() = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<int> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

Coeff Polynomial::coeff(int i) const {
  if (i < 0 || static_cast<size_t>(i) >= coeffs_.size()) return Coeff(0);
  return coeffs_[static_cast<size_t>(i)];
}

Polynomial Polynomial::operator-() const {
  std::vector<Coeff> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  std::vector<Coeff> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < coeffs_.size()) out[i] += coeffs_[i];
    if (i < rhs.coeffs_.size()) out[i] += rhs.coeffs_[i];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return Polynomial();
  std::vector<Coeff> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Coeff& scalar) const {
  if (scalar == 0) return Polynomial();
  std::vector<Coeff> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * scalar;
  return Polynomial(std::move(out));
}

Coeff Polynomial::eval(const Coeff& at) const {
  Coeff acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Coeff& c = coeffs_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Coeff mag = abs(c);
    if (mag != 1 || i == 0) os << mag.str();
    if (i == 1) os << "x";
    if (i > 1) os << "x^" << i;
  }
  return os.str();
}

Polynomial power(const Polynomial& p, int n) {
  if (n < 0) throw std::invalid_argument("power: negative exponent");
  Polynomial acc = Polynomial::one();
  Polynomial base = p;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

Polynomial reflect(const Polynomial& p, int d) {
  if (d < 0) throw std::invalid_argument("degree-exceeds-bound: reflect window is negative");
  if (p.is_zero()) return p;
  if (*p.degree() > d)
    throw std::invalid_argument("degree-exceeds-bound: reflect(p, " + std::to_string(d) +
                                ") with deg(p) = " + std::to_string(*p.degree()));
  std::vector<Coeff> out(static_cast<size_t>(d) + 1);
  for (int i = 0; i <= *p.degree(); ++i) out[static_cast<size_t>(d - i)] = p.coeff(i);
  return Polynomial(std::move(out));
}

Polynomial exact_div(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw std::invalid_argument("exact_div: division by zero");
  if (p.is_zero()) return Polynomial();
  if (*p.degree() < *q.degree())
    throw std::domain_error("nonzero-remainder: deg(" + p.to_string() + ") < deg(" +
                            q.to_string() + ")");
  std::vector<Coeff> rem = p.coeffs();
  const int dq = *q.degree();
  const Coeff& lead = q.coeff(dq);
  std::vector<Coeff> quot(rem.size() - static_cast<size_t>(dq));
  for (int i = static_cast<int>(rem.size()) - 1; i >= dq; --i) {
    const Coeff& top = rem[static_cast<size_t>(i)];
    if (top == 0) continue;
    if (top % lead != 0)
      throw std::domain_error("nonzero-remainder: (" + p.to_string() + ") / (" + q.to_string() +
                              ") is not an integer polynomial");
    Coeff factor = top / lead;
    for (int j = 0; j <= dq; ++j) rem[static_cast<size_t>(i - dq + j)] -= factor * q.coeff(j);
    quot[static_cast<size_t>(i - dq)] = std::move(factor);
  }
  for (const Coeff& c : rem)
    if (c != 0)
      throw std::domain_error("nonzero-remainder: (" + p.to_string() + ") / (" + q.to_string() +
                              ") leaves a remainder");
  return Polynomial(std::move(quot));
}

Polynomial rational_substitute(const Polynomial& p, const Polynomial& num,
                               const Polynomial& den, int m) {
  if (m < 0) throw std::invalid_argument("degree-exceeds-bound: negative clearing exponent");
  if (!p.is_zero() && *p.degree() > m)
    throw std::invalid_argument("degree-exceeds-bound: rational_substitute with deg(p) = " +
                                std::to_string(*p.degree()) + " > m = " + std::to_string(m));
  Polynomial out;
  for (int i = 0; i <= m; ++i) {
    Coeff c = p.coeff(i);
    if (c == 0) continue;
    out = out + power(num, i) * power(den, m - i) * c;
  }
  return out;
}

bool is_palindromic(const Polynomial& p, int d, std::string* diagnostic) {
  if (p.is_zero()) return true;
  if (d < 0 || *p.degree() > d) {
    if (diagnostic)
      *diagnostic = "degree " + std::to_string(*p.degree()) +
                    " exceeds the palindromy window " + std::to_string(d);
    return false;
  }
  return reflect(p, d) == p;
}

bool is_nonnegative(const Polynomial& p) {
  for (const Coeff& c : p.coeffs())
    if (c < 0) return false;
  return true;
}

}  // namespace cubal
