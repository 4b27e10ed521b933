#include "qpluck/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace qpluck {

namespace {

void trim(std::vector<Coeff>& c) {
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  if (c.empty()) c.push_back(Coeff(0));
}

}  // namespace

Poly::Poly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) {
  for (const auto& x : c_) {
    if (x < 0) throw InvalidInput("polynomial coefficient must be nonnegative");
  }
  trim(c_);
}

Poly Poly::from_csv(const std::string& text) {
  std::vector<Coeff> c;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    // strip surrounding whitespace
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw InvalidInput("empty coefficient in CSV");
    tok = tok.substr(b, e - b + 1);
    mpz_class v;
    if (v.set_str(tok, 10) != 0) throw InvalidInput("bad coefficient: " + tok);
    c.push_back(std::move(v));
  }
  if (c.empty()) throw InvalidInput("empty coefficient list");
  return Poly(std::move(c));
}

const Coeff& Poly::operator[](int i) const {
  static const Coeff kZero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(i)];
}

Poly Poly::shifted(int k) const {
  if (k < 0) throw InvalidInput("negative shift");
  if (is_zero() || k == 0) return *this;
  std::vector<Coeff> r(c_.size() + static_cast<size_t>(k), Coeff(0));
  std::copy(c_.begin(), c_.end(), r.begin() + k);
  return Poly(std::move(r));
}

Coeff Poly::eval_one() const {
  Coeff s(0);
  for (const auto& x : c_) s += x;
  return s;
}

std::string Poly::to_csv() const {
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ',';
    out += c_[i].get_str();
  }
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Coeff> r(std::max(x.size(), y.size()), Coeff(0));
  for (size_t i = 0; i < x.size(); ++i) r[i] += x[i];
  for (size_t i = 0; i < y.size(); ++i) r[i] += y[i];
  return Poly(std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly::zero();
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Coeff> r(x.size() + y.size() - 1, Coeff(0));
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
  }
  return Poly(std::move(r));
}

Poly poly_divexact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InvalidInput("division by zero polynomial");
  if (a.is_zero()) return Poly::zero();
  if (a.degree() < b.degree()) throw NotDivisible("degree too small");

  // Long division from the top; works over signed integers internally.
  std::vector<Coeff> rem = a.coeffs();
  const auto& d = b.coeffs();
  const Coeff& lead = d.back();
  const int qdeg = a.degree() - b.degree();
  std::vector<Coeff> quot(static_cast<size_t>(qdeg) + 1, Coeff(0));

  for (int i = qdeg; i >= 0; --i) {
    Coeff& top = rem[static_cast<size_t>(i + b.degree())];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw NotDivisible("leading coefficient does not divide");
    Coeff qi = top / lead;
    if (qi < 0) throw NotDivisible("quotient coefficient would be negative");
    quot[static_cast<size_t>(i)] = qi;
    for (size_t j = 0; j < d.size(); ++j)
      rem[static_cast<size_t>(i) + j] -= qi * d[j];
  }
  for (const auto& x : rem) {
    if (x != 0) throw NotDivisible("nonzero remainder");
  }
  return Poly(std::move(quot));
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  return os << p.to_csv();
}

}  // namespace qpluck
