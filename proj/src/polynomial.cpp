#include "duval/polynomial.hpp"

#include <ostream>
#include <sstream>

#include "duval/errors.hpp"

namespace duval {

namespace {

void check_exponent(const Exponent& e) {
  if (e.a > kMaxExponent || e.b > kMaxExponent || e.c > kMaxExponent) {
    throw ParameterError("polynomial exponent exceeds 2^16");
  }
}

// Exact integer power by squaring; keeps evaluation deterministic.
Complex ipow(Complex base, std::uint32_t exponent) {
  Complex result{1.0, 0.0};
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

}  // namespace

std::uint32_t Exponent::operator[](Variable v) const {
  switch (v) {
    case Variable::x: return a;
    case Variable::y: return b;
    case Variable::z: return c;
  }
  return 0;
}

Polynomial3::Polynomial3(BigInt constant) { add_term(Exponent{}, constant); }

Polynomial3 Polynomial3::monomial(BigInt coefficient, Exponent exponent) {
  check_exponent(exponent);
  Polynomial3 p;
  p.add_term(exponent, coefficient);
  return p;
}

Polynomial3 Polynomial3::variable(Variable v) {
  Exponent e;
  switch (v) {
    case Variable::x: e.a = 1; break;
    case Variable::y: e.b = 1; break;
    case Variable::z: e.c = 1; break;
  }
  return monomial(1, e);
}

BigInt Polynomial3::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void Polynomial3::add_term(const Exponent& e, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial3& Polynomial3::operator+=(const Polynomial3& rhs) {
  for (const auto& [e, coef] : rhs.terms_) add_term(e, coef);
  return *this;
}

Polynomial3& Polynomial3::operator-=(const Polynomial3& rhs) {
  for (const auto& [e, coef] : rhs.terms_) add_term(e, -coef);
  return *this;
}

Polynomial3 operator-(const Polynomial3& p) {
  Polynomial3 out;
  for (const auto& [e, coef] : p.terms_) out.terms_.emplace(e, -coef);
  return out;
}

Polynomial3 operator*(const Polynomial3& lhs, const Polynomial3& rhs) {
  Polynomial3 out;
  for (const auto& [el, cl] : lhs.terms_) {
    for (const auto& [er, cr] : rhs.terms_) {
      Exponent e{el.a + er.a, el.b + er.b, el.c + er.c};
      check_exponent(e);
      out.add_term(e, cl * cr);
    }
  }
  return out;
}

Polynomial3 Polynomial3::differentiate(Variable v) const {
  Polynomial3 out;
  for (const auto& [e, coef] : terms_) {
    const std::uint32_t power = e[v];
    if (power == 0) continue;
    Exponent d = e;
    switch (v) {
      case Variable::x: --d.a; break;
      case Variable::y: --d.b; break;
      case Variable::z: --d.c; break;
    }
    out.add_term(d, coef * power);
  }
  return out;
}

Complex Polynomial3::evaluate(const Point3& point) const {
  Complex sum{0.0, 0.0};
  for (const auto& [e, coef] : terms_) {
    sum += coef.convert_to<double>() * ipow(point[0], e.a) * ipow(point[1], e.b) *
           ipow(point[2], e.c);
  }
  return sum;
}

bool Polynomial3::gradient_vanishes(const Point3& point, double tol) const {
  if (!(tol >= 0.0)) throw ParameterError("gradient tolerance must be non-negative");
  for (Variable v : {Variable::x, Variable::y, Variable::z}) {
    if (std::abs(differentiate(v).evaluate(point)) > tol) return false;
  }
  return true;
}

std::string Polynomial3::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, coef] : terms_) {
    const bool negative = coef < 0;
    const BigInt magnitude = negative ? BigInt(-coef) : coef;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;

    std::string factors;
    auto append = [&factors](char name, std::uint32_t power) {
      if (power == 0) return;
      if (!factors.empty()) factors += '*';
      factors += name;
      if (power > 1) factors += '^' + std::to_string(power);
    };
    append('x', e.a);
    append('y', e.b);
    append('z', e.c);

    if (factors.empty()) {
      os << magnitude;
    } else if (magnitude == 1) {
      os << factors;
    } else {
      os << magnitude << '*' << factors;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial3& p) { return os << p.to_string(); }

}  // namespace duval
