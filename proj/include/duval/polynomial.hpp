#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace duval {

using BigInt = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;
using Point3 = std::array<Complex, 3>;

enum class Variable { x = 0, y = 1, z = 2 };

/// Exponent triple (a, b, c) of x^a y^b z^c. Ordered lexicographically.
struct Exponent {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t c = 0;

  std::uint32_t operator[](Variable v) const;
  auto operator<=>(const Exponent&) const = default;
};

/// Largest admissible exponent per variable.
inline constexpr std::uint32_t kMaxExponent = 1u << 16;

/// Exact trivariate polynomial with arbitrary-precision integer coefficients.
///
/// Terms are kept in ascending lexicographic order of their exponent triple
/// and zero coefficients are never stored, so two equal polynomials have
/// identical term maps and identical text.
class Polynomial3 {
 public:
  using TermMap = std::map<Exponent, BigInt>;

  Polynomial3() = default;
  explicit Polynomial3(BigInt constant);

  static Polynomial3 monomial(BigInt coefficient, Exponent exponent);
  static Polynomial3 variable(Variable v);
  /// Parses e.g. "z^3 - x*y" or "2x^2y + 5". Throws ParseError.
  static Polynomial3 parse(std::string_view text);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Coefficient of the given exponent (zero if absent).
  BigInt coefficient(const Exponent& e) const;

  Polynomial3 differentiate(Variable v) const;
  Complex evaluate(const Point3& point) const;
  /// True iff all three partial derivatives have modulus <= tol at point.
  bool gradient_vanishes(const Point3& point, double tol) const;

  std::string to_string() const;

  Polynomial3& operator+=(const Polynomial3& rhs);
  Polynomial3& operator-=(const Polynomial3& rhs);
  friend Polynomial3 operator+(Polynomial3 lhs, const Polynomial3& rhs) { return lhs += rhs; }
  friend Polynomial3 operator-(Polynomial3 lhs, const Polynomial3& rhs) { return lhs -= rhs; }
  friend Polynomial3 operator*(const Polynomial3& lhs, const Polynomial3& rhs);
  friend Polynomial3 operator-(const Polynomial3& p);
  friend bool operator==(const Polynomial3&, const Polynomial3&) = default;

 private:
  void add_term(const Exponent& e, const BigInt& coefficient);

  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial3& p);

}  // namespace duval
