#include "duval/fundamental_cycle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "duval/errors.hpp"

namespace duval {

Cycle::Cycle(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw ParameterError("a cycle needs at least one coefficient");
  for (const auto& c : coefficients_) {
    if (c < 0) throw ParameterError("cycle coefficients must be non-negative");
  }
}

std::string Cycle::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (i != 0) os << ' ';
    os << coefficients_[i];
  }
  return os.str();
}

BigInt cycle_pairing(const Cycle& z, std::size_t i, const IntersectionForm& form) {
  if (i >= form.size() || z.size() != form.size()) {
    throw ParameterError("cycle pairing index or length out of range");
  }
  BigInt sum = 0;
  for (std::size_t j = 0; j < z.size(); ++j) sum += z[j] * form(j, i);
  return sum;
}

bool is_reduced(const Cycle& z) {
  return std::all_of(z.coefficients().begin(), z.coefficients().end(),
                     [](const BigInt& c) { return c == 1; });
}

Cycle fundamental_cycle(const DualGraph& g) {
  return fundamental_cycle(g, [](std::span<const std::size_t> violating) { return violating.front(); });
}

Cycle fundamental_cycle(const DualGraph& g, const ViolatorChoice& choose) {
  const IntersectionForm form = intersection_form(g);
  if (!is_negative_definite(form)) {
    throw NotNegativeDefiniteError("intersection form is not negative definite; no fundamental cycle");
  }
  const std::size_t n = g.vertex_count();
  std::vector<BigInt> z(n, BigInt(1));
  // pairing[i] = Z.E_i, updated incrementally when E_k is added.
  std::vector<BigInt> pairing(n, BigInt(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) pairing[i] += form(j, i);
  }
  std::vector<std::size_t> violating;
  for (;;) {
    violating.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (pairing[i] > 0) violating.push_back(i);
    }
    if (violating.empty()) break;
    const std::size_t k = choose(violating);
    if (std::find(violating.begin(), violating.end(), k) == violating.end()) {
      throw ParameterError("violator choice returned a vertex that does not pair positively");
    }
    z[k] += 1;
    for (std::size_t i = 0; i < n; ++i) pairing[i] += form(k, i);
  }
  return Cycle(std::move(z));
}

Cycle brute_force_fundamental_cycle(const DualGraph& g, int coeff_bound) {
  if (coeff_bound < 1) throw ParameterError("coefficient bound must be positive");
  const std::size_t n = g.vertex_count();
  if (static_cast<double>(n) * std::log2(static_cast<double>(coeff_bound)) > 32.0) {
    throw ParameterError("brute-force search space exceeds 2^32 vectors");
  }
  const IntersectionForm form = intersection_form(g);
  std::vector<std::int64_t> z(n, 1);
  // pairing[i] = Z.E_i for the current odometer state, maintained incrementally.
  std::vector<std::int64_t> pairing(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) pairing[i] += form(j, i);
  }

  std::vector<std::vector<std::int64_t>> candidates;
  for (;;) {
    if (std::all_of(pairing.begin(), pairing.end(), [](std::int64_t p) { return p <= 0; })) {
      candidates.push_back(z);
    }
    std::size_t digit = 0;
    while (digit < n && z[digit] == coeff_bound) {
      for (std::size_t i = 0; i < n; ++i) pairing[i] -= (coeff_bound - 1) * form(digit, i);
      z[digit] = 1;
      ++digit;
    }
    if (digit == n) break;
    ++z[digit];
    for (std::size_t i = 0; i < n; ++i) pairing[i] += form(digit, i);
  }

  if (candidates.empty()) {
    throw OracleError("no anti-nef cycle with coefficients in [1, " + std::to_string(coeff_bound) +
                      "]; bound too small");
  }
  auto dominated_by = [](const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi) {
    for (std::size_t i = 0; i < lo.size(); ++i) {
      if (lo[i] > hi[i]) return false;
    }
    return true;
  };
  std::vector<const std::vector<std::int64_t>*> minimal;
  for (const auto& c : candidates) {
    const bool has_smaller = std::any_of(candidates.begin(), candidates.end(), [&](const auto& other) {
      return &other != &c && other != c && dominated_by(other, c);
    });
    if (!has_smaller) minimal.push_back(&c);
  }
  if (minimal.size() != 1) {
    throw OracleError("componentwise-minimal anti-nef cycle is not unique (" + std::to_string(minimal.size()) +
                      " minima)");
  }
  std::vector<BigInt> out(minimal.front()->begin(), minimal.front()->end());
  return Cycle(std::move(out));
}

}  // namespace duval
