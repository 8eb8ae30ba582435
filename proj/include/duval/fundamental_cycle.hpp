#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "duval/dual_graph.hpp"

namespace duval {

/// Integral cycle sum z_i E_i on the vertices of a dual graph.
/// Coefficients are non-negative and the vector is never empty.
class Cycle {
 public:
  explicit Cycle(std::vector<BigInt> coefficients);

  const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }
  std::size_t size() const noexcept { return coefficients_.size(); }
  const BigInt& operator[](std::size_t i) const { return coefficients_[i]; }

  /// "1 2 1 1"
  std::string to_string() const;

  friend bool operator==(const Cycle&, const Cycle&) = default;

 private:
  std::vector<BigInt> coefficients_;
};

/// Z.E_i = sum_j z_j (E_j.E_i).
BigInt cycle_pairing(const Cycle& z, std::size_t i, const IntersectionForm& form);

/// Z = |Z|: every coefficient equals 1.
bool is_reduced(const Cycle& z);

/// Picks one vertex among those with Z.E_i > 0 (given in ascending order).
using ViolatorChoice = std::function<std::size_t(std::span<const std::size_t> violating)>;

/// Fundamental cycle by Laufer's computation sequence, starting from the
/// reduced cycle and adding E_i for the smallest violating index i.
/// Throws NotNegativeDefiniteError if the intersection form is not negative definite.
Cycle fundamental_cycle(const DualGraph& g);
/// Same sequence with a caller-supplied choice among violating vertices.
Cycle fundamental_cycle(const DualGraph& g, const ViolatorChoice& choose);

/// Exhaustive search over [1, coeff_bound]^V for the componentwise-minimal
/// cycle with Z.E_i <= 0 for all i. Throws OracleError if no candidate exists
/// or the minimum is not unique; throws ParameterError if the search space
/// exceeds 2^32 vectors.
Cycle brute_force_fundamental_cycle(const DualGraph& g, int coeff_bound);

}  // namespace duval
