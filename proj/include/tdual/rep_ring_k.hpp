#pragma once

#include "tdual/abelian.hpp"

#include <cstdint>
#include <vector>

namespace tdual {

/// Element of R(Z/n) = Z[t]/(t^n - 1); coefficient of t^i at index i.
class RepRingElement {
 public:
  /// coeffs.size() must equal n (InputError otherwise).
  RepRingElement(std::int64_t n, std::vector<Integer> coeffs);

  static RepRingElement one(std::int64_t n);
  /// The line bundle class t^(q mod n).
  static RepRingElement character(std::int64_t n, std::int64_t q);

  std::int64_t order() const { return n_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  /// Virtual dimension (sum of coefficients); zero on the augmentation ideal.
  Integer augmentation() const;

  friend bool operator==(const RepRingElement&, const RepRingElement&) = default;

 private:
  std::int64_t n_;
  std::vector<Integer> coeffs_;
};

/// Cyclic convolution modulo t^n - 1. Throws InputError on differing n.
RepRingElement rep_multiply(const RepRingElement& a, const RepRingElement& b);

/// n x n permutation matrix of multiplication by t^(q mod n) on the basis
/// t^0, ..., t^(n-1): column i has its single 1 in row (i + q) mod n.
IntMatrix char_multiplication_matrix(std::int64_t n, std::int64_t q);

struct KGroups {
  FgAbGroup k0;
  FgAbGroup k1;
  friend bool operator==(const KGroups&, const KGroups&) = default;
};

/// Twisted K of the dual of (n, q, 0): kernel and cokernel of
/// multiplication by ([-q] - 1) on the uncompleted R(Z/n).
KGroups borel_k_of_dual(std::int64_t n, std::int64_t q);

/// The same groups read off the 2n x 2n Mayer-Vietoris matrix
/// [[1, 1], [-[-q], -1]] acting on R(Z/n) + R(Z/n).
KGroups borel_k_via_mv(std::int64_t n, std::int64_t q);

/// The Mayer-Vietoris block matrix used by borel_k_via_mv.
IntMatrix mv_matrix(std::int64_t n, std::int64_t q);

/// K^*(U(1)) with trivializable twist: (Z, Z).
KGroups k_untwisted_free_quotient();

}  // namespace tdual
