#pragma once

#include "tdual/abelian.hpp"

#include <cstdint>

namespace tdual {

/// The cyclic group Z/nZ, n >= 1.
class CyclicGroup {
 public:
  explicit CyclicGroup(std::int64_t order);
  std::int64_t order() const { return order_; }
  friend bool operator==(const CyclicGroup&, const CyclicGroup&) = default;

 private:
  std::int64_t order_;
};

/// The character [p] -> exp(2 pi i p q / n) of Z/nZ, identified with [q].
class Character {
 public:
  /// q is reduced modulo n.
  Character(std::int64_t n, std::int64_t q);
  std::int64_t order() const { return n_; }
  std::int64_t residue() const { return q_; }
  friend bool operator==(const Character&, const Character&) = default;

 private:
  std::int64_t n_;
  std::int64_t q_;
};

/// H^degree(BZ/n, Z): Z in degree 0, 0 in odd degrees, Z/n in positive even
/// degrees. Throws InputError for negative degree.
FgAbGroup cohomology_bgamma(const CyclicGroup& g, int degree);

/// Inhomogeneous bar differential C^p -> C^{p+1} of Z/n with trivial Z
/// coefficients. The basis of C^p consists of indicator functions of
/// p-tuples, ordered lexicographically with digits 0..n-1; the matrix has
/// n^(p+1) rows and n^p columns.
IntMatrix bar_cochain_differential(const CyclicGroup& g, int p);

/// Largest (n, degree) combinations the bar-complex oracle agrees to build.
bool bar_oracle_within_guard(std::int64_t n, int degree);

/// H^degree(BZ/n, Z) computed as ker/im in the bar complex. Throws
/// OracleGuardError outside bar_oracle_within_guard.
FgAbGroup cohomology_bgamma_oracle(const CyclicGroup& g, int degree);

/// delta : H^1(Z/n, U(1)) -> H^2(BZ/n, Z) = Z/n, as a residue.
std::int64_t character_to_chern(const Character& chi);

}  // namespace tdual
