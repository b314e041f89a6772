#pragma once

#include "tdual/abelian.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace tdual {

/// A pair (E, h) over the orbispace [* / Z/n]: E is the circle bundle of the
/// character [q] (so c_1(E) = [q]) and h = [s] in H^3(E, Z), viewed inside
/// Z/n through the Gysin pushforward. Well defined iff n | s q.
struct GammaPointPair {
  std::int64_t n = 1;
  std::int64_t q = 0;
  std::int64_t s = 0;

  /// Reduces q and s modulo n. Throws InputError for n < 1.
  static GammaPointPair normalized(std::int64_t n, std::int64_t q, std::int64_t s);

  friend bool operator==(const GammaPointPair&, const GammaPointPair&) = default;
};

/// H^3(E, Z) = {[s] in Z/n : n | s q}, cyclic of order gcd(n, q).
struct GammaPointH3 {
  FgAbGroup group;
  /// Residue of n / gcd(n, q), generating the subgroup inside Z/n.
  std::int64_t generator = 0;
};

GammaPointH3 h3_total_space(std::int64_t n, std::int64_t q);

/// The three-sphere bundle L_0 + L_1 over [* / Z/n] admits a Thom class iff
/// c_1(L_0) c_1(L_1) = 0 in H^4 = Z/n, i.e. iff n | q0 q1.
bool thom_exists(std::int64_t n, std::int64_t q0, std::int64_t q1);

/// Reason the pair is ill formed, or nullopt if it is valid.
std::optional<std::string> gamma_point_violation(const GammaPointPair& p);

bool validate_gamma_point(const GammaPointPair& p);

/// (n, q, s) -> (n, -s, -q). Throws ValidationError for an invalid pair.
GammaPointPair tdualize_gamma_point(const GammaPointPair& p);

}  // namespace tdual
