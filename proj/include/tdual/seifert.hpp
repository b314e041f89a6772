#pragma once

#include "tdual/abelian.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tdual {

/// Closed oriented surface of genus g with cone points of orders n_1..n_r.
/// Orders are positive; the orientation sign of a negative order never
/// enters the invariants computed here.
struct SeifertBase {
  std::int64_t genus = 0;
  std::vector<std::int64_t> cone_orders;

  std::size_t cone_count() const { return cone_orders.size(); }
  friend bool operator==(const SeifertBase&, const SeifertBase&) = default;
};

/// Reason the base is ill formed, or nullopt.
std::optional<std::string> seifert_base_violation(const SeifertBase& base);

/// Element of H^2(B, Z) = Z + (+)_i Z/n_i in split coordinates.
struct H2Element {
  Integer free_part;
  std::vector<std::int64_t> torsion;
  friend bool operator==(const H2Element&, const H2Element&) = default;
};

/// A pair (E, h) over a Seifert base: c_1(E) = (e, chi) in H^2(B) and
/// h = (f, a) in H^3(E) = Z + (+)_i Ann(chi_i). Requires n_i | a_i chi_i.
struct SeifertPair {
  SeifertBase base;
  Integer e;
  std::vector<std::int64_t> chi;
  Integer f;
  std::vector<std::int64_t> a;

  /// Reduces every chi_i and a_i modulo n_i. Throws ValidationError when the
  /// base is ill formed or the list lengths differ from the cone count.
  static SeifertPair normalized(SeifertBase base, Integer e, std::vector<std::int64_t> chi,
                                Integer f, std::vector<std::int64_t> a);

  friend bool operator==(const SeifertPair&, const SeifertPair&) = default;
};

/// Construction data of a bundle: degree c of the clutching map at the
/// smooth marked point and degrees of the clutching maps at the cone points.
struct SeifertConstruction {
  SeifertBase base;
  Integer c;
  std::vector<Integer> phi_degrees;
};

struct ChernClass {
  Integer e;
  std::vector<std::int64_t> chi;
  /// c + sum_i deg(phi_i) / n_i vanishes, so the solvable subgroup is {0}.
  bool degenerate_kernel = false;

  H2Element as_element() const { return {e, chi}; }
};

struct ClassificationInvariants {
  H2Element c1;
  H2Element pushforward;
  friend bool operator==(const ClassificationInvariants&,
                         const ClassificationInvariants&) = default;
};

/// H^l(B, Z). Throws InputError for l < 0, ValidationError for a bad base.
FgAbGroup cohomology_base(const SeifertBase& base, int l);

std::optional<std::string> seifert_violation(const SeifertPair& pair);
bool validate_seifert(const SeifertPair& pair);

/// Z + (+)_i Ann(chi_i), Ann(chi_i) cyclic of order gcd(n_i, chi_i).
FgAbGroup h3_total(const SeifertPair& pair);

/// First Chern class from construction data. chi_i = deg(phi_i) mod n_i and
/// e = L * (c + sum_i deg(phi_i) / n_i) with L = lcm_i n_i / gcd(n_i, deg phi_i),
/// the generator of {b : b = x (c + sum_i deg(phi_i)/n_i), n_i | chi_i x}.
ChernClass chern_from_construction(const SeifertConstruction& con);

/// (c_1(E), pi_!(h)) in H^2(B) + H^2(B); these determine the pair up to
/// isomorphism.
ClassificationInvariants classification_invariants(const SeifertPair& pair);

/// (e, chi, f, a) -> (-f, -a, -e, -chi), residues mod n_i.
SeifertPair tdualize_seifert(const SeifertPair& pair);

}  // namespace tdual
