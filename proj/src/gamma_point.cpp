#include "tdual/gamma_point.hpp"

#include "tdual/errors.hpp"

#include <numeric>

namespace tdual {

namespace {

void require_order(std::int64_t n) {
  if (n < 1) throw InputError("group order must be >= 1, got " + std::to_string(n));
}

bool divides_product(std::int64_t n, std::int64_t a, std::int64_t b) {
  return Integer(a) * b % n == 0;
}

}  // namespace

GammaPointPair GammaPointPair::normalized(std::int64_t n, std::int64_t q, std::int64_t s) {
  require_order(n);
  return {n, mod_floor(q, n), mod_floor(s, n)};
}

GammaPointH3 h3_total_space(std::int64_t n, std::int64_t q) {
  require_order(n);
  const std::int64_t g = std::gcd(n, mod_floor(q, n));  // gcd(n, 0) = n
  return {FgAbGroup::cyclic(g), mod_floor(n / g, n)};
}

bool thom_exists(std::int64_t n, std::int64_t q0, std::int64_t q1) {
  require_order(n);
  return divides_product(n, q0, q1);
}

std::optional<std::string> gamma_point_violation(const GammaPointPair& p) {
  if (p.n < 1) return "group order must be >= 1, got " + std::to_string(p.n);
  if (p.q < 0 || p.q >= p.n)
    return "character residue q = " + std::to_string(p.q) + " outside [0, " +
           std::to_string(p.n) + ")";
  if (p.s < 0 || p.s >= p.n)
    return "class residue s = " + std::to_string(p.s) + " outside [0, " +
           std::to_string(p.n) + ")";
  if (!divides_product(p.n, p.s, p.q))
    return "h not in H3: " + std::to_string(p.n) + " does not divide " +
           (Integer(p.s) * p.q).str();
  return std::nullopt;
}

bool validate_gamma_point(const GammaPointPair& p) { return !gamma_point_violation(p); }

GammaPointPair tdualize_gamma_point(const GammaPointPair& p) {
  if (auto why = gamma_point_violation(p)) throw ValidationError(*why);
  return {p.n, mod_floor(-p.s, p.n), mod_floor(-p.q, p.n)};
}

}  // namespace tdual
