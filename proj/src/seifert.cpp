#include "tdual/seifert.hpp"

#include "tdual/errors.hpp"

#include <limits>
#include <numeric>

namespace tdual {

namespace {

std::string cone_label(std::size_t i) { return "cone point " + std::to_string(i + 1); }

void require_base(const SeifertBase& base) {
  if (auto why = seifert_base_violation(base)) throw ValidationError(*why);
}

void require_pair(const SeifertPair& pair) {
  if (auto why = seifert_violation(pair)) throw ValidationError(*why);
}

std::vector<std::int64_t> negated(const std::vector<std::int64_t>& residues,
                                  const std::vector<std::int64_t>& orders) {
  std::vector<std::int64_t> out(residues.size());
  for (std::size_t i = 0; i < residues.size(); ++i)
    out[i] = mod_floor(-residues[i], orders[i]);
  return out;
}

// Chern class in checked 64-bit arithmetic; nullopt on any overflow.
std::optional<ChernClass> chern_fixed_width(const SeifertConstruction& con) {
  const auto& orders = con.base.cone_orders;
  const auto c = to_int64(con.c);
  if (!c) return std::nullopt;
  ChernClass out;
  out.chi.resize(orders.size());
  std::int64_t step = 1;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    const auto d = to_int64(con.phi_degrees[i]);
    if (!d || *d == std::numeric_limits<std::int64_t>::min()) return std::nullopt;
    out.chi[i] = mod_floor(*d, orders[i]);
    const std::int64_t need = orders[i] / std::gcd(orders[i], *d);
    if (__builtin_mul_overflow(step / std::gcd(step, need), need, &step)) return std::nullopt;
  }
  std::int64_t e = 0;
  if (__builtin_mul_overflow(step, *c, &e)) return std::nullopt;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    // step * deg is divisible by the order.
    std::int64_t term = 0;
    const auto d = static_cast<std::int64_t>(con.phi_degrees[i]);
    if (__builtin_mul_overflow(step, d, &term) ||
        __builtin_add_overflow(e, term / orders[i], &e))
      return std::nullopt;
  }
  out.e = e;
  return out;
}

}  // namespace

std::optional<std::string> seifert_base_violation(const SeifertBase& base) {
  if (base.genus < 0) return "genus must be >= 0, got " + std::to_string(base.genus);
  for (std::size_t i = 0; i < base.cone_orders.size(); ++i)
    if (base.cone_orders[i] < 1)
      return "order of " + cone_label(i) + " must be >= 1, got " +
             std::to_string(base.cone_orders[i]);
  return std::nullopt;
}

SeifertPair SeifertPair::normalized(SeifertBase base, Integer e, std::vector<std::int64_t> chi,
                                    Integer f, std::vector<std::int64_t> a) {
  require_base(base);
  const std::size_t r = base.cone_count();
  if (chi.size() != r || a.size() != r)
    throw ValidationError("expected " + std::to_string(r) + " residues for chi and a, got " +
                          std::to_string(chi.size()) + " and " + std::to_string(a.size()));
  for (std::size_t i = 0; i < r; ++i) {
    chi[i] = mod_floor(chi[i], base.cone_orders[i]);
    a[i] = mod_floor(a[i], base.cone_orders[i]);
  }
  return {std::move(base), std::move(e), std::move(chi), std::move(f), std::move(a)};
}

FgAbGroup cohomology_base(const SeifertBase& base, int l) {
  if (l < 0) throw InputError("cohomology degree must be >= 0");
  require_base(base);
  if (l == 0) return FgAbGroup::free(1);
  if (l == 1) return FgAbGroup::free(2 * static_cast<std::size_t>(base.genus));
  if (l % 2 == 1) return FgAbGroup::trivial();
  std::vector<Integer> orders(base.cone_orders.begin(), base.cone_orders.end());
  return FgAbGroup(l == 2 ? 1 : 0, std::move(orders));
}

std::optional<std::string> seifert_violation(const SeifertPair& pair) {
  if (auto why = seifert_base_violation(pair.base)) return why;
  const auto& orders = pair.base.cone_orders;
  const std::size_t r = orders.size();
  if (pair.chi.size() != r)
    return "chi has " + std::to_string(pair.chi.size()) + " entries, base has " +
           std::to_string(r) + " cone points";
  if (pair.a.size() != r)
    return "a has " + std::to_string(pair.a.size()) + " entries, base has " +
           std::to_string(r) + " cone points";
  for (std::size_t i = 0; i < r; ++i) {
    const std::int64_t n = orders[i];
    if (pair.chi[i] < 0 || pair.chi[i] >= n)
      return "chi at " + cone_label(i) + " = " + std::to_string(pair.chi[i]) +
             " outside [0, " + std::to_string(n) + ")";
    if (pair.a[i] < 0 || pair.a[i] >= n)
      return "a at " + cone_label(i) + " = " + std::to_string(pair.a[i]) + " outside [0, " +
             std::to_string(n) + ")";
    const Integer product = Integer(pair.a[i]) * pair.chi[i];
    if (product % n != 0)
      return "h not in H3 at " + cone_label(i) + ": " + std::to_string(n) +
             " does not divide " + product.str();
  }
  return std::nullopt;
}

bool validate_seifert(const SeifertPair& pair) { return !seifert_violation(pair); }

FgAbGroup h3_total(const SeifertPair& pair) {
  require_pair(pair);
  std::vector<Integer> orders;
  orders.reserve(pair.chi.size());
  for (std::size_t i = 0; i < pair.chi.size(); ++i)
    orders.emplace_back(std::gcd(pair.base.cone_orders[i], pair.chi[i]));
  return FgAbGroup(1, std::move(orders));
}

ChernClass chern_from_construction(const SeifertConstruction& con) {
  require_base(con.base);
  const auto& orders = con.base.cone_orders;
  if (con.phi_degrees.size() != orders.size())
    throw ValidationError("expected " + std::to_string(orders.size()) +
                          " clutching degrees, got " +
                          std::to_string(con.phi_degrees.size()));
  ChernClass out;
  if (auto small = chern_fixed_width(con)) {
    out = std::move(*small);
  } else {
    out.chi.reserve(orders.size());
    // x must be a multiple of n_i / gcd(n_i, deg phi_i) for every i.
    Integer step = 1;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      const Integer n = orders[i];
      out.chi.push_back(static_cast<std::int64_t>(mod_floor(con.phi_degrees[i], n)));
      step = lcm_int(step, n / gcd_int(n, con.phi_degrees[i]));
    }
    out.e = step * con.c;
    for (std::size_t i = 0; i < orders.size(); ++i)
      out.e += step * con.phi_degrees[i] / orders[i];
  }
  out.degenerate_kernel = out.e == 0;
  return out;
}

ClassificationInvariants classification_invariants(const SeifertPair& pair) {
  require_pair(pair);
  return {{pair.e, pair.chi}, {pair.f, pair.a}};
}

SeifertPair tdualize_seifert(const SeifertPair& pair) {
  require_pair(pair);
  const auto& orders = pair.base.cone_orders;
  return {pair.base, -pair.f, negated(pair.a, orders), -pair.e, negated(pair.chi, orders)};
}

}  // namespace tdual
