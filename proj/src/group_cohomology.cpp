#include "tdual/group_cohomology.hpp"

#include "tdual/errors.hpp"

#include <string>
#include <vector>

namespace tdual {

CyclicGroup::CyclicGroup(std::int64_t order) : order_(order) {
  if (order < 1)
    throw InputError("cyclic group order must be >= 1, got " + std::to_string(order));
}

Character::Character(std::int64_t n, std::int64_t q) : n_(CyclicGroup(n).order()) {
  q_ = mod_floor(q, n_);
}

FgAbGroup cohomology_bgamma(const CyclicGroup& g, int degree) {
  if (degree < 0) throw InputError("cohomology degree must be >= 0");
  if (degree == 0) return FgAbGroup::free(1);
  if (degree % 2 == 1) return FgAbGroup::trivial();
  return FgAbGroup::cyclic(g.order());
}

namespace {

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Lexicographic index of a tuple with digits in 0..n-1, first entry most
// significant.
std::size_t tuple_index(const std::vector<std::size_t>& digits, std::size_t n) {
  std::size_t idx = 0;
  for (std::size_t d : digits) idx = idx * n + d;
  return idx;
}

}  // namespace

IntMatrix bar_cochain_differential(const CyclicGroup& g, int p) {
  if (p < 0) throw InputError("bar complex degree must be >= 0");
  const auto n = static_cast<std::size_t>(g.order());
  const std::size_t rows = ipow(n, p + 1);
  const std::size_t cols = ipow(n, p);
  IntMatrix d(rows, cols);

  std::vector<std::size_t> gam(p + 1);
  std::vector<std::size_t> face(p);
  for (std::size_t row = 0; row < rows; ++row) {
    std::size_t rest = row;
    for (int k = p; k >= 0; --k) {
      gam[k] = rest % n;
      rest /= n;
    }
    // (delta a)(g_1..g_{p+1}) = a(g_2..g_{p+1})
    //   + sum_i (-1)^i a(.., g_i g_{i+1}, ..) + (-1)^{p+1} a(g_1..g_p)
    for (int k = 0; k < p; ++k) face[k] = gam[k + 1];
    d(row, tuple_index(face, n)) += 1;
    for (int i = 1; i <= p; ++i) {
      for (int k = 0, src = 0; k < p; ++k, ++src) {
        if (k == i - 1) {
          face[k] = (gam[src] + gam[src + 1]) % n;
          ++src;
        } else {
          face[k] = gam[src];
        }
      }
      d(row, tuple_index(face, n)) += (i % 2 == 0) ? 1 : -1;
    }
    for (int k = 0; k < p; ++k) face[k] = gam[k];
    d(row, tuple_index(face, n)) += ((p + 1) % 2 == 0) ? 1 : -1;
  }
  return d;
}

bool bar_oracle_within_guard(std::int64_t n, int degree) {
  if (degree < 0 || n < 1) return false;
  return (n <= 4 && degree <= 3) || (n <= 3 && degree <= 4);
}

FgAbGroup cohomology_bgamma_oracle(const CyclicGroup& g, int degree) {
  if (!bar_oracle_within_guard(g.order(), degree))
    throw OracleGuardError("bar-complex oracle limited to n <= 4 with degree <= 3 or "
                           "n <= 3 with degree <= 4; got n = " +
                           std::to_string(g.order()) + ", degree = " +
                           std::to_string(degree));
  const IntMatrix outgoing = bar_cochain_differential(g, degree);
  const IntMatrix incoming =
      degree == 0 ? IntMatrix(1, 0) : bar_cochain_differential(g, degree - 1);
  return homology(incoming, outgoing);
}

std::int64_t character_to_chern(const Character& chi) { return chi.residue(); }

}  // namespace tdual
