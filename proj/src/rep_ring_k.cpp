#include "tdual/rep_ring_k.hpp"

#include "tdual/errors.hpp"

#include <string>

namespace tdual {

namespace {

std::size_t checked_order(std::int64_t n) {
  if (n < 1) throw InputError("group order must be >= 1, got " + std::to_string(n));
  return static_cast<std::size_t>(n);
}

}  // namespace

RepRingElement::RepRingElement(std::int64_t n, std::vector<Integer> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != checked_order(n))
    throw InputError("representation ring element needs " + std::to_string(n) +
                     " coefficients, got " + std::to_string(coeffs_.size()));
}

RepRingElement RepRingElement::one(std::int64_t n) { return character(n, 0); }

RepRingElement RepRingElement::character(std::int64_t n, std::int64_t q) {
  std::vector<Integer> c(checked_order(n));
  c[static_cast<std::size_t>(mod_floor(q, n))] = 1;
  return RepRingElement(n, std::move(c));
}

Integer RepRingElement::augmentation() const {
  Integer sum = 0;
  for (const Integer& c : coeffs_) sum += c;
  return sum;
}

RepRingElement rep_multiply(const RepRingElement& a, const RepRingElement& b) {
  if (a.order() != b.order())
    throw InputError("rep_multiply: orders " + std::to_string(a.order()) + " and " +
                     std::to_string(b.order()) + " differ");
  const auto n = static_cast<std::size_t>(a.order());
  std::vector<Integer> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (b.coeffs()[j] != 0) c[(i + j) % n] += a.coeffs()[i] * b.coeffs()[j];
  }
  return RepRingElement(a.order(), std::move(c));
}

IntMatrix char_multiplication_matrix(std::int64_t n, std::int64_t q) {
  const std::size_t size = checked_order(n);
  const auto shift = static_cast<std::size_t>(mod_floor(q, n));
  IntMatrix p(size, size);
  for (std::size_t i = 0; i < size; ++i) p((i + shift) % size, i) = 1;
  return p;
}

KGroups borel_k_of_dual(std::int64_t n, std::int64_t q) {
  const IntMatrix op = char_multiplication_matrix(n, -q) -
                       IntMatrix::identity(checked_order(n));
  return {kernel(op), cokernel(op)};
}

IntMatrix mv_matrix(std::int64_t n, std::int64_t q) {
  const std::size_t size = checked_order(n);
  const IntMatrix one = IntMatrix::identity(size);
  const IntMatrix minus_one = IntMatrix::zero(size, size) - one;
  const IntMatrix minus_twist = IntMatrix::zero(size, size) - char_multiplication_matrix(n, -q);
  return block(one, one, minus_twist, minus_one);
}

KGroups borel_k_via_mv(std::int64_t n, std::int64_t q) {
  const IntMatrix m = mv_matrix(n, q);
  return {kernel(m), cokernel(m)};
}

KGroups k_untwisted_free_quotient() { return {FgAbGroup::free(1), FgAbGroup::free(1)}; }

}  // namespace tdual
