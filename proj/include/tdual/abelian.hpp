#pragma once

#include "tdual/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace tdual {

/// Dense row-major matrix of arbitrary-precision integers. Either dimension
/// may be zero; such a matrix is the zero map between the corresponding free
/// modules.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  /// Row-wise literal, e.g. IntMatrix{{2, 4}, {6, 8}}.
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) {
    return IntMatrix(rows, cols);
  }
  /// Column vector.
  static IntMatrix column(std::span<const Integer> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::vector<Integer> column_vector(std::size_t c) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
std::vector<Integer> operator*(const IntMatrix& a, std::span<const Integer> x);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Block matrix [a b; c d]. Blocks in the same block row share a row count and
/// blocks in the same block column share a column count.
IntMatrix block(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c,
                const IntMatrix& d);

/// Fraction-free (Bareiss) determinant of a square matrix; 1 for 0x0.
Integer determinant(const IntMatrix& m);

/// Finitely generated abelian group Z^free_rank + Z/d_1 + ... + Z/d_k in
/// invariant-factor form: every d_i >= 2 and d_i | d_{i+1}. Construction
/// always canonicalizes, so equality of values is isomorphism of groups.
class FgAbGroup {
 public:
  FgAbGroup() = default;
  /// Any list of cyclic orders is accepted: orders 1 are dropped, orders 0
  /// contribute a free summand, negative orders are taken by absolute value.
  explicit FgAbGroup(std::size_t free_rank, std::vector<Integer> cyclic_orders = {});

  static FgAbGroup trivial() { return FgAbGroup(); }
  static FgAbGroup free(std::size_t rank) { return FgAbGroup(rank); }
  static FgAbGroup cyclic(const Integer& order);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }
  /// Product of the invariant factors (order of the torsion subgroup).
  Integer torsion_order() const;

  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;
  friend FgAbGroup operator+(const FgAbGroup& a, const FgAbGroup& b);

  /// "Z^2 + Z/2 + Z/4", "0" for the trivial group.
  std::string to_string() const;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

std::ostream& operator<<(std::ostream& os, const FgAbGroup& g);

/// U * M * V = D with U, V unimodular and D diagonal (padded to the shape of
/// M) carrying the invariant factors: nonnegative, each dividing the next,
/// zeros last.
struct SnfDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::size_t rank() const;
  std::vector<Integer> diagonal() const;
};

SnfDecomposition smith_normal_form(const IntMatrix& m);

/// Only the invariant factors, without tracking the transforms.
std::vector<Integer> invariant_factors(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Z^rows / im(M).
FgAbGroup cokernel(const IntMatrix& m);

/// Columns form a Z-basis of ker(M) in Z^cols.
IntMatrix kernel_basis(const IntMatrix& m);

/// ker(M) as an abstract group; always free.
FgAbGroup kernel(const IntMatrix& m);

/// ker(outgoing) / im(incoming) for a complex ... -> incoming -> outgoing ->
/// ... (outgoing * incoming must be zero).
FgAbGroup homology(const IntMatrix& incoming, const IntMatrix& outgoing);

/// Some x with M x = b over the integers, or nullopt if b is not in the
/// image lattice. Throws InputError when b.size() != M.rows().
std::optional<std::vector<Integer>> solve_integral(const IntMatrix& m,
                                                   std::span<const Integer> b);

bool groups_isomorphic(const FgAbGroup& a, const FgAbGroup& b);

}  // namespace tdual
