#include "tdual/abelian.hpp"

#include "tdual/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace tdual {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InputError("IntMatrix: ragged row literal");
    for (long long v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::column(std::span<const Integer> v) {
  IntMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

std::vector<Integer> IntMatrix::column_vector(std::size_t c) const {
  std::vector<Integer> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Integer& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product: inner dimensions differ");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) p(i, j) += aik * b(k, j);
    }
  return p;
}

namespace {

IntMatrix elementwise(const IntMatrix& a, const IntMatrix& b, int sign) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InputError("matrix sum: shapes differ");
  IntMatrix s = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      s(i, j) += sign > 0 ? b(i, j) : Integer(-b(i, j));
  return s;
}

}  // namespace

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  return elementwise(a, b, +1);
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  return elementwise(a, b, -1);
}

std::vector<Integer> operator*(const IntMatrix& a, std::span<const Integer> x) {
  if (a.cols() != x.size()) throw InputError("matrix-vector product: dimension mismatch");
  std::vector<Integer> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0 && x[j] != 0) y[i] += a(i, j) * x[j];
  return y;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

IntMatrix block(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c,
                const IntMatrix& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() ||
      b.cols() != d.cols())
    throw InputError("block: incompatible block shapes");
  IntMatrix m(a.rows() + c.rows(), a.cols() + b.cols());
  auto place = [&m](const IntMatrix& src, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < src.rows(); ++i)
      for (std::size_t j = 0; j < src.cols(); ++j) m(r0 + i, c0 + j) = src(i, j);
  };
  place(a, 0, 0);
  place(b, 0, a.cols());
  place(c, a.rows(), 0);
  place(d, a.rows(), a.cols());
  return m;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// FgAbGroup

FgAbGroup::FgAbGroup(std::size_t free_rank, std::vector<Integer> cyclic_orders)
    : free_rank_(free_rank) {
  IntMatrix diag(cyclic_orders.size(), cyclic_orders.size());
  for (std::size_t i = 0; i < cyclic_orders.size(); ++i)
    diag(i, i) = abs_int(cyclic_orders[i]);
  for (Integer& d : invariant_factors(diag)) {
    if (d == 0)
      ++free_rank_;
    else if (d > 1)
      torsion_.push_back(std::move(d));
  }
}

FgAbGroup FgAbGroup::cyclic(const Integer& order) { return FgAbGroup(0, {order}); }

Integer FgAbGroup::torsion_order() const {
  Integer p = 1;
  for (const Integer& d : torsion_) p *= d;
  return p;
}

FgAbGroup operator+(const FgAbGroup& a, const FgAbGroup& b) {
  std::vector<Integer> orders = a.torsion();
  orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
  return FgAbGroup(a.free_rank() + b.free_rank(), std::move(orders));
}

std::string FgAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << 'Z';
    if (free_rank_ > 1) os << '^' << free_rank_;
    first = false;
  }
  for (const Integer& d : torsion_) {
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FgAbGroup& g) {
  return os << g.to_string();
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

// Reduces `a` in place to Smith form. When `u`/`v` are non-null the row and
// column operations are mirrored into them. Pivots are chosen by minimal
// absolute value among the remaining entries of the current row and column.
void reduce_to_smith(IntMatrix& a, IntMatrix* u, IntMatrix* v) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t steps = std::min(rows, cols);

  auto swap_rows = [&](std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a(i, j), a(k, j));
    if (u)
      for (std::size_t j = 0; j < rows; ++j) std::swap((*u)(i, j), (*u)(k, j));
  };
  auto swap_cols = [&](std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, j), a(i, k));
    if (v)
      for (std::size_t i = 0; i < cols; ++i) std::swap((*v)(i, j), (*v)(i, k));
  };
  // row_i += q * row_k
  auto add_row = [&](std::size_t i, std::size_t k, const Integer& q, std::size_t from) {
    for (std::size_t j = from; j < cols; ++j)
      if (a(k, j) != 0) a(i, j) += q * a(k, j);
    if (u)
      for (std::size_t j = 0; j < rows; ++j)
        if ((*u)(k, j) != 0) (*u)(i, j) += q * (*u)(k, j);
  };
  // col_j += q * col_k
  auto add_col = [&](std::size_t j, std::size_t k, const Integer& q, std::size_t from) {
    for (std::size_t i = from; i < rows; ++i)
      if (a(i, k) != 0) a(i, j) += q * a(i, k);
    if (v)
      for (std::size_t i = 0; i < cols; ++i)
        if ((*v)(i, k) != 0) (*v)(i, j) += q * (*v)(i, k);
  };

  for (std::size_t t = 0; t < steps; ++t) {
    // Global minimal pivot in the trailing block.
    std::size_t pr = rows, pc = cols;
    Integer best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a(i, j) != 0 && (pr == rows || abs_int(a(i, j)) < best)) {
          best = abs_int(a(i, j));
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    swap_rows(t, pr);
    swap_cols(t, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        add_row(i, t, -q, t);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        add_col(j, t, -q, t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; move it into place.
        std::size_t br = t, bc = t;
        Integer m = abs_int(a(t, t));
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a(i, t) != 0 && abs_int(a(i, t)) < m) {
            m = abs_int(a(i, t));
            br = i;
            bc = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(t, j) != 0 && abs_int(a(t, j)) < m) {
            m = abs_int(a(t, j));
            br = t;
            bc = j;
          }
        swap_rows(t, br);
        swap_cols(t, bc);
        continue;
      }
      // Row and column are cleared; enforce divisibility of the trailing block.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      add_row(t, bad, Integer(1), t);
    }
    if (a(t, t) < 0) {
      for (std::size_t j = t; j < cols; ++j) a(t, j) = -a(t, j);
      if (u)
        for (std::size_t j = 0; j < rows; ++j) (*u)(t, j) = -(*u)(t, j);
    }
  }
}

std::vector<Integer> diagonal_of(const IntMatrix& d) {
  std::vector<Integer> out;
  const std::size_t n = std::min(d.rows(), d.cols());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(d(i, i));
  return out;
}

}  // namespace

std::size_t SnfDecomposition::rank() const {
  std::size_t r = 0;
  const std::size_t n = std::min(D.rows(), D.cols());
  while (r < n && D(r, r) != 0) ++r;
  return r;
}

std::vector<Integer> SnfDecomposition::diagonal() const { return diagonal_of(D); }

SnfDecomposition smith_normal_form(const IntMatrix& m) {
  SnfDecomposition s{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  reduce_to_smith(s.D, &s.U, &s.V);
  return s;
}

std::vector<Integer> invariant_factors(const IntMatrix& m) {
  IntMatrix d = m;
  reduce_to_smith(d, nullptr, nullptr);
  return diagonal_of(d);
}

std::size_t rank(const IntMatrix& m) {
  const auto diag = invariant_factors(m);
  return static_cast<std::size_t>(
      std::count_if(diag.begin(), diag.end(), [](const Integer& x) { return x != 0; }));
}

FgAbGroup cokernel(const IntMatrix& m) {
  std::vector<Integer> torsion;
  std::size_t r = 0;
  for (Integer& d : invariant_factors(m)) {
    if (d == 0) continue;
    ++r;
    if (d > 1) torsion.push_back(std::move(d));
  }
  return FgAbGroup(m.rows() - r, std::move(torsion));
}

IntMatrix kernel_basis(const IntMatrix& m) {
  const SnfDecomposition s = smith_normal_form(m);
  const std::size_t r = s.rank();
  IntMatrix basis(m.cols(), m.cols() - r);
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = r; j < m.cols(); ++j) basis(i, j - r) = s.V(i, j);
  return basis;
}

FgAbGroup kernel(const IntMatrix& m) { return FgAbGroup::free(m.cols() - rank(m)); }

FgAbGroup homology(const IntMatrix& incoming, const IntMatrix& outgoing) {
  if (incoming.rows() != outgoing.cols())
    throw InputError("homology: maps are not composable");
  // Z^N / ker(outgoing) is free, so the torsion of ker/im equals the torsion
  // of Z^N / im(incoming).
  const FgAbGroup coker_in = cokernel(incoming);
  const std::size_t ker_out = outgoing.cols() - rank(outgoing);
  const std::size_t rank_in = incoming.rows() - coker_in.free_rank();
  if (rank_in > ker_out) throw InputError("homology: image exceeds kernel");
  return FgAbGroup(ker_out - rank_in, coker_in.torsion());
}

std::optional<std::vector<Integer>> solve_integral(const IntMatrix& m,
                                                   std::span<const Integer> b) {
  if (b.size() != m.rows())
    throw InputError("solve_integral: right-hand side has " + std::to_string(b.size()) +
                     " entries, matrix has " + std::to_string(m.rows()) + " rows");
  const SnfDecomposition s = smith_normal_form(m);
  const std::vector<Integer> ub = s.U * b;
  const std::size_t r = s.rank();
  std::vector<Integer> y(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < r) {
      if (ub[i] % s.D(i, i) != 0) return std::nullopt;
      y[i] = ub[i] / s.D(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V * std::span<const Integer>(y);
}

bool groups_isomorphic(const FgAbGroup& a, const FgAbGroup& b) { return a == b; }

}  // namespace tdual
