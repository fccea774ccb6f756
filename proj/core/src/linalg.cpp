#include "conmod/linalg.hpp"

#include <algorithm>
#include <climits>

namespace conmod {

namespace {

constexpr long kZero = -1;  // cached valuation marker for a zero entry
constexpr std::size_t kLiftedThreshold = 40;

long cached_valuation(const DvrElement& x) {
  const Valuation v = valuation(x);
  return v.is_infinite() ? kZero : v.value();
}

// Row/column elimination with minimal-valuation pivoting; lexicographic (row, col) tie-break
// in the current coordinates.
SnfResult eliminate(const Matrix& a, bool track) {
  const DvrSpec& spec = a.spec();
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t n = std::min(rows, cols);

  Matrix m = a;
  Matrix u = track ? Matrix::identity(spec, rows) : Matrix(spec, 0, 0);
  Matrix v = track ? Matrix::identity(spec, cols) : Matrix(spec, 0, 0);
  std::vector<long> val(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) val[i * cols + j] = cached_valuation(m.at(i, j));

  std::vector<Valuation> diag;
  diag.reserve(n);
  std::size_t k = 0;
  for (; k < n; ++k) {
    long best = LONG_MAX;
    std::size_t bi = 0;
    std::size_t bj = 0;
    for (std::size_t i = k; i < rows && best != 0; ++i) {
      for (std::size_t j = k; j < cols; ++j) {
        const long x = val[i * cols + j];
        if (x != kZero && x < best) {
          best = x;
          bi = i;
          bj = j;
          if (best == 0) break;
        }
      }
    }
    if (best == LONG_MAX) break;

    if (bi != k) {
      m.swap_rows(k, bi);
      if (track) u.swap_rows(k, bi);
      for (std::size_t j = 0; j < cols; ++j) std::swap(val[k * cols + j], val[bi * cols + j]);
    }
    if (bj != k) {
      m.swap_cols(k, bj);
      if (track) v.swap_cols(k, bj);
      for (std::size_t i = 0; i < rows; ++i) std::swap(val[i * cols + k], val[i * cols + bj]);
    }

    const Normalized nz = normalize(m.at(k, k));
    if (!nz.unit.is_one()) {
      const DvrElement inv = invert_unit(nz.unit);
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (!m.at(k, j).is_zero()) m.at(k, j) *= inv;
      }
      if (track) {
        for (std::size_t j = 0; j < rows; ++j) {
          if (!u.at(k, j).is_zero()) u.at(k, j) *= inv;
        }
      }
    }
    const DvrElement pivot = DvrElement::uniformizer_power(spec, best);
    m.at(k, k) = pivot;

    for (std::size_t i = k + 1; i < rows; ++i) {
      if (m.at(i, k).is_zero()) continue;
      const DvrElement f = divide_exact(m.at(i, k), pivot);
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (m.at(k, j).is_zero()) continue;
        m.at(i, j) -= f * m.at(k, j);
        val[i * cols + j] = cached_valuation(m.at(i, j));
      }
      m.at(i, k) = DvrElement(spec);
      val[i * cols + k] = kZero;
      if (track) {
        for (std::size_t j = 0; j < rows; ++j) {
          if (!u.at(k, j).is_zero()) u.at(i, j) -= f * u.at(k, j);
        }
      }
    }
    for (std::size_t j = k + 1; j < cols; ++j) {
      if (m.at(k, j).is_zero()) continue;
      if (track) {
        const DvrElement f = divide_exact(m.at(k, j), pivot);
        for (std::size_t i = 0; i < cols; ++i) {
          if (!v.at(i, k).is_zero()) v.at(i, j) -= f * v.at(i, k);
        }
      }
      m.at(k, j) = DvrElement(spec);
      val[k * cols + j] = kZero;
    }
    diag.emplace_back(best);
  }
  for (; k < n; ++k) diag.push_back(Valuation::infinity());
  return SnfResult{std::move(u), std::move(m), std::move(v), std::move(diag)};
}

std::size_t count_finite(const std::vector<Valuation>& d) {
  return static_cast<std::size_t>(std::count_if(d.begin(), d.end(), [](const Valuation& v) { return !v.is_infinite(); }));
}

__extension__ using u128 = unsigned __int128;

// Rank over F_p of a residue matrix (row-major, entries in [0, p)).
std::size_t rank_mod_p(std::vector<std::uint64_t> m, std::size_t rows, std::size_t cols, std::uint64_t p) {
  auto mulmod = [p](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>(static_cast<u128>(x) * y % p);
  };
  auto inv = [&](std::uint64_t x) {
    std::uint64_t r = 1;
    std::uint64_t e = p - 2;
    while (e) {
      if (e & 1) r = mulmod(r, x);
      x = mulmod(x, x);
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[rank * cols + j]);
    const std::uint64_t iv = inv(m[rank * cols + c]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::uint64_t f = mulmod(m[i * cols + c], iv);
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) m[i * cols + j] = (m[i * cols + j] + p - mulmod(f, m[rank * cols + j])) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t SnfResult::rank() const { return count_finite(diagonal_valuations); }

namespace detail {

SnfResult snf_elimination(const Matrix& a) { return eliminate(a, true); }

bool invertible_mod_uniformizer(const Matrix& a) {
  if (a.rows() != a.cols()) return false;
  std::vector<std::uint64_t> r(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r[i * a.cols() + j] = residue(a.at(i, j));
  return rank_mod_p(std::move(r), a.rows(), a.cols(), a.spec().prime()) == a.rows();
}

}  // namespace detail

SnfResult snf(const Matrix& a) {
  if (a.spec().kind() == DvrKind::ZLocal && a.rows() == a.cols() && a.rows() >= kLiftedThreshold) {
    if (auto lifted = detail::snf_lifted(a)) return std::move(*lifted);
  }
  return eliminate(a, true);
}

std::vector<Valuation> snf_valuations(const Matrix& a) {
  if (a.spec().kind() == DvrKind::ZLocal && a.rows() == a.cols() && a.rows() >= kLiftedThreshold) {
    if (auto lifted = detail::snf_lifted(a)) return std::move(lifted->diagonal_valuations);
  }
  return eliminate(a, false).diagonal_valuations;
}

std::size_t rank(const Matrix& a) { return count_finite(snf_valuations(a)); }

Matrix kernel_basis(const Matrix& a) {
  const SnfResult r = eliminate(a, true);
  const std::size_t rk = r.rank();
  std::vector<std::size_t> idx;
  for (std::size_t j = rk; j < a.cols(); ++j) idx.push_back(j);
  return r.V.select_cols(idx);
}

LinearSolver::LinearSolver(const Matrix& a)
    : spec_(a.spec()), rows_(a.rows()), cols_(a.cols()), u_(a.spec(), 0, 0), v_(a.spec(), 0, 0) {
  SnfResult r = eliminate(a, true);
  u_ = std::move(r.U);
  v_ = std::move(r.V);
  diag_ = std::move(r.diagonal_valuations);
  rank_ = count_finite(diag_);
}

std::optional<Vector> LinearSolver::solve(const Vector& b) const {
  if (b.size() != rows_) fail(ErrorKind::DimensionMismatch, "right-hand side has wrong length");
  const Vector y = u_.apply(b);
  Vector z = zero_vector(spec_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i < rank_) {
      const long vi = diag_[i].value();
      if (vi == 0) {
        z[i] = y[i];
        continue;
      }
      if (valuation(y[i]) < Valuation(vi)) return std::nullopt;
      z[i] = divide_exact(y[i], DvrElement::uniformizer_power(spec_, vi));
    } else if (!y[i].is_zero()) {
      return std::nullopt;
    }
  }
  return v_.apply(z);
}

bool LinearSolver::contains_all(const Matrix& b) const {
  for (std::size_t j = 0; j < b.cols(); ++j) {
    if (!contains(b.col(j))) return false;
  }
  return true;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) { return LinearSolver(a).solve(b); }

long CokernelInvariants::torsion_length() const {
  long s = 0;
  for (long v : torsion_valuations) s += v;
  return s;
}

CokernelInvariants cokernel_invariants(const Matrix& a) {
  const auto diag = snf_valuations(a);
  CokernelInvariants out;
  const std::size_t rk = count_finite(diag);
  out.free_rank = static_cast<long>(a.rows() - rk);
  for (const auto& v : diag) {
    if (!v.is_infinite() && v.value() > 0) out.torsion_valuations.push_back(v.value());
  }
  return out;
}

Matrix column_basis(const Matrix& g) {
  const DvrSpec& spec = g.spec();
  Matrix m = g;
  const std::size_t rows = g.rows();
  std::vector<bool> active(g.cols(), true);
  std::vector<std::size_t> chosen;
  while (true) {
    long best = LONG_MAX;
    std::size_t bi = 0;
    std::size_t bj = 0;
    for (std::size_t i = 0; i < rows && best != 0; ++i) {
      for (std::size_t j = 0; j < g.cols(); ++j) {
        if (!active[j] || m.at(i, j).is_zero()) continue;
        const long v = valuation(m.at(i, j)).value();
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
          if (best == 0) break;
        }
      }
    }
    if (best == LONG_MAX) break;
    active[bj] = false;
    chosen.push_back(bj);
    const DvrElement pivot = m.at(bi, bj);
    for (std::size_t l = 0; l < g.cols(); ++l) {
      if (!active[l] || m.at(bi, l).is_zero()) continue;
      const DvrElement f = divide_exact(m.at(bi, l), pivot);
      for (std::size_t i = 0; i < rows; ++i) {
        if (!m.at(i, bj).is_zero()) m.at(i, l) -= f * m.at(i, bj);
      }
    }
  }
  Matrix out(spec, rows, chosen.size());
  for (std::size_t k = 0; k < chosen.size(); ++k) out.set_col(k, m.col(chosen[k]));
  return out;
}

DvrElement determinant(const Matrix& a) {
  if (a.rows() != a.cols()) fail(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  const DvrSpec& spec = a.spec();
  Matrix m = a;
  const std::size_t n = a.rows();
  DvrElement det = DvrElement::from_int(spec, 1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    Valuation best = Valuation::infinity();
    for (std::size_t i = k; i < n; ++i) {
      const Valuation v = valuation(m.at(i, k));
      if (v < best) {
        best = v;
        piv = i;
      }
    }
    if (piv == n) return DvrElement(spec);
    if (piv != k) {
      m.swap_rows(piv, k);
      det = -det;
    }
    det *= m.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m.at(i, k).is_zero()) continue;
      const DvrElement f = divide_exact(m.at(i, k), m.at(k, k));
      for (std::size_t j = k + 1; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
    }
  }
  return det;
}

}  // namespace conmod
