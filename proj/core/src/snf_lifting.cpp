// Smith form of large square matrices over Z_(p).
//
// Rows are scaled to integers, a pivoted elimination modulo p^N produces a small integer
// transform U with U A' = D B' where B' is invertible mod p, and V = B'^-1 = A'^-1 U^-1 D is
// obtained by q-adic lifting (Dixon) with an a-posteriori exactness certificate.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <optional>
#include <random>

#include "conmod/linalg.hpp"

namespace conmod {

namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;

__extension__ using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

// Inverse of a modulo m (gcd(a, m) = 1).
u64 invmod(u64 a, u64 m) {
  i64 t0 = 0, t1 = 1;
  i64 r0 = static_cast<i64>(m), r1 = static_cast<i64>(a % m);
  while (r1 != 0) {
    const i64 q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (t0 < 0) t0 += static_cast<i64>(m);
  return static_cast<u64>(t0);
}

double log2_abs(const mpz_class& x) {
  if (x == 0) return -INFINITY;
  long e = 0;
  const double d = mpz_get_d_2exp(&e, x.get_mpz_t());
  return std::log2(std::fabs(d)) + static_cast<double>(e);
}

struct IntMatrix {
  std::size_t n = 0;
  std::vector<mpz_class> a;  // row-major
  mpz_class& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

// Largest prime below 2^bits that differs from p and for which m is invertible; inverse returned.
struct ModularInverse {
  u64 q = 0;
  std::vector<double> inv;  // row-major, entries in [0, q)
};

std::optional<std::vector<double>> inverse_mod(const IntMatrix& m, u64 q) {
  const std::size_t n = m.n;
  const std::size_t w = 2 * n;
  std::vector<u64> g(n * w, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g[i * w + j] = mpz_fdiv_ui(m.at(i, j).get_mpz_t(), q);
    g[i * w + n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && g[piv * w + c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != c)
      for (std::size_t j = 0; j < w; ++j) std::swap(g[piv * w + j], g[c * w + j]);
    const u64 iv = invmod(g[c * w + c], q);
    for (std::size_t j = 0; j < w; ++j) g[c * w + j] = mulmod(g[c * w + j], iv, q);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || g[i * w + c] == 0) continue;
      const u64 f = g[i * w + c];
      for (std::size_t j = c; j < w; ++j) {
        if (g[c * w + j] != 0) g[i * w + j] = (g[i * w + j] + q - mulmod(f, g[c * w + j], q)) % q;
      }
    }
  }
  std::vector<double> inv(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i * n + j] = static_cast<double>(g[i * w + n + j]);
  return inv;
}

std::optional<ModularInverse> pick_lifting_prime(const IntMatrix& m, u64 p, int bits) {
  u64 candidate = (u64{1} << bits) - 1;
  int tries = 0;
  while (tries < 4 && candidate > 2) {
    if (candidate != p && is_prime(candidate)) {
      ++tries;
      if (auto inv = inverse_mod(m, candidate)) return ModularInverse{candidate, std::move(*inv)};
    }
    candidate -= 2;
  }
  return std::nullopt;
}

// c = a * b for row-major doubles a (r x k) and b (k x s); exact when all partial sums stay below
// 2^53. 4 x 8 register blocks; the vector extension lowers to whatever the clone targets.
using Lane4 = double __attribute__((vector_size(32)));

__attribute__((target_clones("avx512f", "avx2", "default")))
void gemm(const std::vector<double>& a, const std::vector<double>& b, std::vector<double>& c, std::size_t r,
          std::size_t k, std::size_t s) {
  std::fill(c.begin(), c.end(), 0.0);
  const std::size_t r4 = r - r % 4;
  const std::size_t s8 = s - s % 8;
  for (std::size_t i = 0; i < r4; i += 4) {
    for (std::size_t j = 0; j < s8; j += 8) {
      Lane4 acc[4][2] = {};
      for (std::size_t l = 0; l < k; ++l) {
        Lane4 b0;
        Lane4 b1;
        std::memcpy(&b0, &b[l * s + j], sizeof b0);
        std::memcpy(&b1, &b[l * s + j + 4], sizeof b1);
        for (std::size_t ii = 0; ii < 4; ++ii) {
          const double x = a[(i + ii) * k + l];
          acc[ii][0] += x * b0;
          acc[ii][1] += x * b1;
        }
      }
      for (std::size_t ii = 0; ii < 4; ++ii) {
        std::memcpy(&c[(i + ii) * s + j], &acc[ii][0], sizeof(Lane4));
        std::memcpy(&c[(i + ii) * s + j + 4], &acc[ii][1], sizeof(Lane4));
      }
    }
    for (std::size_t ii = i; ii < i + 4; ++ii)
      for (std::size_t l = 0; l < k; ++l)
        for (std::size_t j = s8; j < s; ++j) c[ii * s + j] += a[ii * k + l] * b[l * s + j];
  }
  for (std::size_t i = r4; i < r; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < s; ++j) c[i * s + j] += a[i * k + l] * b[l * s + j];
}

// x mod q in [0, q) for an integer-valued double |x| < 2^53.
inline double reduce(double x, double q, double q_inv) {
  double r = x - q * std::floor(x * q_inv);
  if (r < 0) r += q;
  if (r >= q) r -= q;
  return r;
}

// q-adic digits of A^-1 rhs: rhs is n x cols, digits stored step-major. Residuals stay below
// 2^53 in magnitude, so all arithmetic here is exact in doubles.
bool dixon_digits(const std::vector<double>& a_dbl, std::size_t n, const ModularInverse& mi, const std::vector<i64>& rhs,
                  std::size_t cols, std::size_t steps, std::vector<std::uint32_t>& digits) {
  const double q = static_cast<double>(mi.q);
  const double q_inv = 1.0 / q;
  std::vector<double> residual(rhs.begin(), rhs.end());
  std::vector<double> rmod(n * cols);
  std::vector<double> x(n * cols);
  std::vector<double> ax(n * cols);
  digits.assign(steps * n * cols, 0);
  for (std::size_t step = 0; step < steps; ++step) {
    for (std::size_t k = 0; k < residual.size(); ++k) rmod[k] = reduce(residual[k], q, q_inv);
    gemm(mi.inv, rmod, x, n, n, cols);
    std::uint32_t* out = &digits[step * n * cols];
    for (std::size_t k = 0; k < x.size(); ++k) {
      x[k] = reduce(x[k], q, q_inv);
      out[k] = static_cast<std::uint32_t>(x[k]);
    }
    gemm(a_dbl, x, ax, n, n, cols);
    bool exact = true;
    for (std::size_t k = 0; k < residual.size(); ++k) {
      const double diff = residual[k] - ax[k];
      const double next = std::nearbyint(diff * q_inv);
      exact &= next * q == diff;
      residual[k] = next;
    }
    if (!exact) return false;
  }
  return true;
}

// value = sum_i digit_i q^i, most significant digits folded in pairs.
mpz_class assemble(const std::vector<std::uint32_t>& digits, std::size_t stride, std::size_t offset,
                   std::size_t steps, u64 q) {
  mpz_class x = 0;
  std::size_t i = steps;
  if (i % 2 == 1) {
    --i;
    x = static_cast<unsigned long>(digits[i * stride + offset]);
  }
  const unsigned long q2 = static_cast<unsigned long>(q * q);
  while (i > 0) {
    i -= 2;
    const u64 hi = digits[(i + 1) * stride + offset];
    const u64 lo = digits[i * stride + offset];
    mpz_mul_ui(x.get_mpz_t(), x.get_mpz_t(), q2);
    mpz_add_ui(x.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(hi * q + lo));
  }
  return x;
}

// (num, den) with num = den * y mod m, |num| <= nb, 0 < den <= db.
std::optional<std::pair<mpz_class, mpz_class>> rational_reconstruction(const mpz_class& y, const mpz_class& m,
                                                                        const mpz_class& nb, const mpz_class& db) {
  mpz_class r0 = m;
  mpz_class r1 = y % m;
  if (r1 < 0) r1 += m;
  mpz_class t0 = 0;
  mpz_class t1 = 1;
  mpz_class quo;
  mpz_class tmp;
  while (r1 > nb) {
    mpz_fdiv_q(quo.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - quo * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - quo * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > db) return std::nullopt;
  if (t1 < 0) {
    t1 = -t1;
    r1 = -r1;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  return std::make_pair(r1, t1);
}

// gcd(x, d) for every x. A prime dividing some gcd divides t = gcd(d, prod x mod d), so only
// the t-smooth part of d has to be compared against each entry.
std::vector<mpz_class> gcds_with(const std::vector<mpz_class>& xs, const mpz_class& d) {
  mpz_class prod = 1;
  for (const auto& x : xs) {
    if (x == 0) continue;
    prod *= x;
    mpz_fdiv_r(prod.get_mpz_t(), prod.get_mpz_t(), d.get_mpz_t());
  }
  mpz_class t;
  mpz_gcd(t.get_mpz_t(), prod.get_mpz_t(), d.get_mpz_t());
  mpz_class rest = d;
  mpz_class g;
  while (true) {
    mpz_gcd(g.get_mpz_t(), rest.get_mpz_t(), t.get_mpz_t());
    if (g == 1) break;
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), g.get_mpz_t());
  }
  const mpz_class smooth = d / rest;
  std::vector<mpz_class> out(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (xs[k] == 0) {
      out[k] = d;
      continue;
    }
    mpz_gcd(out[k].get_mpz_t(), xs[k].get_mpz_t(), smooth.get_mpz_t());
  }
  return out;
}

mpz_class symmetric_mod(const mpz_class& x, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

std::size_t rank_mod(const std::vector<u64>& src, std::size_t n, u64 p) {
  std::vector<u64> m = src;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < n; ++c) {
    std::size_t piv = rank;
    while (piv < n && m[piv * n + c] == 0) ++piv;
    if (piv == n) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < n; ++j) std::swap(m[piv * n + j], m[rank * n + j]);
    const u64 iv = invmod(m[rank * n + c], p);
    for (std::size_t i = rank + 1; i < n; ++i) {
      const u64 f = mulmod(m[i * n + c], iv, p);
      if (f == 0) continue;
      for (std::size_t j = c; j < n; ++j) m[i * n + j] = (m[i * n + j] + p - mulmod(f, m[rank * n + j], p)) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

namespace detail {

std::optional<SnfResult> snf_lifted(const Matrix& a) {
  const DvrSpec& spec = a.spec();
  if (spec.kind() != DvrKind::ZLocal || a.rows() != a.cols() || a.rows() == 0) return std::nullopt;
  const std::size_t n = a.rows();
  const u64 p = spec.prime();

  // A' = S A with S = diag(lcm of row denominators), a unit transform.
  std::vector<mpz_class> row_scale(n, 1);
  IntMatrix scaled{n, std::vector<mpz_class>(n * n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(row_scale[i].get_mpz_t(), row_scale[i].get_mpz_t(),
                                                 a.at(i, j).rational().get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& x = a.at(i, j).rational();
      scaled.at(i, j) = x.get_num() * (row_scale[i] / x.get_den());
    }
  }

  double max_bits = 0;
  for (const auto& x : scaled.a) max_bits = std::max(max_bits, log2_abs(x));
  const double log_n = std::log2(static_cast<double>(n));
  const int prime_bits =
      static_cast<int>(std::min(std::floor((52.0 - std::ceil(log_n)) / 2.0), 52.0 - std::ceil(log_n) - std::ceil(max_bits) - 1));
  if (prime_bits < 16) return std::nullopt;

  // Pivoted elimination modulo p^N; only the row transform is tracked.
  int precision = 0;
  u64 modulus = 1;
  while (modulus <= (u64{1} << 31) / p) {
    modulus *= p;
    ++precision;
  }
  std::vector<u64> t(n * n);
  for (std::size_t k = 0; k < n * n; ++k) t[k] = mpz_fdiv_ui(scaled.a[k].get_mpz_t(), modulus);
  std::vector<u64> un(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) un[i * n + i] = 1;
  auto val_mod = [&](u64 x) {
    if (x == 0) return precision;
    int v = 0;
    while (x % p == 0) {
      x /= p;
      ++v;
    }
    return v;
  };

  std::vector<bool> row_used(n, false);
  std::vector<bool> col_used(n, false);
  std::vector<std::size_t> pivot_row(n);
  std::vector<int> step_val(n);
  for (std::size_t k = 0; k < n; ++k) {
    int best = precision;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < n && best > 0; ++i) {
      if (row_used[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (col_used[j] || t[i * n + j] == 0) continue;
        const int v = val_mod(t[i * n + j]);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
          if (best == 0) break;
        }
      }
    }
    if (2 * best + 1 > precision) return std::nullopt;
    row_used[bi] = true;
    col_used[bj] = true;
    pivot_row[k] = bi;
    step_val[k] = best;
    u64 pk = 1;
    for (int e = 0; e < best; ++e) pk *= p;
    const u64 inv_unit = invmod((t[bi * n + bj] / pk) % modulus, modulus);
    for (std::size_t i = 0; i < n; ++i) {
      if (row_used[i] || t[i * n + bj] == 0) continue;
      const u64 f = mulmod(t[i * n + bj] / pk, inv_unit, modulus);
      for (std::size_t j = 0; j < n; ++j) {
        if (t[bi * n + j] != 0) t[i * n + j] = (t[i * n + j] + modulus - mulmod(f, t[bi * n + j], modulus)) % modulus;
        if (un[bi * n + j] != 0) un[i * n + j] = (un[i * n + j] + modulus - mulmod(f, un[bi * n + j], modulus)) % modulus;
      }
    }
  }

  // Small integer U: unit steps keep their original row, the others their transform row reduced
  // modulo p^(v+1).
  std::vector<std::vector<std::pair<std::size_t, i64>>> u_rows(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t r = pivot_row[k];
    if (step_val[k] == 0) {
      u_rows[k].emplace_back(r, 1);
      continue;
    }
    i64 m = 1;
    for (int e = 0; e <= step_val[k]; ++e) m *= static_cast<i64>(p);
    for (std::size_t j = 0; j < n; ++j) {
      i64 c = static_cast<i64>(un[r * n + j] % static_cast<u64>(m));
      if (2 * c > m) c -= m;
      if (c != 0) u_rows[k].emplace_back(j, c);
    }
  }

  // B' = D^-1 U A' must be integral and invertible mod p; then V = B'^-1 lies in GL_n(O).
  std::vector<u64> b_mod(n * n);
  mpz_class acc;
  for (std::size_t k = 0; k < n; ++k) {
    mpz_class pv;
    mpz_ui_pow_ui(pv.get_mpz_t(), p, static_cast<unsigned long>(step_val[k]));
    for (std::size_t j = 0; j < n; ++j) {
      acc = 0;
      for (const auto& [col, c] : u_rows[k]) acc += scaled.at(col, j) * c;
      if (!mpz_divisible_p(acc.get_mpz_t(), pv.get_mpz_t())) return std::nullopt;
      mpz_divexact(acc.get_mpz_t(), acc.get_mpz_t(), pv.get_mpz_t());
      b_mod[k * n + j] = mpz_fdiv_ui(acc.get_mpz_t(), p);
    }
  }
  if (rank_mod(b_mod, n, p) != n) return std::nullopt;

  // W = U^-1 D. U is unit triangular in the pivot order, so W is integral.
  std::vector<std::size_t> order_of_row(n);
  for (std::size_t k = 0; k < n; ++k) order_of_row[pivot_row[k]] = k;
  std::vector<mpz_class> w(n * n);
  for (std::size_t c = 0; c < n; ++c) {
    mpz_ui_pow_ui(w[pivot_row[c] * n + c].get_mpz_t(), p, static_cast<unsigned long>(step_val[c]));
    for (std::size_t k = c + 1; k < n; ++k) {
      if (step_val[k] == 0) continue;
      acc = 0;
      for (const auto& [col, coef] : u_rows[k]) {
        if (col != pivot_row[k] && order_of_row[col] < k) acc -= w[col * n + c] * coef;
      }
      w[pivot_row[k] * n + c] = acc;
    }
  }
  double max_w_bits = 0;
  for (const auto& x : w) max_w_bits = std::max(max_w_bits, log2_abs(x));
  if (max_w_bits > 40) return std::nullopt;

  // Hadamard bound for det A' and the smallest column norm.
  double log_h = 0;
  double log_min_col = INFINITY;
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0;
    double top = -INFINITY;
    for (std::size_t i = 0; i < n; ++i) top = std::max(top, log2_abs(scaled.at(i, j)));
    if (top == -INFINITY) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) {
      const double l = log2_abs(scaled.at(i, j));
      if (l != -INFINITY) s += std::exp2(2 * (l - top));
    }
    const double lc = top + 0.5 * std::log2(s);
    log_h += lc;
    log_min_col = std::min(log_min_col, lc);
  }

  auto lifting = pick_lifting_prime(scaled, p, prime_bits);
  if (!lifting) return std::nullopt;
  const u64 q = lifting->q;
  const double log_q = std::log2(static_cast<double>(q));
  std::vector<double> a_dbl(n * n);
  for (std::size_t k = 0; k < n * n; ++k) a_dbl[k] = scaled.a[k].get_d();

  // A common denominator of A'^-1 from one random right-hand side.
  constexpr int kProbeBits = 10;
  std::mt19937_64 rng(0x5eed);
  std::vector<i64> probe(n);
  for (auto& x : probe) x = static_cast<i64>(rng() % (2u << kProbeBits)) - (i64{1} << kProbeBits);
  const double num_bits = log_h + 0.5 * log_n + kProbeBits - log_min_col + 2;
  const double den_bits = log_h + 2;
  const auto probe_steps = static_cast<std::size_t>(std::ceil((num_bits + den_bits + 4) / log_q));
  std::vector<std::uint32_t> digits;
  if (!dixon_digits(a_dbl, n, *lifting, probe, 1, probe_steps, digits)) return std::nullopt;
  mpz_class probe_mod;
  mpz_ui_pow_ui(probe_mod.get_mpz_t(), q, probe_steps);
  mpz_class num_bound = 1;
  mpz_class den_bound = 1;
  num_bound <<= static_cast<mp_bitcnt_t>(std::ceil(num_bits));
  den_bound <<= static_cast<mp_bitcnt_t>(std::ceil(den_bits));
  mpz_class denom = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const mpz_class y = symmetric_mod(assemble(digits, n, i, probe_steps, q) * denom, probe_mod);
    if (abs(y) <= num_bound) continue;
    auto rr = rational_reconstruction(y, probe_mod, num_bound, den_bound);
    if (!rr) return std::nullopt;
    denom *= rr->second;
  }

  // X = A'^-1 W lifted far enough that denom * X is determined by its residue. The probe can
  // miss small factors of the true denominator; those are recovered from the residues, within
  // the slack reserved here.
  constexpr double kDenominatorSlack = 32;
  const double log_x_bound = log_h + 0.5 * log_n + max_w_bits - log_min_col + 1;
  const double log_residual = std::max(log_n + max_bits + log_x_bound,
                                       log2_abs(denom) + kDenominatorSlack + max_w_bits) + 2;
  const auto steps = static_cast<std::size_t>(std::ceil((log_residual + kDenominatorSlack + 1) / log_q));
  std::vector<i64> rhs(n * n);
  for (std::size_t k = 0; k < n * n; ++k) rhs[k] = w[k].get_si();
  if (!dixon_digits(a_dbl, n, *lifting, rhs, n, steps, digits)) return std::nullopt;
  mpz_class lift_mod;
  mpz_ui_pow_ui(lift_mod.get_mpz_t(), q, steps);
  const auto x_bound_bits = static_cast<std::size_t>(std::ceil(log_x_bound));
  mpz_class x_bound = 1;
  x_bound <<= x_bound_bits;
  mpz_class slack_bound = 1;
  slack_bound <<= static_cast<mp_bitcnt_t>(kDenominatorSlack);
  const mpz_class probe_denom = denom;

  std::vector<mpz_class> lifted(n * n);
  for (std::size_t k = 0; k < n * n; ++k) lifted[k] = assemble(digits, n * n, k, steps, q);
  std::vector<mpz_class> numer(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    numer[k] = symmetric_mod(lifted[k] * denom, lift_mod);
    // |numer| < 2^x_bound_bits with A' numer == denom W mod q^steps forces equality over Z.
    if (numer[k] == 0 || mpz_sizeinbase(numer[k].get_mpz_t(), 2) <= x_bound_bits) continue;
    auto rr = rational_reconstruction(numer[k], lift_mod, x_bound, slack_bound);
    if (!rr) return std::nullopt;
    denom *= rr->second;
    if (denom > probe_denom * slack_bound) return std::nullopt;
    k = static_cast<std::size_t>(-1);  // restart with the enlarged denominator
  }

  Matrix v(spec, n, n);
  const std::vector<mpz_class> common = gcds_with(numer, denom);
  for (std::size_t k = 0; k < n * n; ++k) {
    try {
      v.at(k / n, k % n) = DvrElement::from_reduced_fraction(spec, numer[k] / common[k], denom / common[k]);
    } catch (const Error&) {
      return std::nullopt;
    }
  }

  Matrix u(spec, n, n);
  Matrix d(spec, n, n);
  std::vector<Valuation> diag(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& [col, c] : u_rows[k]) u.at(k, col) = DvrElement::from_integer(spec, mpz_class(c) * row_scale[col]);
    d.at(k, k) = DvrElement::uniformizer_power(spec, step_val[k]);
    diag[k] = Valuation(step_val[k]);
  }
  return SnfResult{std::move(u), std::move(d), std::move(v), std::move(diag)};
}

}  // namespace detail

namespace {

bool verify_product_integral(const Matrix& a, const SnfResult& r) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<mpz_class> u_den(m, 1);
  std::vector<mpz_class> v_den(n, 1);
  mpz_class a_den = 1;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      mpz_lcm(u_den[i].get_mpz_t(), u_den[i].get_mpz_t(), r.U.at(i, j).rational().get_den_mpz_t());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(a_den.get_mpz_t(), a_den.get_mpz_t(), a.at(i, j).rational().get_den_mpz_t());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(v_den[j].get_mpz_t(), v_den[j].get_mpz_t(), r.V.at(i, j).rational().get_den_mpz_t());

  auto integral = [](const mpq_class& x, const mpz_class& scale) -> mpz_class { return x.get_num() * (scale / x.get_den()); };
  std::vector<mpz_class> ui(m * m), ai(m * n), vi(n * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) ui[i * m + j] = integral(r.U.at(i, j).rational(), u_den[i]);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) ai[i * n + j] = integral(a.at(i, j).rational(), a_den);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) vi[i * n + j] = integral(r.V.at(i, j).rational(), v_den[j]);

  std::vector<mpz_class> t(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      if (ui[i * m + k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (ai[k * n + j] != 0) mpz_addmul(t[i * n + j].get_mpz_t(), ui[i * m + k].get_mpz_t(), ai[k * n + j].get_mpz_t());
      }
    }
  std::vector<mpz_class> prod(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (t[i * n + k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (vi[k * n + j] != 0) mpz_addmul(prod[i * n + j].get_mpz_t(), t[i * n + k].get_mpz_t(), vi[k * n + j].get_mpz_t());
      }
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& dij = r.D.at(i, j).rational();
      const mpz_class expected = dij.get_num() * u_den[i] * v_den[j] * a_den;  // D entries are integers
      if (dij.get_den() != 1 || prod[i * n + j] != expected) return false;
    }
  return true;
}

}  // namespace

bool verify_snf(const Matrix& a, const SnfResult& r) {
  const DvrSpec& spec = a.spec();
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (r.U.rows() != m || r.U.cols() != m || r.V.rows() != n || r.V.cols() != n || r.D.rows() != m ||
      r.D.cols() != n || r.diagonal_valuations.size() != std::min(m, n))
    return false;
  if (!(r.U.spec() == spec && r.V.spec() == spec && r.D.spec() == spec)) return false;
  for (std::size_t k = 1; k < r.diagonal_valuations.size(); ++k) {
    if (r.diagonal_valuations[k] < r.diagonal_valuations[k - 1]) return false;
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) {
        if (!r.D.at(i, j).is_zero()) return false;
        continue;
      }
      const Valuation& v = r.diagonal_valuations[i];
      const DvrElement expected = v.is_infinite() ? DvrElement(spec) : DvrElement::uniformizer_power(spec, v.value());
      if (!(r.D.at(i, i) == expected)) return false;
    }
  if (!detail::invertible_mod_uniformizer(r.U) || !detail::invertible_mod_uniformizer(r.V)) return false;
  if (spec.kind() == DvrKind::ZLocal) return verify_product_integral(a, r);
  return r.U * a * r.V == r.D;
}

}  // namespace conmod
