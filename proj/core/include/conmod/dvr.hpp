#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "conmod/error.hpp"

namespace conmod {

enum class DvrKind { ZLocal, RatFuncLocal };

// Which discrete valuation ring O we compute over. Both kinds have residue field F_p.
//   ZLocal(p):       rationals whose reduced denominator is prime to p, uniformizer p.
//   RatFuncLocal(p): F_p(t) functions whose denominator has nonzero constant term, uniformizer t.
class DvrSpec {
 public:
  static DvrSpec zlocal(std::uint64_t p);
  static DvrSpec ratfunc(std::uint64_t p);

  DvrKind kind() const noexcept { return kind_; }
  std::uint64_t prime() const noexcept { return p_; }
  std::string to_string() const;

  bool operator==(const DvrSpec&) const = default;

 private:
  DvrSpec(DvrKind kind, std::uint64_t p) : kind_(kind), p_(p) {}
  DvrKind kind_;
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

// A non-negative integer, or Infinity (the valuation of zero).
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr explicit Valuation(long v) : v_(v) {}
  static constexpr Valuation infinity() {
    Valuation v;
    v.infinite_ = true;
    return v;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  long value() const;
  std::string to_string() const;

  constexpr bool operator==(const Valuation& o) const noexcept {
    return infinite_ == o.infinite_ && (infinite_ || v_ == o.v_);
  }
  constexpr std::strong_ordering operator<=>(const Valuation& o) const noexcept {
    if (infinite_ || o.infinite_) return infinite_ <=> o.infinite_;
    return v_ <=> o.v_;
  }
  friend constexpr Valuation operator+(Valuation a, Valuation b) noexcept {
    if (a.infinite_ || b.infinite_) return infinity();
    return Valuation(a.v_ + b.v_);
  }

 private:
  long v_ = 0;
  bool infinite_ = false;
};

// Coefficients of a polynomial over F_p, lowest degree first, no trailing zeros.
using FpPoly = std::vector<std::uint64_t>;

class DvrElement {
 public:
  explicit DvrElement(const DvrSpec& spec);  // zero

  static DvrElement from_int(const DvrSpec& spec, long value);
  static DvrElement from_integer(const DvrSpec& spec, const mpz_class& value);
  // ZLocal only; raises NotAUnit when the reduced denominator is divisible by p.
  static DvrElement from_fraction(const DvrSpec& spec, const mpz_class& num, const mpz_class& den);
  // As from_fraction, but the caller guarantees gcd(num, den) = 1 and den > 0; skips the gcd.
  static DvrElement from_reduced_fraction(const DvrSpec& spec, mpz_class num, mpz_class den);
  // RatFuncLocal only; raises NotAUnit when den has zero constant term after reduction.
  static DvrElement from_polys(const DvrSpec& spec, FpPoly num, FpPoly den);
  static DvrElement uniformizer_power(const DvrSpec& spec, long exponent);

  const DvrSpec& spec() const noexcept { return spec_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  // ZLocal accessors (canonical: gcd 1, positive denominator).
  const mpq_class& rational() const;
  // RatFuncLocal accessors (canonical: coprime, denominator constant term 1).
  const FpPoly& poly_num() const;
  const FpPoly& poly_den() const;

  std::string to_string() const;

  DvrElement& operator+=(const DvrElement& o);
  DvrElement& operator-=(const DvrElement& o);
  DvrElement& operator*=(const DvrElement& o);

  friend DvrElement operator+(DvrElement a, const DvrElement& b) { return a += b; }
  friend DvrElement operator-(DvrElement a, const DvrElement& b) { return a -= b; }
  friend DvrElement operator*(DvrElement a, const DvrElement& b) { return a *= b; }
  friend DvrElement operator-(const DvrElement& a);

  bool operator==(const DvrElement& o) const;

 private:
  struct PolyFraction {
    FpPoly num;
    FpPoly den;
  };

  DvrElement(const DvrSpec& spec, mpq_class q);
  DvrElement(const DvrSpec& spec, PolyFraction f);
  void check_spec(const DvrElement& o) const;

  DvrSpec spec_;
  std::variant<mpq_class, PolyFraction> value_;
};

DvrElement add(const DvrElement& a, const DvrElement& b);
DvrElement mul(const DvrElement& a, const DvrElement& b);
DvrElement neg(const DvrElement& a);
Valuation valuation(const DvrElement& a);
DvrElement invert_unit(const DvrElement& a);

struct Normalized {
  DvrElement unit;
  Valuation valuation;
};
// a = unit * uniformizer^v with v finite; raises ZeroElement for a = 0.
Normalized normalize(const DvrElement& a);

// Image of a in the residue field F_p, as an integer in [0, p).
std::uint64_t residue(const DvrElement& a);

// a / b, which must lie in O (valuation(a) >= valuation(b), b != 0).
DvrElement divide_exact(const DvrElement& a, const DvrElement& b);

}  // namespace conmod
