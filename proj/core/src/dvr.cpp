#include "conmod/dvr.hpp"

#include <algorithm>
#include <sstream>

namespace conmod {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

// --- polynomials over F_p -------------------------------------------------

void trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly poly_add(const FpPoly& a, const FpPoly& b, u64 p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  trim(r);
  return r;
}

FpPoly poly_neg(const FpPoly& a, u64 p) {
  FpPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] == 0 ? 0 : p - a[i];
  return r;
}

FpPoly poly_mul(const FpPoly& a, const FpPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}

FpPoly poly_scale(const FpPoly& a, u64 c, u64 p) {
  FpPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], c, p);
  trim(r);
  return r;
}

// Quotient and remainder of a by nonzero b.
std::pair<FpPoly, FpPoly> poly_divmod(FpPoly a, const FpPoly& b, u64 p) {
  if (a.size() < b.size()) return {{}, a};
  const u64 lead_inv = invmod(b.back(), p);
  FpPoly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = a.size(); k-- >= b.size();) {
    const u64 c = mulmod(a[k], lead_inv, p);
    q[k - (b.size() - 1)] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::size_t idx = k - (b.size() - 1) + j;
      a[idx] = (a[idx] + p - mulmod(c, b[j], p)) % p;
    }
  }
  trim(a);
  trim(q);
  return {q, a};
}

FpPoly poly_gcd(FpPoly a, FpPoly b, u64 p) {
  while (!b.empty()) {
    auto r = poly_divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = poly_scale(a, invmod(a.back(), p), p);
  return a;
}

std::size_t poly_order(const FpPoly& f) {
  std::size_t k = 0;
  while (k < f.size() && f[k] == 0) ++k;
  return k;
}

std::string poly_to_string(const FpPoly& f) {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || f[i] != 1) os << f[i];
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace

// --- DvrSpec / Valuation ---------------------------------------------------

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are deterministic for all 64-bit n.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {
void check_prime(std::uint64_t p) {
  if (p >= (1ULL << 31)) fail(ErrorKind::InvalidArgument, "prime must be below 2^31");
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
}
}  // namespace

DvrSpec DvrSpec::zlocal(std::uint64_t p) {
  check_prime(p);
  return DvrSpec(DvrKind::ZLocal, p);
}

DvrSpec DvrSpec::ratfunc(std::uint64_t p) {
  check_prime(p);
  return DvrSpec(DvrKind::RatFuncLocal, p);
}

std::string DvrSpec::to_string() const {
  return (kind_ == DvrKind::ZLocal ? "ZLocal(" : "RatFuncLocal(") + std::to_string(p_) + ")";
}

long Valuation::value() const {
  if (infinite_) fail(ErrorKind::InvalidArgument, "valuation is infinite");
  return v_;
}

std::string Valuation::to_string() const { return infinite_ ? "inf" : std::to_string(v_); }

// --- DvrElement --------------------------------------------------------------

DvrElement::DvrElement(const DvrSpec& spec) : spec_(spec) {
  if (spec.kind() == DvrKind::ZLocal) {
    value_ = mpq_class(0);
  } else {
    value_ = PolyFraction{{}, {1}};
  }
}

DvrElement::DvrElement(const DvrSpec& spec, mpq_class q) : spec_(spec), value_(std::move(q)) {}

DvrElement::DvrElement(const DvrSpec& spec, PolyFraction f) : spec_(spec), value_(std::move(f)) {}

DvrElement DvrElement::from_int(const DvrSpec& spec, long value) { return from_integer(spec, mpz_class(value)); }

DvrElement DvrElement::from_integer(const DvrSpec& spec, const mpz_class& value) {
  if (spec.kind() == DvrKind::ZLocal) return DvrElement(spec, mpq_class(value));
  const u64 p = spec.prime();
  mpz_class r = value % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  FpPoly num;
  if (r != 0) num.push_back(r.get_ui());
  return DvrElement(spec, PolyFraction{num, {1}});
}

DvrElement DvrElement::from_fraction(const DvrSpec& spec, const mpz_class& num, const mpz_class& den) {
  if (spec.kind() != DvrKind::ZLocal) fail(ErrorKind::SpecMismatch, "integer fraction for " + spec.to_string());
  if (den == 0) fail(ErrorKind::InvalidArgument, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  if (mpz_divisible_ui_p(q.get_den_mpz_t(), spec.prime()) != 0) {
    fail(ErrorKind::NotAUnit, "denominator of " + q.get_str() + " is not a unit in " + spec.to_string());
  }
  return DvrElement(spec, std::move(q));
}

DvrElement DvrElement::from_reduced_fraction(const DvrSpec& spec, mpz_class num, mpz_class den) {
  if (spec.kind() != DvrKind::ZLocal) fail(ErrorKind::SpecMismatch, "integer fraction for " + spec.to_string());
  if (den <= 0) fail(ErrorKind::InvalidArgument, "reduced fraction needs a positive denominator");
  if (mpz_divisible_ui_p(den.get_mpz_t(), spec.prime()) != 0) {
    fail(ErrorKind::NotAUnit, "denominator " + den.get_str() + " is not a unit in " + spec.to_string());
  }
  mpq_class q;
  mpz_swap(q.get_num_mpz_t(), num.get_mpz_t());
  mpz_swap(q.get_den_mpz_t(), den.get_mpz_t());
  return DvrElement(spec, std::move(q));
}

DvrElement DvrElement::from_polys(const DvrSpec& spec, FpPoly num, FpPoly den) {
  if (spec.kind() != DvrKind::RatFuncLocal) fail(ErrorKind::SpecMismatch, "polynomial fraction for " + spec.to_string());
  const u64 p = spec.prime();
  for (auto& c : num) c %= p;
  for (auto& c : den) c %= p;
  trim(num);
  trim(den);
  if (den.empty()) fail(ErrorKind::InvalidArgument, "zero denominator");
  if (num.empty()) return DvrElement(spec);
  const FpPoly g = poly_gcd(num, den, p);
  if (g.size() > 1) {
    num = poly_divmod(num, g, p).first;
    den = poly_divmod(den, g, p).first;
  }
  if (den[0] == 0) fail(ErrorKind::NotAUnit, "denominator " + poly_to_string(den) + " is not a unit");
  const u64 c = invmod(den[0], p);
  return DvrElement(spec, PolyFraction{poly_scale(num, c, p), poly_scale(den, c, p)});
}

DvrElement DvrElement::uniformizer_power(const DvrSpec& spec, long exponent) {
  if (exponent < 0) fail(ErrorKind::InvalidArgument, "negative power of the uniformizer");
  if (spec.kind() == DvrKind::ZLocal) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), spec.prime(), static_cast<unsigned long>(exponent));
    return DvrElement(spec, mpq_class(r));
  }
  FpPoly num(static_cast<std::size_t>(exponent) + 1, 0);
  num.back() = 1;
  return DvrElement(spec, PolyFraction{num, {1}});
}

bool DvrElement::is_zero() const noexcept {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<PolyFraction>(value_).num.empty();
}

bool DvrElement::is_one() const noexcept {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  const auto& f = std::get<PolyFraction>(value_);
  return f.num.size() == 1 && f.num[0] == 1 && f.den.size() == 1;
}

const mpq_class& DvrElement::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  fail(ErrorKind::SpecMismatch, "rational() on " + spec_.to_string());
}

const FpPoly& DvrElement::poly_num() const {
  if (const auto* f = std::get_if<PolyFraction>(&value_)) return f->num;
  fail(ErrorKind::SpecMismatch, "poly_num() on " + spec_.to_string());
}

const FpPoly& DvrElement::poly_den() const {
  if (const auto* f = std::get_if<PolyFraction>(&value_)) return f->den;
  fail(ErrorKind::SpecMismatch, "poly_den() on " + spec_.to_string());
}

std::string DvrElement::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  const auto& f = std::get<PolyFraction>(value_);
  if (f.den.size() == 1) return poly_to_string(f.num);
  return "(" + poly_to_string(f.num) + ")/(" + poly_to_string(f.den) + ")";
}

void DvrElement::check_spec(const DvrElement& o) const {
  if (!(spec_ == o.spec_)) fail(ErrorKind::SpecMismatch, spec_.to_string() + " vs " + o.spec_.to_string());
}

DvrElement& DvrElement::operator+=(const DvrElement& o) {
  check_spec(o);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(o.value_);
    return *this;
  }
  const u64 p = spec_.prime();
  auto& f = std::get<PolyFraction>(value_);
  const auto& g = std::get<PolyFraction>(o.value_);
  if (f.den.size() == 1 && g.den.size() == 1) {
    f.num = poly_add(f.num, g.num, p);
    return *this;
  }
  *this = from_polys(spec_, poly_add(poly_mul(f.num, g.den, p), poly_mul(g.num, f.den, p), p),
                     poly_mul(f.den, g.den, p));
  return *this;
}

DvrElement& DvrElement::operator-=(const DvrElement& o) { return *this += -o; }

DvrElement& DvrElement::operator*=(const DvrElement& o) {
  check_spec(o);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(o.value_);
    return *this;
  }
  const u64 p = spec_.prime();
  auto& f = std::get<PolyFraction>(value_);
  const auto& g = std::get<PolyFraction>(o.value_);
  if (f.den.size() == 1 && g.den.size() == 1) {
    f.num = poly_mul(f.num, g.num, p);
    return *this;
  }
  *this = from_polys(spec_, poly_mul(f.num, g.num, p), poly_mul(f.den, g.den, p));
  return *this;
}

DvrElement operator-(const DvrElement& a) {
  if (const auto* q = std::get_if<mpq_class>(&a.value_)) return DvrElement(a.spec_, mpq_class(-*q));
  const auto& f = std::get<DvrElement::PolyFraction>(a.value_);
  return DvrElement(a.spec_, DvrElement::PolyFraction{poly_neg(f.num, a.spec_.prime()), f.den});
}

bool DvrElement::operator==(const DvrElement& o) const {
  if (!(spec_ == o.spec_)) return false;
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == std::get<mpq_class>(o.value_);
  const auto& f = std::get<PolyFraction>(value_);
  const auto& g = std::get<PolyFraction>(o.value_);
  return f.num == g.num && f.den == g.den;
}

// --- free functions ------------------------------------------------------------

DvrElement add(const DvrElement& a, const DvrElement& b) { return a + b; }
DvrElement mul(const DvrElement& a, const DvrElement& b) { return a * b; }
DvrElement neg(const DvrElement& a) { return -a; }

Valuation valuation(const DvrElement& a) {
  if (a.is_zero()) return Valuation::infinity();
  if (a.spec().kind() == DvrKind::ZLocal) {
    mpz_class rest;
    const auto v = mpz_remove(rest.get_mpz_t(), a.rational().get_num_mpz_t(), mpz_class(a.spec().prime()).get_mpz_t());
    return Valuation(static_cast<long>(v));
  }
  return Valuation(static_cast<long>(poly_order(a.poly_num())));
}

DvrElement invert_unit(const DvrElement& a) {
  if (a.is_zero() || valuation(a) != Valuation(0)) {
    fail(ErrorKind::NotAUnit, a.to_string() + " in " + a.spec().to_string());
  }
  if (a.spec().kind() == DvrKind::ZLocal) {
    const mpq_class& q = a.rational();
    return DvrElement::from_fraction(a.spec(), q.get_den(), q.get_num());
  }
  return DvrElement::from_polys(a.spec(), a.poly_den(), a.poly_num());
}

Normalized normalize(const DvrElement& a) {
  if (a.is_zero()) fail(ErrorKind::ZeroElement, "normalize(0)");
  const DvrSpec& spec = a.spec();
  if (spec.kind() == DvrKind::ZLocal) {
    mpz_class rest;
    const auto v =
        mpz_remove(rest.get_mpz_t(), a.rational().get_num_mpz_t(), mpz_class(spec.prime()).get_mpz_t());
    return {DvrElement::from_fraction(spec, rest, a.rational().get_den()), Valuation(static_cast<long>(v))};
  }
  const auto& num = a.poly_num();
  const std::size_t v = poly_order(num);
  FpPoly shifted(num.begin() + static_cast<std::ptrdiff_t>(v), num.end());
  return {DvrElement::from_polys(spec, shifted, a.poly_den()), Valuation(static_cast<long>(v))};
}

std::uint64_t residue(const DvrElement& a) {
  const u64 p = a.spec().prime();
  if (a.spec().kind() == DvrKind::ZLocal) {
    const mpq_class& q = a.rational();
    const u64 n = mpz_fdiv_ui(q.get_num_mpz_t(), p);
    const u64 d = mpz_fdiv_ui(q.get_den_mpz_t(), p);
    return mulmod(n, invmod(d, p), p);
  }
  const auto& num = a.poly_num();
  return num.empty() ? 0 : num[0];
}

DvrElement divide_exact(const DvrElement& a, const DvrElement& b) {
  if (b.is_zero()) fail(ErrorKind::ZeroElement, "division by zero");
  if (a.is_zero()) return DvrElement(a.spec());
  if (!(a.spec() == b.spec())) fail(ErrorKind::SpecMismatch, a.spec().to_string() + " vs " + b.spec().to_string());
  if (a.spec().kind() == DvrKind::ZLocal) {
    mpq_class q = a.rational() / b.rational();
    if (mpz_divisible_ui_p(q.get_den_mpz_t(), a.spec().prime()) != 0) {
      fail(ErrorKind::NotAUnit, a.to_string() + " / " + b.to_string() + " is not in O");
    }
    return DvrElement::from_fraction(a.spec(), q.get_num(), q.get_den());
  }
  const u64 p = a.spec().prime();
  return DvrElement::from_polys(a.spec(), poly_mul(a.poly_num(), b.poly_den(), p),
                                poly_mul(a.poly_den(), b.poly_num(), p));
}

}  // namespace conmod
