#include "matstar/field.hpp"

#include <charconv>
#include <utility>

namespace matstar {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::InfiniteField: return "InfiniteField";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::SamplingFailed: return "SamplingFailed";
    case ErrorKind::NotTraceless: return "NotTraceless";
    case ErrorKind::DecompositionFailed: return "DecompositionFailed";
    case ErrorKind::UnparameterizableSolution: return "UnparameterizableSolution";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p > (std::uint64_t{1} << 31) || !is_prime(p))
    throw Error(ErrorKind::InvalidField, "modulus " + std::to_string(p) + " is not a prime <= 2^31");
  return FieldSpec{p};
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "rational") return rational();
  if (text.starts_with("gf:")) {
    auto digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && !digits.empty())
      return prime(p);
  }
  throw Error(ErrorKind::Parse, "field must be \"rational\" or \"gf:<p>\", got \"" + std::string(text) + "\"");
}

std::string FieldSpec::to_string() const {
  return p_ == 0 ? std::string("rational") : "gf:" + std::to_string(p_);
}

Scalar Scalar::zero(FieldSpec f) { return from_int(f, 0); }
Scalar Scalar::one(FieldSpec f) { return from_int(f, 1); }

Scalar Scalar::from_int(FieldSpec f, std::int64_t v) {
  if (!f.is_finite()) return Scalar(mpq_class(static_cast<long>(v)));
  auto p = static_cast<std::int64_t>(f.modulus());
  auto r = v % p;
  if (r < 0) r += p;
  return Scalar(f, static_cast<std::uint64_t>(r));
}

Scalar Scalar::from_rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  return Scalar(std::move(c));
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Scalar Scalar::parse(FieldSpec f, std::string_view text) {
  auto body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  auto slash = body.find('/');
  auto num = body.substr(0, slash);
  auto den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  bool ok = all_digits(num) && (slash == std::string_view::npos || all_digits(den));
  if (!ok) throw Error(ErrorKind::Parse, "malformed scalar \"" + std::string(text) + "\"");

  bool negative = !text.empty() && text.front() == '-';
  mpz_class n(std::string(num), 10);
  if (negative) n = -n;
  if (!f.is_finite()) {
    mpz_class d = slash == std::string_view::npos ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in \"" + std::string(text) + "\"");
    return from_rational(mpq_class(n, d));
  }
  if (slash != std::string_view::npos)
    throw Error(ErrorKind::Parse, "prime-field scalar must be an integer, got \"" + std::string(text) + "\"");
  mpz_class p(static_cast<unsigned long>(f.modulus()));
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return Scalar(f, r.get_ui());
}

bool Scalar::is_zero() const noexcept {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 1 % field_.modulus();
  return std::get<mpq_class>(value_) == 1;
}

std::uint64_t Scalar::residue() const {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r;
  throw Error(ErrorKind::MixedFields, "residue() on a rational scalar");
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw Error(ErrorKind::MixedFields, "rational() on a prime-field scalar");
}

void Scalar::require_same_field(const Scalar& rhs) const {
  if (field_ != rhs.field_)
    throw Error(ErrorKind::MixedFields, field_.to_string() + " vs " + rhs.field_.to_string());
}

namespace {

// Extended Euclid on (a, p); a is nonzero and reduced.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  auto r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    auto q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return Scalar(field_, inverse_mod(*r, field_.modulus()));
  mpq_class q = 1 / std::get<mpq_class>(value_);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<std::uint64_t>(&value_))
    return Scalar(field_, *r == 0 ? 0 : field_.modulus() - *r);
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    *r += std::get<std::uint64_t>(rhs.value_);
    if (*r >= field_.modulus()) *r -= field_.modulus();
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    auto s = std::get<std::uint64_t>(rhs.value_);
    *r = *r >= s ? *r - s : *r + field_.modulus() - s;
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    *r = (*r * std::get<std::uint64_t>(rhs.value_)) % field_.modulus();
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inv();
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return std::to_string(*r);
  return std::get<mpq_class>(value_).get_str(10);
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::vector<Scalar> enumerate_scalars(FieldSpec f) {
  if (!f.is_finite()) throw Error(ErrorKind::InfiniteField, "cannot enumerate the rationals");
  std::vector<Scalar> out;
  out.reserve(f.modulus());
  for (std::uint64_t r = 0; r < f.modulus(); ++r) out.push_back(Scalar::from_int(f, static_cast<std::int64_t>(r)));
  return out;
}

}  // namespace matstar
