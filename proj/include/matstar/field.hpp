#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "matstar/error.hpp"

namespace matstar {

/// The scalar field: either the rationals or a prime field GF(p), p <= 2^31.
class FieldSpec {
 public:
  enum class Kind { rational, prime };

  static FieldSpec rational() { return FieldSpec{0}; }
  /// Throws InvalidField unless p is a prime not exceeding 2^31.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "rational" or "gf:<p>".
  static FieldSpec parse(std::string_view text);

  Kind kind() const noexcept { return p_ == 0 ? Kind::rational : Kind::prime; }
  bool is_finite() const noexcept { return p_ != 0; }
  /// 0 for the rationals.
  std::uint64_t modulus() const noexcept { return p_; }
  std::uint64_t characteristic() const noexcept { return p_; }

  std::string to_string() const;

  friend bool operator==(FieldSpec, FieldSpec) = default;

 private:
  explicit FieldSpec(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

inline std::uint64_t characteristic(FieldSpec f) { return f.characteristic(); }

bool is_prime(std::uint64_t p);

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator; residues are kept reduced into [0, p).
class Scalar {
 public:
  static Scalar zero(FieldSpec f);
  static Scalar one(FieldSpec f);
  static Scalar from_int(FieldSpec f, std::int64_t v);
  static Scalar from_rational(const mpq_class& q);
  /// Rational: "a", "-a", "a/b". Prime field: any decimal integer, reduced mod p.
  static Scalar parse(FieldSpec f, std::string_view text);

  FieldSpec field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Prime fields only.
  std::uint64_t residue() const;
  /// Rationals only.
  const mpq_class& rational() const;

  Scalar inv() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  /// Canonical text encoding, the inverse of parse().
  std::string to_string() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  Scalar(FieldSpec f, std::uint64_t r) : field_(f), value_(r) {}
  explicit Scalar(mpq_class q) : field_(FieldSpec::rational()), value_(std::move(q)) {}
  void require_same_field(const Scalar& rhs) const;

  FieldSpec field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

inline Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
inline Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
inline Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
inline Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

/// All p residues in ascending order. Throws InfiniteField for the rationals.
std::vector<Scalar> enumerate_scalars(FieldSpec f);

}  // namespace matstar
