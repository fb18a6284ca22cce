#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lefschetz {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Coefficient ring: the integers, the rationals, or a prime field Z/p.
class Ring {
 public:
  enum class Kind { Integers, Rationals, PrimeField };

  static Ring integers() { return Ring(Kind::Integers, 0); }
  static Ring rationals() { return Ring(Kind::Rationals, 0); }
  /// Throws UnsupportedRing unless p is a prime below 2^32.
  static Ring prime_field(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  bool is_field() const noexcept { return kind_ != Kind::Integers; }

  /// Canonical representative of an integer in this ring: unchanged over
  /// Z and Q, the residue in [0, p) over Z/p.
  Integer reduce(const Integer& value) const;

  /// "Z", "Q" or "Zp 5"; the form used on the .lef ring line.
  std::string name() const;
  /// Parses "Z", "Q", "Zp <p>" (also "Z<p>" / "F<p>" / "GF(<p>)" shorthands).
  static Ring parse(const std::string& text);

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  std::uint64_t modulus_;
};

bool is_prime(std::uint64_t n);

}  // namespace lefschetz
