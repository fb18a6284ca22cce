#include "lefschetz/ring.hpp"

#include <cctype>
#include <sstream>

#include "lefschetz/errors.hpp"

namespace lefschetz {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Ring Ring::prime_field(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32)) {
    throw UnsupportedRing("modulus " + std::to_string(p) + " too large");
  }
  if (!is_prime(p)) {
    throw UnsupportedRing(std::to_string(p) + " is not prime");
  }
  return Ring(Kind::PrimeField, p);
}

Integer Ring::reduce(const Integer& value) const {
  if (kind_ != Kind::PrimeField) return value;
  Integer r = value % modulus_;
  if (r < 0) r += modulus_;
  return r;
}

std::string Ring::name() const {
  switch (kind_) {
    case Kind::Integers:
      return "Z";
    case Kind::Rationals:
      return "Q";
    case Kind::PrimeField:
      return "Zp " + std::to_string(modulus_);
  }
  return "?";
}

namespace {

std::uint64_t parse_modulus(const std::string& digits, const std::string& text) {
  if (digits.empty() || digits.size() > 19) throw UnsupportedRing(text);
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw UnsupportedRing(text);
  }
  return std::stoull(digits);
}

}  // namespace

Ring Ring::parse(const std::string& text) {
  std::istringstream in(text);
  std::string head, arg, extra;
  in >> head >> arg >> extra;
  if (!extra.empty()) throw UnsupportedRing(text);
  if (head == "Z" && arg.empty()) return integers();
  if (head == "Q" && arg.empty()) return rationals();
  if (head == "Zp" && !arg.empty()) return prime_field(parse_modulus(arg, text));
  if (arg.empty()) {
    if (head.size() > 1 && (head[0] == 'Z' || head[0] == 'F')) {
      return prime_field(parse_modulus(head.substr(1), text));
    }
    if (head.rfind("GF(", 0) == 0 && head.back() == ')') {
      return prime_field(parse_modulus(head.substr(3, head.size() - 4), text));
    }
  }
  throw UnsupportedRing(text);
}

}  // namespace lefschetz
