#pragma once

#include <cstdint>
#include <string>

#include "hookcells/errors.hpp"

namespace hookcells {

// Arithmetic in GF(p) on plain ints in [0, p).  The verification layer
// needs p to exceed the socle degree of the instance under test; callers
// enforce that bound where the instance is known.
class PrimeModulus {
 public:
  explicit PrimeModulus(int p) : p_(p) {
    if (p < 2) throw InvalidModulus("modulus must be at least 2");
    for (int q = 2; static_cast<std::int64_t>(q) * q <= p; ++q)
      if (p % q == 0)
        throw InvalidModulus(std::to_string(p) + " is not prime");
  }

  int value() const { return p_; }

  int add(int a, int b) const { return (a + b) % p_; }
  int sub(int a, int b) const { return (a - b + p_) % p_; }
  int neg(int a) const { return (p_ - a) % p_; }
  int mul(int a, int b) const {
    return static_cast<int>(static_cast<std::int64_t>(a) * b % p_);
  }
  int reduce(std::int64_t a) const {
    return static_cast<int>((a % p_ + p_) % p_);
  }

  int pow(int a, int e) const {
    int result = 1;
    int base = a % p_;
    for (; e > 0; e >>= 1) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
    }
    return result;
  }

  // Nonzero a only.
  int inv(int a) const {
    if (a % p_ == 0) throw InvalidModulus("inverse of zero");
    return pow(a, p_ - 2);
  }

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  int p_;
};

// Smallest prime strictly greater than n.
inline PrimeModulus next_prime(int n) {
  int candidate = n < 2 ? 2 : n + 1;
  for (;; ++candidate) {
    bool prime = candidate >= 2;
    for (int q = 2; static_cast<std::int64_t>(q) * q <= candidate; ++q)
      if (candidate % q == 0) {
        prime = false;
        break;
      }
    if (prime) return PrimeModulus(candidate);
  }
}

}  // namespace hookcells
