#ifndef STARGRAPH_GF_HPP
#define STARGRAPH_GF_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "stargraph/errors.hpp"

namespace stargraph {

// Arithmetic over GF(p^n) for desk-scale orders. Elements are packed as
// integers in [0, q): the value sum c_i * p^i encodes the coefficient
// vector (c_0, ..., c_{n-1}). Comparing packed values orders elements by
// highest-degree coefficient first, which is the ordering used for "least
// primitive element".
class Field {
 public:
  // Supported orders: all primes p <= 257 plus the prime powers from the
  // built-in irreducible-polynomial table (4, 8, 9, 16, 25, 27, 32, 49,
  // 64, 81, 121, 125, 128). Throws UsageError otherwise.
  static const Field& get(std::uint32_t q);

  Field(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> reduction_poly);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return n_; }
  std::uint32_t order() const { return q_; }
  const std::vector<std::uint32_t>& reduction_poly() const { return poly_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;  // throws UsageError on 0
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  std::vector<std::uint32_t> to_coeffs(std::uint32_t a) const;
  std::uint32_t from_coeffs(const std::vector<std::uint32_t>& c) const;

  // Least element (packed-value order) of multiplicative order q-1.
  std::uint32_t primitive_element() const;
  std::uint64_t multiplicative_order(std::uint32_t a) const;

  // {x^2 : x != 0}; requires odd q.
  std::vector<std::uint32_t> quadratic_residues() const;

  std::string to_string() const;  // "GF(p)" or "GF(p^n)/<poly>"

 private:
  std::uint32_t p_, n_, q_;
  std::vector<std::uint32_t> poly_;  // monic, poly_[i] = coeff of x^i, size n_+1
  mutable std::uint32_t primitive_ = 0;

  void check_irreducible() const;
};

bool is_prime(std::uint32_t x);

}  // namespace stargraph

#endif
