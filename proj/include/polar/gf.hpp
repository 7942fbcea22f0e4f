#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace polar {

// Element of F_q, stored as its canonical index in [0, q). For prime fields
// this is the residue; for extension fields it is the coefficient vector read
// as a base-p number (coefficient of x^i is digit i).
struct Elem {
  std::uint16_t v = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(std::uint16_t idx) : v(idx) {}

  constexpr bool is_zero() const { return v == 0; }
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  // Throws std::invalid_argument unless q is an odd prime power, 3 <= q <= 1024.
  static FieldPtr create(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return e_; }
  // Coefficients c_0..c_e of the monic modulus (empty for prime fields).
  const std::vector<int>& modulus() const { return modulus_; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  // Image of an integer under Z -> F_p -> F_q.
  Elem from_int(long long n) const;
  // Element with canonical index idx.
  Elem at(int idx) const;

  Elem add(Elem a, Elem b) const { return Elem{add_[a.v * q_ + b.v]}; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const { return Elem{mul_[a.v * q_ + b.v]}; }
  Elem neg(Elem a) const { return Elem{neg_[a.v]}; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long k) const;

  bool is_square(Elem a) const { return square_[a.v] != 0; }
  // Root with the smaller canonical index. Throws std::domain_error on non-squares.
  Elem sqrt(Elem a) const;

  // Smallest-index z with z and 1-z both non-squares.
  Elem z() const { return z_; }
  Elem half() const { return half_; }
  // Member of {a, -a} with the smaller canonical index, in increasing order.
  const std::vector<Elem>& omega() const { return omega_; }
  bool in_omega(Elem a) const;
  Elem omega_rep(Elem a) const;
  // Generator of the multiplicative group (smallest index).
  Elem primitive() const { return primitive_; }

  std::vector<Elem> elements() const;
  std::string to_string(Elem a) const { return std::to_string(a.v); }

 private:
  Field() = default;
  void build_prime();
  void build_extension();
  void finish();

  int q_ = 0, p_ = 0, e_ = 0;
  std::vector<int> modulus_;
  std::vector<std::uint16_t> add_, mul_, neg_, inv_, sqrt_;
  std::vector<std::uint8_t> square_;
  Elem z_, half_, primitive_;
  std::vector<Elem> omega_;
};

}  // namespace polar
