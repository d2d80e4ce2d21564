#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "cyclo/error.hpp"

namespace cyclo {

using Integer = mpz_class;
using Rational = mpq_class;

// The ground ring Z[q, q^-1, Q_1, ..., Q_r].  The number r of Q-parameters is
// fixed per ring and carried by this context value; mixing polynomials from
// rings with different r is a ConfigError.
struct Ring {
  int r = 0;

  friend bool operator==(const Ring&, const Ring&) = default;
};

// q^{q_exp} * Q_1^{qe[0]} * ... * Q_r^{qe[r-1]}; q_exp may be negative, the
// Q-exponents may not.
struct Monomial {
  int q_exp = 0;
  std::vector<int> q_big_exps;  // length r, entries >= 0

  friend auto operator<=>(const Monomial& a, const Monomial& b) = default;
};

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(Ring ring) : ring_(ring) {}
  LaurentPoly(Ring ring, const Integer& constant);

  static LaurentPoly zero(Ring ring) { return LaurentPoly(ring); }
  static LaurentPoly one(Ring ring) { return LaurentPoly(ring, 1); }
  // q^e
  static LaurentPoly q_power(Ring ring, int e);
  // Q_i, 1-based
  static LaurentPoly q_param(Ring ring, int i);

  const Ring& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Integer>& terms() const { return terms_; }

  // Coefficient of a monomial (zero if absent).
  Integer coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Integer& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  // Ring homomorphism q -> q_val, Q_i -> q_vals[i-1]; requires q_val != 0.
  Rational specialize(const Rational& q_val, const std::vector<Rational>& q_big_vals) const;

  // Textual form "3*q^-2*Q1*Q3^2 + ..." with terms in the canonical monomial
  // order; parse() inverts it exactly.
  std::string str() const;
  static LaurentPoly parse(Ring ring, const std::string& text);

 private:
  void check_same_ring(const LaurentPoly& o) const;

  Ring ring_;
  std::map<Monomial, Integer> terms_;  // no zero coefficients stored
};

// Elementary symmetric polynomial e_k(Q_1..Q_r) in the ring's Q-parameters.
LaurentPoly elementary_symmetric(Ring ring, int k);

// base^e for integer e (negative allowed, base != 0 then).
Rational rational_power(const Rational& base, int e);

}  // namespace cyclo
