#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cyclo/laurent.hpp"
#include "cyclo/wgroup.hpp"

namespace cyclo {

// Coefficients for computations over the generic ground ring
// Z[q, q^-1, Q_1..Q_r].
class GenericCoeffs {
 public:
  using Coeff = LaurentPoly;

  explicit GenericCoeffs(Ring ring);

  const Ring& ring() const { return ring_; }
  int r() const { return ring_.r; }
  Coeff zero() const { return LaurentPoly::zero(ring_); }
  Coeff one() const { return LaurentPoly::one(ring_); }
  Coeff q() const { return LaurentPoly::q_power(ring_, 1); }
  Coeff q_pow(int e) const { return LaurentPoly::q_power(ring_, e); }
  Coeff q_minus_one() const { return qm1_; }
  // Coefficient of T_0^{r-k} in the reduction of T_0^r, k = 1..r.
  const Coeff& char_coeff(int k) const { return char_coeffs_.at(k - 1); }
  static bool is_zero(const Coeff& c) { return c.is_zero(); }
  // num / unit for unit = +-q^e; anything else is not invertible here.
  static Coeff divide_by_unit(const Coeff& num, const Coeff& unit);

 private:
  Ring ring_;
  LaurentPoly qm1_;
  std::vector<LaurentPoly> char_coeffs_;
};

// Coefficients specialized at rationals q = q_val, Q_i = q_big_vals[i-1].
class RationalCoeffs {
 public:
  using Coeff = Rational;

  RationalCoeffs(int r, Rational q_val, std::vector<Rational> q_big_vals);

  int r() const { return r_; }
  const Rational& q_value() const { return q_; }
  const std::vector<Rational>& q_big_values() const { return q_big_; }
  Coeff zero() const { return Rational(0); }
  Coeff one() const { return Rational(1); }
  Coeff q() const { return q_; }
  Coeff q_pow(int e) const { return rational_power(q_, e); }
  Coeff q_minus_one() const { return q_ - 1; }
  const Coeff& char_coeff(int k) const { return char_coeffs_.at(k - 1); }
  static bool is_zero(const Coeff& c) { return c == 0; }
  static Coeff divide_by_unit(const Coeff& num, const Coeff& unit);

 private:
  int r_;
  Rational q_;
  std::vector<Rational> q_big_;
  std::vector<Rational> char_coeffs_;
};

// The cyclotomic Hecke algebra of W(n,r) in the basis
// T_w = T_x L_1^{a_1} ... L_n^{a_n}, elements stored as finite maps
// WElem -> coefficient with no zero coefficients.
template <class Coeffs>
class HeckeAlgebraT {
 public:
  using Coeff = typename Coeffs::Coeff;
  using Elem = std::map<WElem, Coeff>;

  HeckeAlgebraT(int n, Coeffs coeffs);

  int n() const { return n_; }
  int r() const { return coeffs_.r(); }
  const Coeffs& coeffs() const { return coeffs_; }

  Elem zero() const { return {}; }
  Elem one() const;
  Elem t_basis(const WElem& w) const;
  Elem gen(int g) const;          // T_g, 0 <= g <= n-1
  Elem gen_inverse(int j) const;  // T_j^-1 = q^-1 T_j + (q^-1 - 1), j >= 1
  // L_i = q^{1-i} T_{i-1} ... T_1 T_0 T_1 ... T_{i-1}; equals the basis
  // element of t_i when r >= 2, and is a nontrivial combination at r = 1.
  Elem jm_element(int i) const;

  static void add_term(Elem& e, const WElem& w, const Coeff& c);
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem scale(const Elem& a, const Coeff& c) const;
  static bool equal(const Elem& a, const Elem& b) { return a == b; }

  // e * T_g in normal form.
  Elem mul_gen_right(const Elem& e, int g) const;
  // Bilinear associative product; basis-pair products are memoized.
  Elem mul(const Elem& a, const Elem& b) const;

  // T_w as a generator word: T_w = q^{q_exp} T_{g_1} ... T_{g_k}.
  std::pair<std::vector<int>, int> generator_word(const WElem& w) const;

  // T_x L^exps = sum coeff * L^{exps'} T_y with y <= x.
  struct LLeftTerm {
    Coeff coeff;
    std::vector<int> exps;
    Perm y;
  };
  std::vector<LLeftTerm> commute_perm_past_l(const Perm& x, const std::vector<int>& exps) const;

  // Free-module splitting e = sum_{w1} T_{w1} * C_{w1} over the subalgebra
  // of W_sub, with w1 running over (W_up)^{(sub)}; e must be supported on
  // W_up.  Throws InternalError if the triangular peeling fails.
  std::map<WElem, Elem> coset_expand(const Elem& e, const ParabolicIndex& up,
                                     const ParabolicIndex& sub) const;

  // T-tilde basis element T_{w1} T_u T_{w2} along w = w1 u w2.
  Elem tilde_basis(const WElem& w, const ParabolicIndex& a, const ParabolicIndex& b) const;

  // Conjugation through T_u: c * T_u = T_u * twist(c) for c in the algebra
  // of W_{(k(u), pi(u))}.
  Elem twist_past_rep(const Elem& c, const DoubleCosetDatum& d) const;

  // Expansion of e in the T-tilde basis: coefficients c with
  // e = sum_w c_w * tilde T_w.
  std::map<WElem, Coeff> tilde_expand(const Elem& e, const ParabolicIndex& a,
                                      const ParabolicIndex& b) const;

  struct MackeyPair {
    WElem w1;  // representative in (W_{(l,mu)})^{(k(u), pi(u))}
    Elem y;    // element of the subalgebra of W_{(m,nu)}
  };
  struct MackeySummand {
    DoubleCosetDatum datum;
    std::vector<MackeyPair> pairs;
  };
  using MackeyDecomp = std::vector<MackeySummand>;

  // The bimodule decomposition map: e = sum_{u} sum_{pairs} T_{w1} T_u y.
  // Every double coset representative appears as a summand (possibly with no
  // pairs).  mackey_psi multiplies the decomposition back together.
  MackeyDecomp mackey_phi(const Elem& e, const ParabolicIndex& a,
                          const ParabolicIndex& b) const;
  Elem mackey_psi(const MackeyDecomp& decomp) const;
  // T_u * y, the right-hand tensor factor in normal form.
  Elem right_factor(const MackeySummand& s, const MackeyPair& p) const;

  // L_i T_u = T_u L_i (i <= k(u)) and T_{s_j} T_u = T_u T_{x^-1 s_j x}
  // for the generators s_j of S_{(k(u), pi(u))}; exact equality in the
  // algebra.
  bool bimodule_commutation_check(const DoubleCosetDatum& d) const;

 private:
  struct BasisWord {
    std::vector<int> letters;
    int q_exp = 0;
  };
  BasisWord basis_word(const WElem& w) const;
  const Elem& basis_product(const WElem& a, const WElem& b) const;

  // Per index pair: all tilde-basis expansions, the triple indexing, and a
  // peeling order in which the change of basis is triangular with unit
  // diagonal.
  struct TildeTable {
    std::vector<DoubleCosetDatum> reps;
    std::map<WElem, int> order;          // w -> position in the peeling order
    std::vector<WElem> elements;         // ordered by `order`
    std::map<WElem, Elem> tilde;         // w -> tilde T_w in the T basis
    std::map<WElem, WTriple> triples;    // w -> (w1, u, w2)
  };
  const TildeTable& tilde_table(const ParabolicIndex& a, const ParabolicIndex& b) const;

  int n_;
  Coeffs coeffs_;
  mutable std::map<std::pair<WElem, WElem>, Elem> product_cache_;
  mutable std::map<std::pair<ParabolicIndex, ParabolicIndex>, TildeTable> tilde_cache_;
};

using GenericHecke = HeckeAlgebraT<GenericCoeffs>;
using RationalHecke = HeckeAlgebraT<RationalCoeffs>;

extern template class HeckeAlgebraT<GenericCoeffs>;
extern template class HeckeAlgebraT<RationalCoeffs>;

// Convenience: the generic algebra for W(n,r) over Z[q,q^-1,Q_1..Q_r].
GenericHecke make_generic_hecke(int n, int r);
// The default specialization q = 2, Q = (3, 5, 7, ...): first r odd primes.
std::vector<Rational> default_q_big_values(int r);
RationalHecke make_rational_hecke(int n, int r, const Rational& q_val,
                                  const std::vector<Rational>& q_big_vals);

}  // namespace cyclo
