#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "cyclo/perm.hpp"

namespace cyclo {

// Element of W(n,r) = S_n x| (Z/rZ)^n in the normal form
// w = perm * t_1^{colors[0]} * ... * t_n^{colors[n-1]}.
struct WElem {
  Perm perm;
  std::vector<int> colors;  // entries in [0, r-1]
  int r = 1;

  int n() const { return perm.n(); }
  bool is_identity() const;

  friend auto operator<=>(const WElem& a, const WElem& b) = default;
};

WElem w_identity(int n, int r);
// s_0 = t_1 for i = 0, the adjacent transposition (i, i+1) for 1 <= i <= n-1.
WElem w_generator(int n, int r, int i);
WElem w_torus(int n, int r, int i, int exponent = 1);  // t_i^exponent
WElem w_from_perm(const Perm& x, int r);

WElem w_multiply(const WElem& a, const WElem& b);
WElem w_inverse(const WElem& a);

// All n! * r^n elements, ordered by (one-line permutation, colors).
std::vector<WElem> w_all_elements(int n, int r);

// Index pair (l, mu) with l + |mu| = n for the standard parabolic subgroup
// generated by X_{(l,mu)}.
struct ParabolicIndex {
  int l = 0;
  Composition mu;

  int n() const { return l + mu.total(); }
  friend auto operator<=>(const ParabolicIndex& a, const ParabolicIndex& b) = default;
};

ParabolicIndex full_index(int n);  // (n, empty): the whole group
std::vector<ParabolicIndex> all_parabolic_indices(int n);

// Generator index set X_{(l,mu)} within {0, 1, ..., n-1}; index 0 is present
// iff l >= 1.
std::vector<int> parabolic_generator_set(const ParabolicIndex& p);
// The indices of S_{(l,mu)} = X_{(l,mu)} without the torus generator.
std::vector<int> parabolic_s_indices(const ParabolicIndex& p);

bool parabolic_contains(const ParabolicIndex& p, const WElem& w);
// {x t_1^{a_1} ... t_l^{a_l} : x in S_{(l,mu)}}, size |S_{(l,mu)}| * r^l.
std::vector<WElem> parabolic_elements(const ParabolicIndex& p, int r);

// W^{(l,mu)} (side = right, representatives of W / W_{(l,mu)}) or
// ^{(l,mu)}W (side = left).
std::vector<WElem> one_sided_reps(const ParabolicIndex& p, int r, Side side);
bool is_one_sided_rep(const WElem& w, const ParabolicIndex& p, Side side);

// Everything attached to a distinguished double coset representative
// u = x prod_{i in I(x)} t_i^{a_i}.
struct DoubleCosetDatum {
  WElem u;
  Perm x;                       // permutation part of u
  std::vector<int> i_of_x;      // I(x), increasing
  int c = 0;                    // first index moved by x (n if x = e)
  int k = 0;                    // min{c, l, m}
  std::vector<int> gamma_s;     // s-indices of Gamma(u), increasing
  int gamma_t_count = 0;        // Gamma(u) contains t_1, ..., t_{k}
  Composition pi;               // (k, pi) indexes <Gamma(u)>
  Composition pi_sharp;         // (k, pi_sharp) indexes u^-1 <Gamma(u)> u
  std::map<int, int> psi;       // generator conjugation X_(k,pi) -> X_(k,pi#)

  ParabolicIndex pi_index() const { return ParabolicIndex{k, pi}; }
  ParabolicIndex pi_sharp_index() const { return ParabolicIndex{k, pi_sharp}; }
};

// I(x) = [m+1, n] cap x^-1([l+1, n]).
std::vector<int> color_support(const Perm& x, int l, int m);

// Pairs (j, j') with s_j in S_{(m,nu)} and s_{j'} = x s_j x^-1 a simple
// reflection in S_{(l,mu)}: the adjacent swaps generating the
// color-permuting action of S_{tau(x)}.
std::vector<std::pair<int, int>> tau_swap_pairs(const Perm& x, const ParabolicIndex& a,
                                                const ParabolicIndex& b);

// Minimality of the color vector in its orbit under the color-permuting
// action of S_{tau(x)} (no admissible adjacent swap decreases it).
bool is_orbit_minimal(const Perm& x, const std::vector<int>& colors,
                      const ParabolicIndex& a, const ParabolicIndex& b);

// The action z (.) u permuting color exponents; z must lie in S_{tau(x)}
// where x is the permutation part of u.
WElem orbit_action(const Perm& z, const WElem& u, const ParabolicIndex& a,
                   const ParabolicIndex& b);

// Builds the full datum for a representative u (validates minimality).
DoubleCosetDatum make_datum(const WElem& u, const ParabolicIndex& a,
                            const ParabolicIndex& b);

// The complete set ^{(l,mu)}W^{(m,nu)} of double coset representatives with
// their data, ordered by (permutation, colors).
std::vector<DoubleCosetDatum> double_coset_reps(const ParabolicIndex& a,
                                                const ParabolicIndex& b, int r);

// psi(j) with s_j = u s_{psi(j)} u^-1, for s_j in X_{(k(u), pi(u))}.
int datum_psi(const DoubleCosetDatum& d, int j);

// Brute-force W_{(l,mu)} cap u W_{(m,nu)} u^-1 (sorted).
std::vector<WElem> parabolic_intersection(const ParabolicIndex& a,
                                          const DoubleCosetDatum& d,
                                          const ParabolicIndex& b, int r);

// Subgroup closure of Gamma(u) inside W(n,r) (sorted).
std::vector<WElem> gamma_closure(const DoubleCosetDatum& d, int n, int r);

struct WTriple {
  WElem w1;  // in (W_{(l,mu)})^{(k(u), pi(u))}
  DoubleCosetDatum d;
  WElem w2;  // in W_{(m,nu)}
};

// Unique w = w1 * u * w2 along the double coset decomposition.
WTriple triple_decompose_w(const WElem& w, const ParabolicIndex& a,
                           const ParabolicIndex& b);

// w = w1 * w2 with w1 in (W_up)^{(sub)} and w2 in W_sub; requires
// W_sub <= W_up and w in W_up.
std::pair<WElem, WElem> w_coset_split(const WElem& w, const ParabolicIndex& up,
                                      const ParabolicIndex& sub);

// Representatives (W_up)^{(sub)} of W_up / W_sub, ordered.
std::vector<WElem> relative_reps(const ParabolicIndex& up, const ParabolicIndex& sub,
                                 int r);

}  // namespace cyclo
