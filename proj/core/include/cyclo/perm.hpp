#pragma once

#include <compare>
#include <vector>

#include "cyclo/error.hpp"

namespace cyclo {

// Permutation of [1,n] in one-line notation: images_[i-1] = image of i.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);
  // Adjacent transposition (i, i+1), 1 <= i <= n-1.
  static Perm transposition(int n, int i);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  // (a*b)(i) = a(b(i))
  friend Perm operator*(const Perm& a, const Perm& b);

  friend auto operator<=>(const Perm& a, const Perm& b) = default;

 private:
  std::vector<int> images_;
};

// Composition of a non-negative integer: positive parts (zeros are stripped
// on construction, so (2,0,1) and (2,1) index the same parabolic subgroup).
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int total() const { return total_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }

  friend auto operator<=>(const Composition& a, const Composition& b) = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

// A filling of the diagram of a composition with 1..n, stored row by row.
class Tableau {
 public:
  Tableau(Composition shape, std::vector<std::vector<int>> rows);
  // The row-reading filling 1,2,...,n.
  static Tableau row_filling(const Composition& shape);

  const Composition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  bool row_standard() const;
  // Entry-wise action (x . t)(cell) = x(t(cell)).
  Tableau acted_by(const Perm& x) const;

 private:
  Composition shape_;
  std::vector<std::vector<int>> rows_;
};

enum class Side { left, right };

// All n! permutations, in lexicographic one-line order.
std::vector<Perm> all_perms(int n);

// Coxeter length = inversion count; equals the length of reduced_word(x).
int perm_length(const Perm& x);

// Reduced word by the descent-picking rule: repeatedly strip a right descent.
// Letters are generator indices i with s_i = (i, i+1).
std::vector<int> reduced_word(const Perm& x);

// Generator index set of the parabolic subgroup S_mu (indices i such that s_i
// is a generator of the Young subgroup of shape mu).
std::vector<int> parabolic_generators(const Composition& mu);

// The composition of n whose parabolic generator set is exactly `gens`
// (a set of indices in [1, n-1] closed under nothing in particular).
Composition composition_from_generators(int n, const std::vector<int>& gens);

// Membership in the Young subgroup S_mu.
bool in_parabolic(const Perm& x, const Composition& mu);

// Distinguished coset representatives: S^mu = {x : l(x s) > l(x) for s in
// S_mu} (minimal in x S_mu), and mirrored for the left version.
bool is_coset_rep(const Perm& x, const Composition& mu, Side side);
std::vector<Perm> coset_reps(const Composition& mu, Side side);

// ^mu S^nu = ^mu S  intersect  S^nu.
bool is_double_coset_rep(const Perm& x, const Composition& mu, const Composition& nu);
std::vector<Perm> double_coset_reps(const Composition& mu, const Composition& nu);

// The composition tau(x) with S_tau = S_mu intersect x S_nu x^-1, for
// x in ^mu S^nu.  Throws DomainError if x is not a distinguished
// representative.
Composition tau(const Perm& x, const Composition& mu, const Composition& nu);

struct TripleDecomposition {
  Perm y;  // in (S_mu)^{tau(x)}
  Perm x;  // in ^mu S^nu
  Perm z;  // in S_nu
};

// Unique w = y x z with lengths adding up.
TripleDecomposition triple_decompose(const Perm& w, const Composition& mu,
                                     const Composition& nu);

// Split w = w1 * w2 with w2 in S_mu and w1 the distinguished representative
// of w S_mu (so lengths add).
std::pair<Perm, Perm> coset_split(const Perm& w, const Composition& mu);

// The constants of the key combinatorial lemma for x in ^{(l,mu)}S^{(m,nu)}:
// c = min{ i >= 0 : x(i+1) != i+1 or i = n } and k = min{c, l, m}.  The
// guaranteed conclusions (x fixes [1,k] pointwise and permutes [k+1,n], and
// [1,l] intersect x([1,m]) = [1,k]) are asserted; their failure means the
// precondition was violated.
std::pair<int, int> lemma_constants(const Perm& x, int l, int m);

// (l, mu) as a composition of n = l + |mu|, with a leading part l (dropped
// when l = 0).
Composition prefixed_composition(int l, const Composition& mu);

}  // namespace cyclo
