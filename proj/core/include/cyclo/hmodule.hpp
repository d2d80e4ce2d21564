#pragma once

#include <map>
#include <vector>

#include "cyclo/hecke.hpp"

namespace cyclo {

// Sparse vector over Q: (index, value) pairs sorted by index, no zeros.
using SparseVec = std::vector<std::pair<int, Rational>>;

SparseVec sparse_unit(int i);
SparseVec sparse_add(const SparseVec& a, const SparseVec& b);
SparseVec sparse_scale(const SparseVec& a, const Rational& c);

// Sparse column-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), cols_data_(cols) {}
  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const SparseVec& col(int j) const { return cols_data_[j]; }
  void set_col(int j, SparseVec v) { cols_data_[j] = std::move(v); }
  void set(int i, int j, const Rational& v);
  Rational at(int i, int j) const;

  SparseVec apply(const SparseVec& v) const;
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  QMatrix scaled(const Rational& c) const;
  friend bool operator==(const QMatrix& a, const QMatrix& b);
  bool is_zero() const;

  // exact rank by fraction Gaussian elimination
  int rank() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<SparseVec> cols_data_;
};

struct Specialization {
  Rational q;
  std::vector<Rational> q_big;
};

// A finite-dimensional left module over the subalgebra indexed by `algebra`,
// at a fixed specialization: one matrix per generator index in X_{(l,mu)}.
struct HModule {
  ParabolicIndex algebra;
  int n = 0;
  int r = 0;
  int dim = 0;
  std::map<int, QMatrix> gen_action;
  Specialization spec;
};

// Left regular module of the subalgebra (basis T_w, w in W_{(l,mu)}).
HModule regular_module(const RationalHecke& h, const ParabolicIndex& p);
// One-dimensional module T_i -> t_scalar (i >= 1), T_0 -> Q_{q_index}.
// t_scalar must be q or -1 for the quadratic relation to hold.
HModule one_dim_module(const RationalHecke& h, const ParabolicIndex& p,
                       const Rational& t_scalar, int q_index);

// Defining relations of the subalgebra hold for the module's matrices.
bool module_satisfies_relations(const HModule& m);

// Restriction to a smaller standard parabolic subalgebra (matrix reuse).
HModule restrict_module(const HModule& m, const ParabolicIndex& sub);

// Induction H_up (x)_{H_sub} M along the free basis of representatives.
HModule induce_module(const RationalHecke& h, const HModule& m, const ParabolicIndex& up);

// Twist a module over the subalgebra of (k(u), pi#(u)) into one over
// (k(u), pi(u)): the generator s_j acts by the psi(j)-matrix.
HModule twist_module(const HModule& m, const DoubleCosetDatum& d);

// Action of an algebra element supported on the module's subalgebra.
SparseVec apply_elem(const RationalHecke& h, const HModule& m,
                     const RationalHecke::Elem& c, const SparseVec& v);

struct MackeyFunctorReport {
  int lhs_dim = 0;
  int rhs_dim = 0;
  bool dims_match = false;
  bool bijective = false;
  bool equivariant = false;

  bool ok() const { return dims_match && bijective && equivariant; }
};

// Builds both sides of the restriction-of-induction decomposition for the
// module m over W_{(m,nu)}, restricting to W_{(l,mu)} = a, together with the
// explicit basis intertwiner, and verifies it is a two-sided inverse pair
// and commutes with every generator of the target subalgebra.
MackeyFunctorReport mackey_functor_check(const RationalHecke& h, const HModule& m,
                                         const ParabolicIndex& a);

}  // namespace cyclo
