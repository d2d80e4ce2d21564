#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "cyclo/wgroup.hpp"

namespace cyclo {

// Symbolic root: e_i^{(a)} or a difference e_i^{(a)} - e_j^{(b)}, colors in
// Z/rZ.
struct Root {
  bool is_difference = false;
  int i = 1;
  int a = 0;
  int j = 0;  // difference only
  int b = 0;

  friend auto operator<=>(const Root& x, const Root& y) = default;
};

Root single_root(int i, int a, int r);
Root difference_root(int i, int a, int j, int b, int r);
std::string root_str(const Root& root);

enum class ActionMode { dot, star };

// (x t^c) . e_i^(a) = e_{x(i)}^{(a + c_i)};  the star action subtracts.
Root act(const WElem& w, const Root& root, ActionMode mode);

bool in_phi0(const Root& root);

// The root sets of the group and of a standard parabolic subgroup.
struct RootSets {
  std::vector<Root> phi;         // whole root set of W(n,r)
  std::vector<Root> phi0;        // the distinguished "positive-like" subset
  std::vector<Root> phi_sub;     // Phi_{(l,mu)}
  std::vector<Root> omega;       // Omega_{(l,mu)}
  std::vector<Root> omega_tilde; // enlarged variant, equal iff mu = (1^{n-l})
  std::vector<Root> delta;       // Delta_{(l,mu)}
};

RootSets build_sets(const ParabolicIndex& p, int r);

// Word length over {s_0, ..., s_{n-1}} by breadth-first search; the table is
// cached per (n, r).
const std::map<WElem, int>& w_length_table(int n, int r);
int w_length(const WElem& w);

struct RSets {
  std::vector<WElem> r_plain;  // { w : w . Omega subset Phi0 }
  std::vector<WElem> r_star;   // { w : w^-1 * Omega subset Phi0 }
  std::vector<WElem> r0;       // with Omega-tilde
  std::vector<WElem> r_star0;
};

// Exhaustive filters over W(n,r); also asserts the Delta-criterion agrees
// with the Omega-criterion for every element.
RSets r_sets(const ParabolicIndex& p, int r);

}  // namespace cyclo
