#include "cyclo/wgroup.hpp"

#include <algorithm>
#include <set>

namespace cyclo {

namespace {

int mod_r(int v, int r) {
  v %= r;
  return v < 0 ? v + r : v;
}

void check_compatible(const WElem& a, const WElem& b) {
  if (a.n() != b.n() || a.r != b.r) throw ConfigError("group element dimension mismatch");
}

// Enumerates color vectors supported on `positions` (1-based), in
// lexicographic order by position, invoking f on each.
template <class F>
void for_each_color_vector(int n, int r, const std::vector<int>& positions, F&& f) {
  std::vector<int> colors(n, 0);
  for (;;) {
    f(colors);
    int i = static_cast<int>(positions.size()) - 1;
    while (i >= 0) {
      int& c = colors[positions[i] - 1];
      if (++c < r) break;
      c = 0;
      --i;
    }
    if (i < 0) break;
  }
}

// If p is the adjacent transposition s_i, returns i.
std::optional<int> as_simple_reflection(const Perm& p) {
  int i = 0;
  for (int j = 1; j < p.n(); ++j) {
    if (p(j) == j + 1) {
      i = j;
      break;
    }
    if (p(j) != j) return std::nullopt;
  }
  if (i == 0) return std::nullopt;
  if (p(i + 1) != i) return std::nullopt;
  for (int j = 1; j <= p.n(); ++j) {
    if (j == i || j == i + 1) continue;
    if (p(j) != j) return std::nullopt;
  }
  return i;
}

}  // namespace

bool WElem::is_identity() const {
  if (!perm.is_identity()) return false;
  for (int c : colors)
    if (c != 0) return false;
  return true;
}

WElem w_identity(int n, int r) { return WElem{Perm::identity(n), std::vector<int>(n, 0), r}; }

WElem w_generator(int n, int r, int i) {
  if (i == 0) return w_torus(n, r, 1);
  return WElem{Perm::transposition(n, i), std::vector<int>(n, 0), r};
}

WElem w_torus(int n, int r, int i, int exponent) {
  if (i < 1 || i > n) throw ConfigError("torus index out of range");
  WElem w = w_identity(n, r);
  w.colors[i - 1] = mod_r(exponent, r);
  return w;
}

WElem w_from_perm(const Perm& x, int r) { return WElem{x, std::vector<int>(x.n(), 0), r}; }

WElem w_multiply(const WElem& a, const WElem& b) {
  check_compatible(a, b);
  const int n = a.n();
  std::vector<int> colors(n);
  for (int j = 1; j <= n; ++j) colors[j - 1] = mod_r(a.colors[b.perm(j) - 1] + b.colors[j - 1], a.r);
  return WElem{a.perm * b.perm, std::move(colors), a.r};
}

WElem w_inverse(const WElem& a) {
  const int n = a.n();
  const Perm xinv = a.perm.inverse();
  std::vector<int> colors(n);
  for (int j = 1; j <= n; ++j) colors[j - 1] = mod_r(-a.colors[xinv(j) - 1], a.r);
  return WElem{xinv, std::move(colors), a.r};
}

std::vector<WElem> w_all_elements(int n, int r) {
  std::vector<WElem> out;
  std::vector<int> all_positions(n);
  for (int i = 0; i < n; ++i) all_positions[i] = i + 1;
  for (const Perm& x : all_perms(n)) {
    for_each_color_vector(n, r, all_positions,
                          [&](const std::vector<int>& c) { out.push_back(WElem{x, c, r}); });
  }
  return out;
}

ParabolicIndex full_index(int n) { return ParabolicIndex{n, Composition(std::vector<int>{})}; }

namespace {

void compositions_of(int m, std::vector<int>& prefix, std::vector<Composition>& out) {
  if (m == 0) {
    out.push_back(Composition(prefix));
    return;
  }
  for (int p = 1; p <= m; ++p) {
    prefix.push_back(p);
    compositions_of(m - p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<ParabolicIndex> all_parabolic_indices(int n) {
  std::vector<ParabolicIndex> out;
  for (int l = n; l >= 0; --l) {
    std::vector<Composition> comps;
    std::vector<int> prefix;
    compositions_of(n - l, prefix, comps);
    for (const auto& mu : comps) out.push_back(ParabolicIndex{l, mu});
  }
  return out;
}

std::vector<int> parabolic_s_indices(const ParabolicIndex& p) {
  return parabolic_generators(prefixed_composition(p.l, p.mu));
}

std::vector<int> parabolic_generator_set(const ParabolicIndex& p) {
  std::vector<int> out;
  if (p.l >= 1) out.push_back(0);
  for (int i : parabolic_s_indices(p)) out.push_back(i);
  return out;
}

bool parabolic_contains(const ParabolicIndex& p, const WElem& w) {
  if (!in_parabolic(w.perm, prefixed_composition(p.l, p.mu))) return false;
  for (int j = p.l + 1; j <= w.n(); ++j)
    if (w.colors[j - 1] != 0) return false;
  return true;
}

std::vector<WElem> parabolic_elements(const ParabolicIndex& p, int r) {
  const int n = p.n();
  const Composition shape = prefixed_composition(p.l, p.mu);
  std::vector<int> positions;
  for (int i = 1; i <= p.l; ++i) positions.push_back(i);
  std::vector<WElem> out;
  for (const Perm& x : all_perms(n)) {
    if (!in_parabolic(x, shape)) continue;
    for_each_color_vector(n, r, positions,
                          [&](const std::vector<int>& c) { out.push_back(WElem{x, c, r}); });
  }
  return out;
}

bool is_one_sided_rep(const WElem& w, const ParabolicIndex& p, Side side) {
  const Composition shape = prefixed_composition(p.l, p.mu);
  if (side == Side::right) {
    if (!is_coset_rep(w.perm, shape, Side::right)) return false;
    for (int j = 1; j <= p.l; ++j)
      if (w.colors[j - 1] != 0) return false;
    return true;
  }
  if (!is_coset_rep(w.perm, shape, Side::left)) return false;
  for (int j = 1; j <= w.n(); ++j)
    if (w.colors[j - 1] != 0 && w.perm(j) <= p.l) return false;
  return true;
}

std::vector<WElem> one_sided_reps(const ParabolicIndex& p, int r, Side side) {
  const int n = p.n();
  const Composition shape = prefixed_composition(p.l, p.mu);
  std::vector<WElem> out;
  for (const Perm& x : all_perms(n)) {
    if (!is_coset_rep(x, shape, side)) continue;
    std::vector<int> positions;
    if (side == Side::right) {
      for (int i = p.l + 1; i <= n; ++i) positions.push_back(i);
    } else {
      for (int i = 1; i <= n; ++i)
        if (x(i) > p.l) positions.push_back(i);
    }
    for_each_color_vector(n, r, positions,
                          [&](const std::vector<int>& c) { out.push_back(WElem{x, c, r}); });
  }
  return out;
}

std::vector<int> color_support(const Perm& x, int l, int m) {
  std::vector<int> out;
  for (int i = m + 1; i <= x.n(); ++i)
    if (x(i) > l) out.push_back(i);
  return out;
}

std::vector<std::pair<int, int>> tau_swap_pairs(const Perm& x, const ParabolicIndex& a,
                                                const ParabolicIndex& b) {
  std::set<int> s_a;
  for (int i : parabolic_s_indices(a)) s_a.insert(i);
  std::vector<std::pair<int, int>> out;
  for (int j : parabolic_s_indices(b)) {
    const Perm conj = x * Perm::transposition(x.n(), j) * x.inverse();
    auto simple = as_simple_reflection(conj);
    if (simple && s_a.count(*simple)) out.push_back({j, *simple});
  }
  return out;
}

bool is_orbit_minimal(const Perm& x, const std::vector<int>& colors,
                      const ParabolicIndex& a, const ParabolicIndex& b) {
  for (auto [j, j1] : tau_swap_pairs(x, a, b))
    if (colors[j - 1] > colors[j]) return false;
  return true;
}

WElem orbit_action(const Perm& z, const WElem& u, const ParabolicIndex& a,
                   const ParabolicIndex& b) {
  const Perm& x = u.perm;
  const Perm y = x.inverse() * z * x;
  if (!in_parabolic(z, prefixed_composition(a.l, a.mu)) ||
      !in_parabolic(y, prefixed_composition(b.l, b.mu)))
    throw DomainError("orbit_action: z is not in S_tau(x)");
  std::vector<int> colors(u.n());
  const Perm yinv = y.inverse();
  for (int j = 1; j <= u.n(); ++j) colors[j - 1] = u.colors[yinv(j) - 1];
  return WElem{x, std::move(colors), u.r};
}

DoubleCosetDatum make_datum(const WElem& u, const ParabolicIndex& a,
                            const ParabolicIndex& b) {
  const int n = u.n();
  if (a.n() != n || b.n() != n) throw ConfigError("parabolic index dimension mismatch");
  const Perm& x = u.perm;
  const Composition ca = prefixed_composition(a.l, a.mu);
  const Composition cb = prefixed_composition(b.l, b.mu);
  if (!is_double_coset_rep(x, ca, cb))
    throw DomainError("make_datum: permutation part is not a distinguished representative");

  DoubleCosetDatum d;
  d.u = u;
  d.x = x;
  d.i_of_x = color_support(x, a.l, b.l);
  {
    std::set<int> supp(d.i_of_x.begin(), d.i_of_x.end());
    for (int j = 1; j <= n; ++j)
      if (u.colors[j - 1] != 0 && !supp.count(j))
        throw DomainError("make_datum: colors outside I(x)");
  }
  if (!is_orbit_minimal(x, u.colors, a, b))
    throw DomainError("make_datum: u is not minimal in its orbit");

  auto [c, k] = lemma_constants(x, a.l, b.l);
  d.c = c;
  d.k = k;
  for (int j = 1; j <= k; ++j)
    if (u.colors[j - 1] != 0) throw InternalError("make_datum: nonzero color below k(u)");

  std::set<int> s_a;
  for (int i : parabolic_s_indices(a)) s_a.insert(i);
  std::map<int, int> conj_of;  // j' -> j with s_{j'} = x s_j x^-1
  for (int j : parabolic_s_indices(b)) {
    const Perm conj = x * Perm::transposition(n, j) * x.inverse();
    auto simple = as_simple_reflection(conj);
    if (!simple || !s_a.count(*simple)) continue;
    const int aj = u.colors[j - 1];
    const int aj1 = u.colors[j];
    if (aj == aj1) {
      d.gamma_s.push_back(*simple);
      conj_of[*simple] = j;
    }
  }
  std::sort(d.gamma_s.begin(), d.gamma_s.end());
  d.gamma_t_count = k;

  {
    std::set<int> gs(d.gamma_s.begin(), d.gamma_s.end());
    for (int j = 1; j < k; ++j)
      if (!gs.count(j)) throw InternalError("make_datum: s_1..s_{k-1} missing from Gamma");
    if (k >= 1 && k <= n - 1 && gs.count(k))
      throw InternalError("make_datum: s_k unexpectedly in Gamma");
  }

  const Composition whole = composition_from_generators(n, d.gamma_s);
  if (k > 0) {
    if (whole.parts().empty() || whole.parts()[0] != k)
      throw InternalError("make_datum: Gamma does not begin with a block of size k");
    std::vector<int> rest(whole.parts().begin() + 1, whole.parts().end());
    d.pi = Composition(rest);
  } else {
    d.pi = whole;
  }

  std::vector<int> sharp_s;
  for (int j1 : d.gamma_s) {
    if (j1 < k) {
      sharp_s.push_back(j1);
      continue;
    }
    sharp_s.push_back(conj_of.at(j1));
  }
  std::sort(sharp_s.begin(), sharp_s.end());
  const Composition whole_sharp = composition_from_generators(n, sharp_s);
  if (k > 0) {
    if (whole_sharp.parts().empty() || whole_sharp.parts()[0] != k)
      throw InternalError("make_datum: pi_sharp does not begin with a block of size k");
    std::vector<int> rest(whole_sharp.parts().begin() + 1, whole_sharp.parts().end());
    d.pi_sharp = Composition(rest);
  } else {
    d.pi_sharp = whole_sharp;
  }

  if (k >= 1) d.psi[0] = 0;
  for (int j1 : d.gamma_s) d.psi[j1] = (j1 < k) ? j1 : conj_of.at(j1);
  // verified conjugation identity s_j = u s_{psi(j)} u^-1
  for (const auto& [j, pj] : d.psi) {
    const WElem lhs = w_generator(n, u.r, j);
    const WElem rhs = w_multiply(w_multiply(u, w_generator(n, u.r, pj)), w_inverse(u));
    if (!(lhs == rhs)) throw InternalError("make_datum: psi conjugation identity failed");
  }
  return d;
}

std::vector<DoubleCosetDatum> double_coset_reps(const ParabolicIndex& a,
                                                const ParabolicIndex& b, int r) {
  if (a.n() != b.n()) throw ConfigError("parabolic index dimension mismatch");
  const int n = a.n();
  const Composition ca = prefixed_composition(a.l, a.mu);
  const Composition cb = prefixed_composition(b.l, b.mu);
  std::vector<DoubleCosetDatum> out;
  for (const Perm& x : all_perms(n)) {
    if (!is_double_coset_rep(x, ca, cb)) continue;
    const std::vector<int> support = color_support(x, a.l, b.l);
    for_each_color_vector(n, r, support, [&](const std::vector<int>& colors) {
      if (!is_orbit_minimal(x, colors, a, b)) return;
      out.push_back(make_datum(WElem{x, colors, r}, a, b));
    });
  }
  return out;
}

int datum_psi(const DoubleCosetDatum& d, int j) {
  auto it = d.psi.find(j);
  if (it == d.psi.end())
    throw DomainError("datum_psi: generator outside X_{(k(u), pi(u))}");
  return it->second;
}

std::vector<WElem> parabolic_intersection(const ParabolicIndex& a,
                                          const DoubleCosetDatum& d,
                                          const ParabolicIndex& b, int r) {
  std::vector<WElem> out;
  const WElem uinv = w_inverse(d.u);
  for (const WElem& w : parabolic_elements(a, r)) {
    if (parabolic_contains(b, w_multiply(w_multiply(uinv, w), d.u))) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WElem> gamma_closure(const DoubleCosetDatum& d, int n, int r) {
  std::vector<WElem> gens;
  for (int j : d.gamma_s) gens.push_back(w_generator(n, r, j));
  for (int i = 1; i <= d.gamma_t_count; ++i) gens.push_back(w_torus(n, r, i));
  std::set<WElem> seen{w_identity(n, r)};
  std::vector<WElem> frontier{w_identity(n, r)};
  while (!frontier.empty()) {
    std::vector<WElem> next;
    for (const WElem& w : frontier) {
      for (const WElem& g : gens) {
        WElem wg = w_multiply(w, g);
        if (seen.insert(wg).second) next.push_back(std::move(wg));
      }
    }
    frontier = std::move(next);
  }
  return std::vector<WElem>(seen.begin(), seen.end());
}

std::pair<WElem, WElem> w_coset_split(const WElem& w, const ParabolicIndex& up,
                                      const ParabolicIndex& sub) {
  const int n = w.n();
  if (!parabolic_contains(up, w)) throw DomainError("w_coset_split: element not in W_up");
  if (sub.l > up.l) throw ConfigError("w_coset_split: subgroup torus rank exceeds ambient");
  Perm z1 = w.perm;
  Perm z2 = Perm::identity(n);
  const std::vector<int> sub_s = parabolic_s_indices(sub);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : sub_s) {
      if (z1(i) > z1(i + 1)) {
        const Perm s = Perm::transposition(n, i);
        z1 = z1 * s;
        z2 = s * z2;
        moved = true;
        break;
      }
    }
  }
  std::vector<int> c1(n, 0), c2(n, 0);
  for (int j = 1; j <= n; ++j) {
    const int b = w.colors[z2.inverse()(j) - 1];  // (z2 . b)_j
    if (j > sub.l && j <= up.l) c1[j - 1] = b;
  }
  for (int j = 1; j <= sub.l; ++j) c2[j - 1] = w.colors[j - 1];
  WElem w1{z1, std::move(c1), w.r};
  WElem w2{z2, std::move(c2), w.r};
  if (!(w_multiply(w1, w2) == w)) throw InternalError("w_coset_split: recomposition failed");
  if (!parabolic_contains(sub, w2)) throw InternalError("w_coset_split: tail not in W_sub");
  return {w1, w2};
}

std::vector<WElem> relative_reps(const ParabolicIndex& up, const ParabolicIndex& sub,
                                 int r) {
  const int n = up.n();
  const Composition up_shape = prefixed_composition(up.l, up.mu);
  const std::vector<int> sub_s = parabolic_s_indices(sub);
  std::vector<int> positions;
  for (int i = sub.l + 1; i <= up.l; ++i) positions.push_back(i);
  std::vector<WElem> out;
  for (const Perm& z : all_perms(n)) {
    if (!in_parabolic(z, up_shape)) continue;
    bool distinguished = true;
    for (int i : sub_s) {
      if (z(i) > z(i + 1)) {
        distinguished = false;
        break;
      }
    }
    if (!distinguished) continue;
    for_each_color_vector(n, r, positions,
                          [&](const std::vector<int>& c) { out.push_back(WElem{z, c, r}); });
  }
  return out;
}

WTriple triple_decompose_w(const WElem& w, const ParabolicIndex& a,
                           const ParabolicIndex& b) {
  const int n = w.n();
  const int r = w.r;
  if (a.n() != n || b.n() != n) throw ConfigError("parabolic index dimension mismatch");
  const Composition ca = prefixed_composition(a.l, a.mu);
  const Composition cb = prefixed_composition(b.l, b.mu);

  const TripleDecomposition t = triple_decompose(w.perm, ca, cb);
  const Perm& x1 = t.y;
  const Perm& x2 = t.x;
  const Perm& x3 = t.z;

  // push the torus part of w leftwards past x3
  std::vector<int> c3(n, 0);
  for (int i = b.l + 1; i <= n; ++i) c3[x3(i) - 1] = w.colors[i - 1];

  const std::vector<int> support = color_support(x2, a.l, b.l);
  const std::set<int> support_set(support.begin(), support.end());
  std::vector<int> mid(n, 0);
  WElem left_torus = w_identity(n, r);  // prod over I(x2)^c of t_{x2(i)}^{c3_i}
  for (int i = b.l + 1; i <= n; ++i) {
    if (support_set.count(i)) {
      mid[i - 1] = c3[i - 1];
    } else if (c3[i - 1] != 0) {
      left_torus = w_multiply(left_torus, w_torus(n, r, x2(i), c3[i - 1]));
    }
  }

  // minimize the middle factor in its orbit, tracking the conjugating pair
  Perm z_acc = Perm::identity(n);
  Perm y_acc = Perm::identity(n);
  std::vector<int> swaps;
  for (auto [j, j1] : tau_swap_pairs(x2, a, b)) swaps.push_back(j);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j : swaps) {
      if (mid[j - 1] > mid[j]) {
        std::swap(mid[j - 1], mid[j]);
        const Perm sj = Perm::transposition(n, j);
        z_acc = (x2 * sj * x2.inverse()) * z_acc;
        y_acc = sj * y_acc;
        moved = true;
        break;
      }
    }
  }
  const WElem u{x2, mid, r};

  WElem w1_raw = w_multiply(w_multiply(w_from_perm(x1, r), left_torus),
                            w_inverse(w_from_perm(z_acc, r)));
  WElem w2_raw = w_from_perm(y_acc * x3, r);
  for (int i = 1; i <= b.l; ++i)
    w2_raw = w_multiply(w2_raw, w_torus(n, r, i, w.colors[i - 1]));

  WTriple out{WElem{}, make_datum(u, a, b), WElem{}};
  auto [w1, h] = w_coset_split(w1_raw, a, out.d.pi_index());
  out.w1 = w1;
  out.w2 = w_multiply(w_multiply(w_inverse(u), w_multiply(h, u)), w2_raw);

  if (!(w_multiply(w_multiply(out.w1, u), out.w2) == w))
    throw InternalError("triple_decompose_w: recomposition failed");
  if (!parabolic_contains(b, out.w2))
    throw InternalError("triple_decompose_w: tail not in W_{(m,nu)}");
  return out;
}

}  // namespace cyclo
