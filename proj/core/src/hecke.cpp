#include "cyclo/hecke.hpp"

#include <algorithm>
#include <set>

namespace cyclo {

GenericCoeffs::GenericCoeffs(Ring ring) : ring_(ring), qm1_(ring) {
  qm1_ = LaurentPoly::q_power(ring, 1) - LaurentPoly::one(ring);
  for (int k = 1; k <= ring.r; ++k) {
    LaurentPoly c = elementary_symmetric(ring, k);
    if (k % 2 == 0) c = -c;
    char_coeffs_.push_back(std::move(c));
  }
}

LaurentPoly GenericCoeffs::divide_by_unit(const LaurentPoly& num, const LaurentPoly& unit) {
  if (unit.terms().size() != 1) throw InternalError("divide_by_unit: not a unit");
  const auto& [m, c] = *unit.terms().begin();
  if (!(c == 1 || c == -1)) throw InternalError("divide_by_unit: coefficient not invertible");
  for (int e : m.q_big_exps)
    if (e != 0) throw InternalError("divide_by_unit: Q-monomial is not a unit");
  LaurentPoly inv = LaurentPoly::q_power(num.ring(), -m.q_exp);
  if (c == -1) inv = -inv;
  return num * inv;
}

Rational RationalCoeffs::divide_by_unit(const Rational& num, const Rational& unit) {
  if (unit == 0) throw InternalError("divide_by_unit: zero diagonal");
  return num / unit;
}

RationalCoeffs::RationalCoeffs(int r, Rational q_val, std::vector<Rational> q_big_vals)
    : r_(r), q_(std::move(q_val)), q_big_(std::move(q_big_vals)) {
  if (q_ == 0) throw DomainError("q must be invertible: q_val = 0");
  if (static_cast<int>(q_big_.size()) != r_) throw ConfigError("wrong number of Q values");
  std::vector<Rational> e(r_ + 1, Rational(0));
  e[0] = 1;
  for (int i = 1; i <= r_; ++i)
    for (int j = std::min(i, r_); j >= 1; --j) e[j] += e[j - 1] * q_big_[i - 1];
  for (int k = 1; k <= r_; ++k) char_coeffs_.push_back(k % 2 == 0 ? Rational(-e[k]) : e[k]);
}

template <class Coeffs>
HeckeAlgebraT<Coeffs>::HeckeAlgebraT(int n, Coeffs coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  if (n < 1 || coeffs_.r() < 1) throw ConfigError("need n >= 1 and r >= 1");
}

template <class Coeffs>
typename HeckeAlgebraT<Coeffs>::Elem HeckeAlgebraT<Coeffs>::one() const {
  return t_basis(w_identity(n_, r()));
}

template <class Coeffs>
typename HeckeAlgebraT<Coeffs>::Elem HeckeAlgebraT<Coeffs>::t_basis(const WElem& w) const {
  if (w.n() != n_ || w.r != r()) throw ConfigError("element outside this algebra");
  Elem e;
  e.emplace(w, coeffs_.one());
  return e;
}

template <class Coeffs>
typename HeckeAlgebraT<Coeffs>::Elem HeckeAlgebraT<Coeffs>::gen(int g) const {
  if (g < 0 || g >= n_) throw ConfigError("generator index out of range");
  if (g == 0) return mul_gen_right(one(), 0);  // reduces at r = 1
  return t_basis(w_generator(n_, r(), g));
}

template <class Coeffs>
typename HeckeAlgebraT<Coeffs>::Elem HeckeAlgebraT<Coeffs>::jm_element(int i) const {
  if (i < 1 || i > n_) throw ConfigError("index out of range");
  Elem e = one();
  for (int j = i - 1; j >= 0; --j) e = mul_gen_right(e, j);
  for (int j = 1; j <= i - 1; ++j) e = mul_gen_right(e, j);
  if (i > 1) e = scale(e, coeffs_.q_pow(1 - i));
  return e;
}

template <class Coeffs>
typename HeckeAlgebraT<Coeffs>::Elem HeckeAlgebraT<Coeffs>::gen_inverse(int j) const {
  if (j < 1 || j >= n_) throw ConfigError("only the finite-order generators are inverted here");
  Elem e = scale(gen(j), coeffs_.q_pow(-1));
  add_term(e, w_identity(n_, r()), coeffs_.q_pow(-1) - coeffs_.one());
  return e;
}

template <class Coeffs>
void HeckeAlgebraT<Coeffs>::add_term(Elem& e, const WElem& w, const Coeff& c) {
  if (Coeffs::is_zero(c)) return;
  auto it = e.find(w);
  if (it == e.end()) {
    e.emplace(w, c);
    return;
  }
  it->second += c;
  if (Coeffs::is_zero(it->second)) e.erase(it);
}

template <class Coeffs>
typename HeckeAlgebraT<Coeffs>::Elem HeckeAlgebraT<Coeffs>::add(const Elem& a,
                                                                const Elem& b) const {
  Elem out = a;
  for (const auto& [w, c] : b) add_term(out, w, c);
  return out;
}

template <class Coeffs>
typename HeckeAlgebraT<Coeffs>::Elem HeckeAlgebraT<Coeffs>::sub(const Elem& a,
                                                                const Elem& b) const {
  Elem out = a;
  for (const auto& [w, c] : b) {
    Coeff neg = coeffs_.zero() - c;
    add_term(out, w, neg);
  }
  return out;
}

template <class Coeffs>
typename HeckeAlgebraT<Coeffs>::Elem HeckeAlgebraT<Coeffs>::scale(const Elem& a,
                                                                  const Coeff& c) const {
  Elem out;
  if (Coeffs::is_zero(c)) return out;
  for (const auto& [w, cw] : a) {
    Coeff p = cw * c;
    if (!Coeffs::is_zero(p)) out.emplace(w, std::move(p));
  }
  return out;
}

template <class Coeffs>
typename HeckeAlgebraT<Coeffs>::Elem HeckeAlgebraT<Coeffs>::mul_gen_right(const Elem& e,
                                                                          int g) const {
  if (g < 0 || g >= n_) throw ConfigError("generator index out of range");
  const int rr = r();
  Elem out;
  if (g == 0) {
    for (const auto& [w, c] : e) {
      std::vector<int> colors = w.colors;
      if (++colors[0] < rr) {
        add_term(out, WElem{w.perm, std::move(colors), rr}, c);
        continue;
      }
      // L_1^r reduced through the degree-r relation for T_0
      for (int k = 1; k <= rr; ++k) {
        std::vector<int> ck = w.colors;
        ck[0] = rr - k;
        add_term(out, WElem{w.perm, std::move(ck), rr}, c * coeffs_.char_coeff(k));
      }
    }
    return out;
  }
  const Coeff qm1 = coeffs_.q_minus_one();
  for (const auto& [w, c] : e) {
    const int p = w.colors[g - 1];
    const int s = w.colors[g];
    std::vector<int> swapped = w.colors;
    std::swap(swapped[g - 1], swapped[g]);
    // T_x T_g L^{swapped}
    const bool ascent = w.perm(g) < w.perm(g + 1);
    const Perm xg = w.perm * Perm::transposition(n_, g);
    if (ascent) {
      add_term(out, WElem{xg, swapped, rr}, c);
    } else {
      add_term(out, WElem{xg, swapped, rr}, c * coeffs_.q());
      add_term(out, WElem{w.perm, swapped, rr}, c * qm1);
    }
    if (p == s) continue;
    // +- (q-1) sum of the intermediate L-monomials
    Coeff corr = c * qm1;
    if (p > s) corr = coeffs_.zero() - corr;
    for (int f = std::min(p, s); f < std::max(p, s); ++f) {
      std::vector<int> cf = w.colors;
      cf[g - 1] = f;
      cf[g] = p + s - f;
      add_term(out, WElem{w.perm, std::move(cf), rr}, corr);
    }
  }
  return out;
}

template <class Coeffs>
typename HeckeAlgebraT<Coeffs>::BasisWord HeckeAlgebraT<Coeffs>::basis_word(
    const WElem& w) const {
  BasisWord out;
  out.letters = reduced_word(w.perm);
  for (int i = 1; i <= n_; ++i) {
    const int a = w.colors[i - 1];
    if (a == 0) continue;
    for (int rep = 0; rep < a; ++rep) {
      for (int j = i - 1; j >= 0; --j) out.letters.push_back(j);
      for (int j = 1; j <= i - 1; ++j) out.letters.push_back(j);
    }
    out.q_exp += (1 - i) * a;
  }
  return out;
}

template <class Coeffs>
std::pair<std::vector<int>, int> HeckeAlgebraT<Coeffs>::generator_word(const WElem& w) const {
  const BasisWord bw = basis_word(w);
  return {bw.letters, bw.q_exp};
}

template <class Coeffs>
const typename HeckeAlgebraT<Coeffs>::Elem& HeckeAlgebraT<Coeffs>::basis_product(
    const WElem& a, const WElem& b) const {
  const auto key = std::make_pair(a, b);
  auto it = product_cache_.find(key);
  if (it != product_cache_.end()) return it->second;
  const BasisWord word = basis_word(b);
  Elem e = t_basis(a);
  for (int g : word.letters) e = mul_gen_right(e, g);
  if (word.q_exp != 0) e = scale(e, coeffs_.q_pow(word.q_exp));
  return product_cache_.emplace(key, std::move(e)).first->second;
}

template <class Coeffs>
typename HeckeAlgebraT<Coeffs>::Elem HeckeAlgebraT<Coeffs>::mul(const Elem& a,
                                                                const Elem& b) const {
  Elem out;
  for (const auto& [wb, cb] : b) {
    for (const auto& [wa, ca] : a) {
      const Elem& prod = basis_product(wa, wb);
      const Coeff c = ca * cb;
      for (const auto& [w, cw] : prod) add_term(out, w, cw * c);
    }
  }
  return out;
}

template <class Coeffs>
std::vector<typename HeckeAlgebraT<Coeffs>::LLeftTerm>
HeckeAlgebraT<Coeffs>::commute_perm_past_l(const Perm& x, const std::vector<int>& exps) const {
  std::vector<LLeftTerm> out;
  int g = 0;
  for (int i = 1; i < n_; ++i) {
    if (x(i) > x(i + 1)) {
      g = i;
      break;
    }
  }
  if (g == 0) {
    out.push_back(LLeftTerm{coeffs_.one(), exps, x});
    return out;
  }
  const Perm xp = x * Perm::transposition(n_, g);
  const int p = exps[g - 1];
  const int s = exps[g];
  std::vector<int> swapped = exps;
  std::swap(swapped[g - 1], swapped[g]);
  const Coeff qm1 = coeffs_.q_minus_one();
  // main branch (T_{x'} L^{swapped}) T_g
  for (const LLeftTerm& t : commute_perm_past_l(xp, swapped)) {
    const bool ascent = t.y(g) < t.y(g + 1);
    const Perm yg = t.y * Perm::transposition(n_, g);
    if (ascent) {
      out.push_back(LLeftTerm{t.coeff, t.exps, yg});
    } else {
      out.push_back(LLeftTerm{t.coeff * coeffs_.q(), t.exps, yg});
      out.push_back(LLeftTerm{t.coeff * qm1, t.exps, t.y});
    }
  }
  if (p != s) {
    for (int f = std::min(p, s); f < std::max(p, s); ++f) {
      std::vector<int> cf = exps;
      cf[g - 1] = f;
      cf[g] = p + s - f;
      for (const LLeftTerm& t : commute_perm_past_l(xp, cf)) {
        Coeff c = t.coeff * qm1;
        if (p > s) c = coeffs_.zero() - c;
        out.push_back(LLeftTerm{std::move(c), t.exps, t.y});
      }
    }
  }
  return out;
}

template <class Coeffs>
std::map<WElem, typename HeckeAlgebraT<Coeffs>::Elem> HeckeAlgebraT<Coeffs>::coset_expand(
    const Elem& e, const ParabolicIndex& up, const ParabolicIndex& sub) const {
  std::map<WElem, Elem> out;
  Elem residual = e;
  long iterations = 0;
  while (!residual.empty()) {
    if (++iterations > 1000000) throw InternalError("coset_expand: peeling did not terminate");
    const WElem* best_w = nullptr;
    const Coeff* best_c = nullptr;
    std::pair<WElem, WElem> best_split;
    int best_len = -1;
    for (const auto& [w, c] : residual) {
      auto split = w_coset_split(w, up, sub);
      const int len = perm_length(split.second.perm);
      if (len > best_len) {
        best_len = len;
        best_w = &w;
        best_c = &c;
        best_split = std::move(split);
      }
    }
    const auto& [w1, w2] = best_split;
    const Coeff coeff = *best_c;
    (void)best_w;
    add_term(out[w1], w2, coeff);
    const Elem& prod = basis_product(w1, w2);
    for (const auto& [w, cw] : prod) {
      Coeff neg = coeffs_.zero() - cw * coeff;
      add_term(residual, w, neg);
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.empty() ? out.erase(it) : std::next(it);
  }
  return out;
}

template <class Coeffs>
typename HeckeAlgebraT<Coeffs>::Elem HeckeAlgebraT<Coeffs>::tilde_basis(
    const WElem& w, const ParabolicIndex& a, const ParabolicIndex& b) const {
  const WTriple t = triple_decompose_w(w, a, b);
  return mul(mul(t_basis(t.w1), t_basis(t.d.u)), t_basis(t.w2));
}

template <class Coeffs>
typename HeckeAlgebraT<Coeffs>::Elem HeckeAlgebraT<Coeffs>::twist_past_rep(
    const Elem& c, const DoubleCosetDatum& d) const {
  const Perm xinv = d.x.inverse();
  const Composition shape = prefixed_composition(d.k, d.pi);
  Elem out;
  for (const auto& [w, cw] : c) {
    for (int j = d.k + 1; j <= n_; ++j) {
      if (w.colors[j - 1] != 0)
        throw DomainError("twist_past_rep: element outside the algebra of W_{(k,pi)}");
    }
    if (!in_parabolic(w.perm, shape))
      throw DomainError("twist_past_rep: element outside the algebra of W_{(k,pi)}");
    const Perm z = xinv * w.perm * d.x;
    add_term(out, WElem{z, w.colors, r()}, cw);
  }
  return out;
}

template <class Coeffs>
const typename HeckeAlgebraT<Coeffs>::TildeTable& HeckeAlgebraT<Coeffs>::tilde_table(
    const ParabolicIndex& a, const ParabolicIndex& b) const {
  const auto key = std::make_pair(a, b);
  auto hit = tilde_cache_.find(key);
  if (hit != tilde_cache_.end()) return hit->second;

  TildeTable table;
  table.reps = double_coset_reps(a, b, r());
  for (const WElem& w : w_all_elements(n_, r())) {
    WTriple t = triple_decompose_w(w, a, b);
    Elem tw = mul(mul(t_basis(t.w1), t_basis(t.d.u)), t_basis(t.w2));
    if (tw.find(w) == tw.end())
      throw InternalError("tilde basis: diagonal coefficient vanished");
    table.tilde.emplace(w, std::move(tw));
    table.triples.emplace(w, std::move(t));
  }

  // Order the basis so that peeling tilde T_w removes T_w and introduces
  // only earlier elements: topological sort of the support graph.
  std::map<WElem, int> out_degree;
  std::map<WElem, std::vector<WElem>> in_of;  // w' -> list of w with w' in supp(tilde T_w)
  for (const auto& [w, tw] : table.tilde) {
    int deg = 0;
    for (const auto& [w2, c] : tw) {
      if (w2 == w) continue;
      ++deg;
      in_of[w2].push_back(w);
    }
    out_degree[w] = deg;
  }
  std::vector<WElem> ready;
  for (const auto& [w, deg] : out_degree)
    if (deg == 0) ready.push_back(w);
  while (!ready.empty()) {
    // deterministic: take the smallest ready element
    std::sort(ready.begin(), ready.end());
    WElem w = ready.front();
    ready.erase(ready.begin());
    table.order.emplace(w, static_cast<int>(table.elements.size()));
    table.elements.push_back(w);
    auto it = in_of.find(w);
    if (it == in_of.end()) continue;
    for (const WElem& parent : it->second)
      if (--out_degree.at(parent) == 0) ready.push_back(parent);
  }
  if (table.elements.size() != table.tilde.size())
    throw InternalError("tilde basis: support graph is not acyclic");
  return tilde_cache_.emplace(key, std::move(table)).first->second;
}

template <class Coeffs>
std::map<WElem, typename HeckeAlgebraT<Coeffs>::Coeff> HeckeAlgebraT<Coeffs>::tilde_expand(
    const Elem& e, const ParabolicIndex& a, const ParabolicIndex& b) const {
  const TildeTable& table = tilde_table(a, b);
  std::map<WElem, Coeff> out;
  Elem residual = e;
  while (!residual.empty()) {
    // peel the term latest in the triangular order
    auto best = residual.begin();
    int best_pos = -1;
    for (auto it = residual.begin(); it != residual.end(); ++it) {
      const int pos = table.order.at(it->first);
      if (pos > best_pos) {
        best_pos = pos;
        best = it;
      }
    }
    const WElem w = best->first;
    const Elem& tw = table.tilde.at(w);
    const Coeff c = Coeffs::divide_by_unit(best->second, tw.at(w));
    for (const auto& [w2, c2] : tw) {
      Coeff neg = coeffs_.zero() - c * c2;
      add_term(residual, w2, neg);
    }
    if (!Coeffs::is_zero(c)) {
      auto it = out.find(w);
      if (it == out.end()) {
        out.emplace(w, c);
      } else {
        it->second += c;
        if (Coeffs::is_zero(it->second)) out.erase(it);
      }
    }
  }
  return out;
}

template <class Coeffs>
typename HeckeAlgebraT<Coeffs>::MackeyDecomp HeckeAlgebraT<Coeffs>::mackey_phi(
    const Elem& e, const ParabolicIndex& a, const ParabolicIndex& b) const {
  if (a.n() != n_ || b.n() != n_) throw ConfigError("parabolic index dimension mismatch");
  const TildeTable& table = tilde_table(a, b);
  std::map<WElem, int> rep_index;
  for (int i = 0; i < static_cast<int>(table.reps.size()); ++i)
    rep_index.emplace(table.reps[i].u, i);

  // c-coefficients in the tilde basis, regrouped per (representative, w1)
  std::map<std::pair<int, WElem>, Elem> accum;
  for (const auto& [w, c] : tilde_expand(e, a, b)) {
    const WTriple& t = table.triples.at(w);
    add_term(accum[{rep_index.at(t.d.u), t.w1}], t.w2, c);
  }

  MackeyDecomp out;
  for (const auto& d : table.reps) out.push_back(MackeySummand{d, {}});
  for (auto& [key, y] : accum) {
    if (y.empty()) continue;
    out[key.first].pairs.push_back(MackeyPair{key.second, std::move(y)});
  }
  // the decomposition must multiply back to e
  if (!(mackey_psi(out) == e)) throw InternalError("mackey_phi: psi round-trip failed");
  return out;
}

template <class Coeffs>
typename HeckeAlgebraT<Coeffs>::Elem HeckeAlgebraT<Coeffs>::mackey_psi(
    const MackeyDecomp& decomp) const {
  Elem out;
  for (const auto& summand : decomp) {
    for (const auto& pair : summand.pairs) {
      const Elem term = mul(t_basis(pair.w1), mul(t_basis(summand.datum.u), pair.y));
      for (const auto& [w, c] : term) add_term(out, w, c);
    }
  }
  return out;
}

template <class Coeffs>
typename HeckeAlgebraT<Coeffs>::Elem HeckeAlgebraT<Coeffs>::right_factor(
    const MackeySummand& s, const MackeyPair& p) const {
  return mul(t_basis(s.datum.u), p.y);
}

template <class Coeffs>
bool HeckeAlgebraT<Coeffs>::bimodule_commutation_check(const DoubleCosetDatum& d) const {
  const Elem tu = t_basis(d.u);
  for (int i = 1; i <= d.k; ++i) {
    const Elem li = jm_element(i);
    if (!(mul(li, tu) == mul(tu, li))) return false;
  }
  for (int j : parabolic_s_indices(d.pi_index())) {
    const Elem lhs = mul(gen(j), tu);
    const Elem rhs = mul(tu, gen(datum_psi(d, j)));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

template class HeckeAlgebraT<GenericCoeffs>;
template class HeckeAlgebraT<RationalCoeffs>;

GenericHecke make_generic_hecke(int n, int r) {
  return GenericHecke(n, GenericCoeffs(Ring{r}));
}

std::vector<Rational> default_q_big_values(int r) {
  std::vector<Rational> out;
  int candidate = 3;
  auto is_prime = [](int v) {
    for (int d = 2; d * d <= v; ++d)
      if (v % d == 0) return false;
    return v > 1;
  };
  while (static_cast<int>(out.size()) < r) {
    if (is_prime(candidate)) out.push_back(Rational(candidate));
    candidate += 2;
  }
  return out;
}

RationalHecke make_rational_hecke(int n, int r, const Rational& q_val,
                                  const std::vector<Rational>& q_big_vals) {
  return RationalHecke(n, RationalCoeffs(r, q_val, q_big_vals));
}

}  // namespace cyclo
