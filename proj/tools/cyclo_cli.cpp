// Batch front end: enumerate coset data for G(r,1,n), verify the group,
// Hecke-algebra, bimodule, braid-word and root-system statements against
// brute-force oracles, and emit deterministic JSON or text reports.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "cyclo/serial.hpp"

namespace cyclo {
namespace {

struct CheckResult {
  std::string name;
  std::string anchor;
  std::string instance;
  bool pass = false;
};

struct Report {
  std::string command;
  Json config = Json::object();
  std::vector<CheckResult> checks;
  Json data = Json::object();
  int cap_hits = 0;

  void add(std::string name, std::string anchor, std::string instance, bool pass) {
    checks.push_back(CheckResult{std::move(name), std::move(anchor), std::move(instance), pass});
  }
  int failures() const {
    int f = 0;
    for (const auto& c : checks)
      if (!c.pass) ++f;
    return f;
  }
};

struct Options {
  int n = 2;
  int r = 2;
  std::string a_text, b_text, side = "right";
  std::string spec_text;
  unsigned long seed = 1;
  std::size_t cap = kDefaultNodeCap;
  std::string format = "json";
  std::string out_path;
  int samples = 200;
};

int thread_budget() {
  const char* env = std::getenv("CM_THREADS");
  if (!env) return 1;
  const int v = std::atoi(env);
  return v >= 1 ? v : 1;
}

// Runs independent tasks, preserving result order.
template <class T>
std::vector<T> run_tasks(std::vector<std::function<T()>> tasks) {
  const int threads = thread_budget();
  std::vector<T> out(tasks.size());
  if (threads <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
    return out;
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      out[i] = tasks[i]();
    }
  };
  std::vector<std::future<void>> futures;
  for (int t = 0; t < threads; ++t) futures.push_back(std::async(std::launch::async, worker));
  for (auto& f : futures) f.get();
  return out;
}

std::string instance_str(int n, int r) {
  return "n=" + std::to_string(n) + " r=" + std::to_string(r);
}

std::string instance_str(int n, int r, const ParabolicIndex& a) {
  return instance_str(n, r) + " a=" + parabolic_str(a);
}

std::string instance_str(int n, int r, const ParabolicIndex& a, const ParabolicIndex& b) {
  return instance_str(n, r, a) + " b=" + parabolic_str(b);
}

Specialization parse_spec(const std::string& text, int r) {
  Specialization s;
  if (text.empty()) {
    s.q = Rational(2);
    s.q_big = default_q_big_values(r);
    return s;
  }
  std::stringstream ss(text);
  std::string item;
  std::vector<Rational> values;
  while (std::getline(ss, item, ',')) {
    try {
      Rational v(item);
      v.canonicalize();
      values.push_back(v);
    } catch (const std::exception&) {
      throw ConfigError("invalid rational '" + item + "' in --spec");
    }
  }
  if (static_cast<int>(values.size()) != r + 1)
    throw ConfigError("--spec needs q and exactly r Q-values");
  if (values[0] == 0) throw ConfigError("--spec: q must be nonzero");
  s.q = values[0];
  s.q_big.assign(values.begin() + 1, values.end());
  return s;
}

// ---------------------------------------------------------------------------
// verify-group: group order, defining relations, symmetric-group layer
// ---------------------------------------------------------------------------

void check_group(Report& rep, int n, int r) {
  const std::string inst = instance_str(n, r);
  const auto all = w_all_elements(n, r);
  long expected = r > 0 ? 1 : 0;
  for (int i = 1; i <= n; ++i) expected *= i;
  for (int i = 0; i < n; ++i) expected *= r;
  rep.add("group order equals n! r^n", "group-order", inst,
          static_cast<long>(all.size()) == expected);

  bool relations = true;
  const WElem id = w_identity(n, r);
  auto power = [&](const WElem& w, int e) {
    WElem out = id;
    for (int i = 0; i < e; ++i) out = w_multiply(out, w);
    return out;
  };
  const WElem s0 = w_generator(n, r, 0);
  relations &= power(s0, r).is_identity();
  for (int i = 1; i < n; ++i) {
    const WElem si = w_generator(n, r, i);
    relations &= w_multiply(si, si).is_identity();
  }
  if (n >= 2) {
    const WElem s1 = w_generator(n, r, 1);
    relations &= w_multiply(w_multiply(s0, s1), w_multiply(s0, s1)) ==
                 w_multiply(w_multiply(s1, s0), w_multiply(s1, s0));
  }
  for (int i = 1; i + 1 < n; ++i) {
    const WElem si = w_generator(n, r, i);
    const WElem sj = w_generator(n, r, i + 1);
    relations &= w_multiply(w_multiply(si, sj), si) == w_multiply(w_multiply(sj, si), sj);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (std::abs(i - j) <= 1) continue;
      const WElem si = w_generator(n, r, i);
      const WElem sj = w_generator(n, r, j);
      relations &= w_multiply(si, sj) == w_multiply(sj, si);
    }
  }
  // x t_i x^-1 = t_{x(i)} and t_i t_j = t_j t_i
  for (const Perm& x : all_perms(n)) {
    const WElem wx = w_from_perm(x, r);
    for (int i = 1; i <= n; ++i) {
      relations &= w_multiply(w_multiply(wx, w_torus(n, r, i)), w_inverse(wx)) ==
                   w_torus(n, r, x(i));
    }
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      relations &= w_multiply(w_torus(n, r, i), w_torus(n, r, j)) ==
                   w_multiply(w_torus(n, r, j), w_torus(n, r, i));
  rep.add("defining relations of the presentation", "group-defining-relations", inst, relations);

  // symmetric-group layer: row-standard criterion, triple decomposition,
  // interval constants
  bool row_standard_ok = true;
  bool triple_ok = true;
  std::vector<Composition> comps;
  for (const auto& p : all_parabolic_indices(n)) comps.push_back(prefixed_composition(p.l, p.mu));
  std::set<std::vector<int>> comp_seen;
  std::vector<Composition> unique_comps;
  for (const auto& c : comps)
    if (comp_seen.insert(c.parts()).second) unique_comps.push_back(c);
  for (const auto& mu : unique_comps) {
    const auto reps_right = coset_reps(mu, Side::right);
    const Tableau base = Tableau::row_filling(mu);
    std::set<Perm> by_tableau;
    for (const Perm& x : all_perms(n))
      if (base.acted_by(x).row_standard()) by_tableau.insert(x);
    row_standard_ok &= std::set<Perm>(reps_right.begin(), reps_right.end()) == by_tableau;
    for (const auto& nu : unique_comps) {
      std::set<std::tuple<Perm, Perm, Perm>> triples;
      for (const Perm& w : all_perms(n)) {
        const TripleDecomposition t = triple_decompose(w, mu, nu);
        triple_ok &= (t.y * t.x * t.z == w);
        triple_ok &=
            perm_length(t.y) + perm_length(t.x) + perm_length(t.z) == perm_length(w);
        triples.insert({t.y, t.x, t.z});
      }
      triple_ok &= triples.size() == all_perms(n).size();
    }
  }
  rep.add("one-sided representatives match the row-standard criterion",
          "sym-coset-reps-row-standard", inst, row_standard_ok);
  rep.add("triple decomposition is bijective with additive lengths",
          "sym-triple-length-additivity", inst, triple_ok);

  bool lemma_ok = true;
  for (int l = 0; l <= n && lemma_ok; ++l) {
    for (int m = 0; m <= n && lemma_ok; ++m) {
      for (const auto& a : all_parabolic_indices(n)) {
        if (a.l != l) continue;
        for (const auto& b : all_parabolic_indices(n)) {
          if (b.l != m) continue;
          const Composition ca = prefixed_composition(a.l, a.mu);
          const Composition cb = prefixed_composition(b.l, b.mu);
          for (const Perm& x : double_coset_reps(ca, cb)) {
            try {
              lemma_constants(x, l, m);
            } catch (const Error&) {
              lemma_ok = false;
              break;
            }
          }
        }
      }
    }
  }
  rep.add("interval constants conclusions hold for all representatives",
          "sym-lemma-constants", inst, lemma_ok);
}

// ---------------------------------------------------------------------------
// cosets / double-cosets with brute-force oracles
// ---------------------------------------------------------------------------

void check_cosets(Report& rep, int n, int r, const ParabolicIndex& p, Side side,
                  bool emit_data) {
  const std::string inst =
      instance_str(n, r, p) + (side == Side::right ? " side=right" : " side=left");
  const auto reps = one_sided_reps(p, r, side);
  const auto subgroup = parabolic_elements(p, r);
  const auto all = w_all_elements(n, r);

  std::map<WElem, int> covered;
  for (const auto& u : reps) {
    for (const auto& h : subgroup) {
      const WElem w = side == Side::right ? w_multiply(u, h) : w_multiply(h, u);
      ++covered[w];
    }
  }
  bool partition = covered.size() == all.size();
  for (const auto& [w, count] : covered) partition &= (count == 1);
  rep.add("translates of the parabolic partition the group", "coset-reps-partition", inst,
          partition);

  const Composition shape = prefixed_composition(p.l, p.mu);
  long expected = static_cast<long>(coset_reps(shape, side).size());
  for (int i = p.l; i < n; ++i) expected *= r;
  rep.add("representative count matches the index formula", "coset-reps-count", inst,
          static_cast<long>(reps.size()) == expected);

  if (emit_data) {
    Json list = Json::array();
    for (const auto& u : reps) list.push_back(to_json(u));
    rep.data["reps"] = list;
  }
}

std::vector<std::set<WElem>> brute_double_cosets(int n, int r, const ParabolicIndex& a,
                                                 const ParabolicIndex& b) {
  const auto left = parabolic_elements(a, r);
  const auto right = parabolic_elements(b, r);
  std::set<WElem> seen;
  std::vector<std::set<WElem>> cosets;
  for (const WElem& w : w_all_elements(n, r)) {
    if (seen.count(w)) continue;
    std::set<WElem> coset;
    for (const auto& x : left)
      for (const auto& y : right) coset.insert(w_multiply(w_multiply(x, w), y));
    for (const auto& v : coset) seen.insert(v);
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

void check_double_cosets(Report& rep, int n, int r, const ParabolicIndex& a,
                         const ParabolicIndex& b, bool emit_data) {
  const std::string inst = instance_str(n, r, a, b);
  const auto data = double_coset_reps(a, b, r);
  const auto brute = brute_double_cosets(n, r, a, b);

  bool complete = data.size() == brute.size();
  std::set<const std::set<WElem>*> hit;
  for (const auto& d : data) {
    bool found = false;
    for (const auto& coset : brute) {
      if (coset.count(d.u)) {
        found = !hit.count(&coset);
        hit.insert(&coset);
        break;
      }
    }
    complete &= found;
  }
  rep.add("emitted representatives are a complete irredundant set",
          "double-coset-reps-complete", inst, complete);

  // when the right shape is a column, every orbit is a singleton and the
  // representatives are the whole one-sided intersection
  const bool column_b = b.mu.parts().empty() ||
                        *std::max_element(b.mu.parts().begin(), b.mu.parts().end()) == 1;
  if (column_b) {
    long intersection = 0;
    for (const auto& w : one_sided_reps(b, r, Side::right))
      if (is_one_sided_rep(w, a, Side::left)) ++intersection;
    rep.add("column shapes make every color orbit a singleton",
            "column-shape-orbits-singleton", inst,
            static_cast<long>(data.size()) == intersection);
  }

  bool minimal = true;
  for (const auto& d : data) {
    const Composition ca = prefixed_composition(a.l, a.mu);
    const Composition cb = prefixed_composition(b.l, b.mu);
    const Composition tx = tau(d.x, ca, cb);
    for (const Perm& z : all_perms(n)) {
      if (!in_parabolic(z, tx)) continue;
      const WElem moved = orbit_action(z, d.u, a, b);
      if (moved.colors < d.u.colors) minimal = false;
    }
  }
  rep.add("each representative is minimal in its color orbit", "orbit-minimality", inst,
          minimal);

  // recomposition bijection
  bool bijection = true;
  std::set<std::tuple<WElem, WElem, WElem>> triples;
  for (const WElem& w : w_all_elements(n, r)) {
    const WTriple t = triple_decompose_w(w, a, b);
    bijection &= (w_multiply(w_multiply(t.w1, t.d.u), t.w2) == w);
    triples.insert({t.w1, t.d.u, t.w2});
  }
  bijection &= triples.size() == w_all_elements(n, r).size();
  long counted = 0;
  for (const auto& d : data) {
    counted += static_cast<long>(relative_reps(a, d.pi_index(), r).size()) *
               static_cast<long>(parabolic_elements(b, r).size());
  }
  bijection &= counted == static_cast<long>(w_all_elements(n, r).size());
  rep.add("recomposition through representatives is bijective",
          "double-coset-recomposition-bijection", inst, bijection);

  // intersection subgroup: brute force vs generator closure vs parabolic
  bool intersection = true;
  for (const auto& d : data) {
    const auto brute_int = parabolic_intersection(a, d, b, r);
    const auto closure = gamma_closure(d, n, r);
    const auto parabolic = [&] {
      auto v = parabolic_elements(d.pi_index(), r);
      std::sort(v.begin(), v.end());
      return v;
    }();
    intersection &= (brute_int == closure) && (closure == parabolic);
  }
  rep.add("intersection with the conjugated parabolic is generated as stated",
          "parabolic-intersection-generators", inst, intersection);

  // conjugating the intersection through u lands in the sharp parabolic
  bool conj = true;
  for (const auto& d : data) {
    std::set<WElem> lhs;
    const WElem uinv = w_inverse(d.u);
    for (const auto& w : gamma_closure(d, n, r))
      lhs.insert(w_multiply(w_multiply(uinv, w), d.u));
    auto sharp = parabolic_elements(d.pi_sharp_index(), r);
    conj &= lhs == std::set<WElem>(sharp.begin(), sharp.end());
  }
  rep.add("conjugated intersection equals the sharp parabolic",
          "intersection-conjugate-parabolic", inst, conj);

  // direct evaluation of the color bookkeeping identities per representative
  bool ai_ok = true;
  for (const auto& d : data) {
    for (const auto& y : parabolic_elements(b, r)) {
      if (!y.perm.is_identity() && y.colors == std::vector<int>(n, 0)) {
        // u y u^-1 permutation part check is covered below with all y
      }
      const WElem conj_y = w_multiply(w_multiply(d.u, y), w_inverse(d.u));
      // (i): permutation part is x y x^-1, colors a_{y(i)} - a_i at x(i)
      const Perm expect_perm = d.x * y.perm * d.x.inverse();
      ai_ok &= conj_y.perm == expect_perm;
    }
    for (int jj = 1; jj <= n; ++jj) {
      ai_ok &= w_multiply(w_multiply(d.u, w_torus(n, r, jj)), w_inverse(d.u)) ==
               w_torus(n, r, d.x(jj));
    }
    for (int i = 1; i <= std::min(b.l, n); ++i) ai_ok &= d.u.colors[i - 1] == 0;
    for (int i = 1; i <= n; ++i)
      if (d.x(i) <= a.l) ai_ok &= d.u.colors[i - 1] == 0;
  }
  rep.add("per-representative color identities hold", "rep-color-identities", inst, ai_ok);

  if (emit_data) {
    Json list = Json::array();
    for (const auto& d : data) list.push_back(to_json(d));
    rep.data["double_cosets"] = list;
  }
}

// ---------------------------------------------------------------------------
// verify-hecke / verify-mackey
// ---------------------------------------------------------------------------

long basis_size(int n, int r) {
  long size = 1;
  for (int i = 1; i <= n; ++i) size *= i;
  for (int i = 0; i < n; ++i) size *= r;
  return size;
}

bool generic_allowed(int n, int r) { return basis_size(n, r) <= 48; }

template <class Algebra>
bool relations_as_operators(const Algebra& h) {
  const int n = h.n();
  const int r = h.r();
  const auto basis = w_all_elements(n, r);
  auto op_zero_on_basis = [&](const std::function<typename Algebra::Elem(
                                  const typename Algebra::Elem&)>& op) {
    for (const auto& w : basis)
      if (!op(h.t_basis(w)).empty()) return false;
    return true;
  };
  auto lmul = [&](int g, const typename Algebra::Elem& e) { return h.mul(h.gen(g), e); };

  // (T_i + 1)(T_i - q) = T_i^2 + (1-q) T_i - q = 0
  for (int i = 1; i < n; ++i) {
    auto op = [&](const typename Algebra::Elem& e) {
      auto te = lmul(i, e);
      auto out = h.add(lmul(i, te), te);
      out = h.sub(out, h.scale(te, h.coeffs().q()));
      out = h.sub(out, h.scale(e, h.coeffs().q()));
      return out;
    };
    if (!op_zero_on_basis(op)) return false;
  }
  // prod_j (T_0 - Q_j) = 0, factors applied sequentially
  {
    auto op = [&](const typename Algebra::Elem& e) {
      auto cur = e;
      for (int j = 1; j <= r; ++j) {
        auto qj = [&]() {
          if constexpr (std::is_same_v<Algebra, GenericHecke>) {
            return LaurentPoly::q_param(h.coeffs().ring(), j);
          } else {
            return h.coeffs().q_big_values()[j - 1];
          }
        }();
        cur = h.sub(lmul(0, cur), h.scale(cur, qj));
      }
      return cur;
    };
    if (!op_zero_on_basis(op)) return false;
  }
  // braid relations
  if (n >= 2) {
    auto op = [&](const typename Algebra::Elem& e) {
      auto lhs = lmul(0, lmul(1, lmul(0, lmul(1, e))));
      auto rhs = lmul(1, lmul(0, lmul(1, lmul(0, e))));
      return h.sub(lhs, rhs);
    };
    if (!op_zero_on_basis(op)) return false;
  }
  for (int i = 1; i + 1 < n; ++i) {
    auto op = [&](const typename Algebra::Elem& e) {
      auto lhs = lmul(i, lmul(i + 1, lmul(i, e)));
      auto rhs = lmul(i + 1, lmul(i, lmul(i + 1, e)));
      return h.sub(lhs, rhs);
    };
    if (!op_zero_on_basis(op)) return false;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      auto op = [&](const typename Algebra::Elem& e) {
        return h.sub(lmul(i, lmul(j, e)), lmul(j, lmul(i, e)));
      };
      if (!op_zero_on_basis(op)) return false;
    }
  }
  return true;
}

template <class Algebra>
bool commutation_lemma_items(const Algebra& h) {
  const int n = h.n();
  const int r = h.r();
  auto l_elem = [&](int i, int b) {
    auto e = h.one();
    for (int k = 0; k < b; ++k) e = h.mul(e, h.jm_element(i));
    return e;
  };
  // (i) L_i L_j = L_j L_i
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (!(h.mul(l_elem(i, 1), l_elem(j, 1)) == h.mul(l_elem(j, 1), l_elem(i, 1))))
        return false;
  // (ii) T_i L_j = L_j T_i for j != i, i+1
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      if (!(h.mul(h.gen(i), l_elem(j, 1)) == h.mul(l_elem(j, 1), h.gen(i)))) return false;
    }
  // (iii) T_i commutes with L_i L_{i+1} and L_i + L_{i+1}
  for (int i = 1; i < n; ++i) {
    auto prod = h.mul(l_elem(i, 1), l_elem(i + 1, 1));
    if (!(h.mul(h.gen(i), prod) == h.mul(prod, h.gen(i)))) return false;
    auto sum = h.add(l_elem(i, 1), l_elem(i + 1, 1));
    if (!(h.mul(h.gen(i), sum) == h.mul(sum, h.gen(i)))) return false;
  }
  // (iv) L_{i+1}^b T_i = T_i L_i^b + (q-1) sum_{c=0}^{b-1} L_i^c L_{i+1}^{b-c}
  // (v)  L_i^b T_i = T_i L_{i+1}^b - (q-1) sum_{c=0}^{b-1} L_i^c L_{i+1}^{b-c}
  for (int i = 1; i < n; ++i) {
    for (int b = 0; b <= r - 1; ++b) {
      auto cross = h.zero();
      for (int c = 0; c <= b - 1; ++c)
        cross = h.add(cross, h.mul(l_elem(i, c), l_elem(i + 1, b - c)));
      cross = h.scale(cross, h.coeffs().q_minus_one());
      auto lhs4 = h.mul(l_elem(i + 1, b), h.gen(i));
      auto rhs4 = h.add(h.mul(h.gen(i), l_elem(i, b)), cross);
      if (!(lhs4 == rhs4)) return false;
      auto lhs5 = h.mul(l_elem(i, b), h.gen(i));
      auto rhs5 = h.sub(h.mul(h.gen(i), l_elem(i + 1, b)), cross);
      if (!(lhs5 == rhs5)) return false;
    }
  }
  return true;
}

template <class Algebra>
bool associativity_samples(const Algebra& h, unsigned long seed, int samples) {
  const auto basis = w_all_elements(h.n(), h.r());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
  for (int s = 0; s < samples; ++s) {
    const auto a = h.t_basis(basis[pick(rng)]);
    const auto b = h.t_basis(basis[pick(rng)]);
    const auto c = h.t_basis(basis[pick(rng)]);
    if (!(h.mul(h.mul(a, b), c) == h.mul(a, h.mul(b, c)))) return false;
  }
  return true;
}

template <class Algebra>
bool free_basis_splitting(const Algebra& h) {
  const int n = h.n();
  for (const auto& p : all_parabolic_indices(n)) {
    for (const auto& w : w_all_elements(n, h.r())) {
      const auto expansion = h.coset_expand(h.t_basis(w), full_index(n), p);
      auto recomposed = h.zero();
      for (const auto& [w1, c_part] : expansion)
        recomposed = h.add(recomposed, h.mul(h.t_basis(w1), c_part));
      if (!(recomposed == h.t_basis(w))) return false;
    }
  }
  return true;
}

void check_hecke(Report& rep, int n, int r, const Specialization& spec, unsigned long seed,
                 int samples) {
  const std::string inst = instance_str(n, r);
  if (generic_allowed(n, r)) {
    GenericHecke h = make_generic_hecke(n, r);
    rep.add("defining relations hold as operators on the full basis (generic ring)",
            "hecke-defining-relations-operators", inst, relations_as_operators(h));
    rep.add("commutation lemma items hold exactly (generic ring)",
            "jucys-murphy-commutation-lemma", inst, commutation_lemma_items(h));
    rep.add("associativity on random basis triples (generic ring)",
            "hecke-associativity-samples", inst, associativity_samples(h, seed, samples));
    rep.add("unique free-module splitting over every parabolic subalgebra (generic ring)",
            "free-basis-splitting", inst, free_basis_splitting(h));
  } else {
    RationalHecke h = make_rational_hecke(n, r, spec.q, spec.q_big);
    rep.add("defining relations hold as operators on the full basis (specialized)",
            "hecke-defining-relations-operators", inst, relations_as_operators(h));
    rep.add("commutation lemma items hold exactly (specialized)",
            "jucys-murphy-commutation-lemma", inst, commutation_lemma_items(h));
    rep.add("associativity on random basis triples (specialized)",
            "hecke-associativity-samples", inst, associativity_samples(h, seed, samples));
    rep.add("unique free-module splitting over every parabolic subalgebra (specialized)",
            "free-basis-splitting", inst, free_basis_splitting(h));
  }
}

template <class Algebra>
bool mackey_roundtrip_all(const Algebra& h, const ParabolicIndex& a, const ParabolicIndex& b) {
  for (const auto& w : w_all_elements(h.n(), h.r())) {
    try {
      const auto decomp = h.mackey_phi(h.t_basis(w), a, b);
      (void)decomp;
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

template <class Algebra>
bool commutation_families(const Algebra& h, const ParabolicIndex& a, const ParabolicIndex& b) {
  for (const auto& d : double_coset_reps(a, b, h.r()))
    if (!h.bimodule_commutation_check(d)) return false;
  return true;
}

bool tilde_rank_full(int n, int r, const std::vector<Specialization>& specs) {
  const auto elems = w_all_elements(n, r);
  std::map<WElem, int> index;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) index.emplace(elems[i], i);
  for (const auto& spec : specs) {
    RationalHecke h = make_rational_hecke(n, r, spec.q, spec.q_big);
    for (const auto& a : all_parabolic_indices(n)) {
      for (const auto& b : all_parabolic_indices(n)) {
        QMatrix cob(static_cast<int>(elems.size()), static_cast<int>(elems.size()));
        for (int j = 0; j < static_cast<int>(elems.size()); ++j) {
          SparseVec col;
          for (const auto& [w, c] : h.tilde_basis(elems[j], a, b))
            col.push_back({index.at(w), c});
          std::sort(col.begin(), col.end(),
                    [](const auto& x, const auto& y) { return x.first < y.first; });
          cob.set_col(j, std::move(col));
        }
        if (cob.rank() != static_cast<int>(elems.size())) return false;
      }
    }
  }
  return true;
}

void check_mackey(Report& rep, int n, int r, const Specialization& spec,
                  unsigned long /*seed*/) {
  const std::string inst = instance_str(n, r);
  const auto indices = all_parabolic_indices(n);

  bool roundtrip = true;
  bool families = true;
  if (generic_allowed(n, r)) {
    GenericHecke h = make_generic_hecke(n, r);
    for (const auto& a : indices)
      for (const auto& b : indices) {
        roundtrip &= mackey_roundtrip_all(h, a, b);
        families &= commutation_families(h, a, b);
      }
  } else {
    RationalHecke h = make_rational_hecke(n, r, spec.q, spec.q_big);
    for (const auto& a : indices)
      for (const auto& b : indices) {
        roundtrip &= mackey_roundtrip_all(h, a, b);
        families &= commutation_families(h, a, b);
      }
  }
  rep.add("bimodule decomposition round-trips through multiplication",
          "mackey-bimodule-roundtrip", inst, roundtrip);
  rep.add("representative commutation families hold exactly", "rep-commutation-families",
          inst, families);

  std::vector<Specialization> specs{spec};
  {
    Specialization s2;
    s2.q = Rational(3);
    s2.q_big = default_q_big_values(r);
    for (auto& v : s2.q_big) v += 1;
    Specialization s3;
    s3.q = Rational(1, 2);
    s3.q_big = default_q_big_values(r);
    for (auto& v : s3.q_big) v *= 2;
    specs.push_back(s2);
    specs.push_back(s3);
  }
  rep.add("tilde change of basis has full rank at three specializations",
          "tilde-basis-rank", inst, tilde_rank_full(n, r, specs));

  // functor form on explicit modules at two specializations
  bool functor = true;
  std::vector<Specialization> two_specs{specs[0], specs[1]};
  for (const auto& sp : two_specs) {
    RationalHecke h = make_rational_hecke(n, r, sp.q, sp.q_big);
    for (const auto& b : indices) {
      std::vector<HModule> modules;
      modules.push_back(regular_module(h, b));
      modules.push_back(one_dim_module(h, b, h.coeffs().q_value(), 1));
      modules.push_back(one_dim_module(h, b, Rational(-1), std::min(2, r)));
      for (const auto& m : modules) {
        if (!module_satisfies_relations(m)) {
          functor = false;
          continue;
        }
        for (const auto& a : indices) {
          const auto report = mackey_functor_check(h, m, a);
          functor &= report.ok();
        }
      }
    }
  }
  rep.add("restriction of induction decomposes through the explicit intertwiner",
          "mackey-functor-intertwiner", inst, functor);
}

// ---------------------------------------------------------------------------
// verify-braid
// ---------------------------------------------------------------------------

void check_braid(Report& rep, int n, int r, std::size_t cap) {
  const std::string inst = instance_str(n, r);
  bool gamma_ok = true;
  for (int i = 1; i <= n; ++i) {
    const BraidWord g = gamma_word(n, i);
    gamma_ok &= (g.length() == 2 * i - 1) && (word_image(g, r) == w_torus(n, r, i));
  }
  rep.add("torus braid words have the right length and image", "braid-word-image", inst,
          gamma_ok);

  const auto indices = all_parabolic_indices(n);
  struct Task {
    DoubleCosetDatum d;
    int j, pj;
  };
  std::vector<Task> tasks;
  bool image_ok = true;
  for (const auto& a : indices) {
    for (const auto& b : indices) {
      for (const auto& d : double_coset_reps(a, b, r)) {
        image_ok &= word_image(omega_word(d, n, r), r) == d.u;
        for (const auto& [j, pj] : d.psi) tasks.push_back(Task{d, j, pj});
      }
    }
  }
  rep.add("representative braid words evaluate to their group elements",
          "braid-rep-word-image", inst, image_ok);

  std::vector<std::function<int()>> jobs;
  for (const auto& task : tasks) {
    jobs.push_back([task, n, r, cap]() -> int {
      const BraidWord om = omega_word(task.d, n, r);
      const BraidWord lhs = braid_concat(om, braid_word(n, {task.j}));
      const BraidWord rhs = braid_concat(braid_word(n, {task.pj}), om);
      const EquivResult res = braid_equiv(lhs, rhs, cap);
      if (res.status == EquivStatus::equivalent) return 0;
      return res.status == EquivStatus::resource_exhausted ? 2 : 1;
    });
  }
  const auto outcomes = run_tasks(std::move(jobs));
  int failures = 0, caps = 0;
  for (int v : outcomes) {
    if (v == 1) ++failures;
    if (v == 2) ++caps;
  }
  rep.cap_hits += caps;
  rep.add("representative words satisfy the conjugation identity by rewriting alone",
          "braid-rep-identity", inst, failures == 0 && caps == 0);
  rep.data["braid_identity_instances"] = static_cast<int>(tasks.size());
}

// ---------------------------------------------------------------------------
// roots-compare
// ---------------------------------------------------------------------------

void check_roots(Report& rep, int n, int r) {
  const std::string inst = instance_str(n, r);
  bool equivalence = true;
  bool corollary = true;
  bool counterexample = true;
  bool inclusion = true;
  bool additivity = true;
  bool partition = true;
  bool omega_equality = true;
  Json escaping = Json::object();  // which coset representatives fail the criterion

  for (const auto& p : all_parabolic_indices(n)) {
    RSets sets;
    try {
      sets = r_sets(p, r);  // throws if the two criteria disagree
    } catch (const InternalError&) {
      equivalence = false;
      continue;
    }
    const auto sorted = [](std::vector<WElem> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    const auto right = sorted(one_sided_reps(p, r, Side::right));
    const auto left = sorted(one_sided_reps(p, r, Side::left));
    const auto r_plain = sorted(sets.r_plain);
    const auto r_star = sorted(sets.r_star);
    const auto r0 = sorted(sets.r0);
    const auto r_star0 = sorted(sets.r_star0);

    for (const auto& w : r0) inclusion &= std::binary_search(r_plain.begin(), r_plain.end(), w);
    for (const auto& w : r_star0) inclusion &= std::binary_search(r_star.begin(), r_star.end(), w);

    const bool column_shape = p.mu.parts().empty() ||
                              *std::max_element(p.mu.parts().begin(), p.mu.parts().end()) == 1;
    const RootSets rsets = build_sets(p, r);
    // at r = 1 the enlarged set adds nothing, so equality holds for every shape
    omega_equality &= ((rsets.omega == rsets.omega_tilde) == (column_shape || r == 1));
    if (column_shape) {
      corollary &= (r_plain == right) && (r_star == left);
    } else if (r >= 2) {
      Json failing = Json::array();
      for (const auto& w : right)
        if (!std::binary_search(r_plain.begin(), r_plain.end(), w))
          failing.push_back(to_json(w));
      counterexample &= !failing.empty();
      escaping[inst + " " + parabolic_str(p)] = failing;
      bool found_left = false;
      for (const auto& w : left)
        if (!std::binary_search(r_star.begin(), r_star.end(), w)) found_left = true;
      counterexample &= found_left;
    }

    const auto subgroup = parabolic_elements(p, r);
    for (const auto& w : sets.r0)
      for (const auto& w2 : subgroup)
        additivity &= w_length(w_multiply(w, w2)) == w_length(w) + w_length(w2);

    if (r_plain == r0) {
      std::map<WElem, int> covered;
      for (const auto& w : sets.r_plain)
        for (const auto& h : subgroup) ++covered[w_multiply(w, h)];
      partition &= covered.size() == w_all_elements(n, r).size();
      for (const auto& [w, c] : covered) partition &= (c == 1);
    }
  }
  rep.add("the positivity criterion agrees between the full and simple root sets",
          "roots-criteria-equivalence", inst, equivalence);
  rep.add("restricted root sets are nested", "roots-rset-inclusion", inst, inclusion);
  rep.add("enlarged equals plain positive set exactly for column shapes",
          "roots-omega-equality", inst, omega_equality);
  rep.add("root-system representatives match coset representatives for column shapes",
          "roots-rset-equality", inst, corollary);
  if (r >= 2) {
    rep.add("coset representatives escape the root criterion for non-column shapes",
            "roots-rset-counterexample", inst, counterexample);
  } else {
    rep.add("counterexample check vacuous at r = 1 (all colors vanish)",
            "roots-rset-counterexample", inst, true);
  }
  rep.add("lengths add against the parabolic for the restricted set",
          "roots-length-additivity", inst, additivity);
  rep.add("when the restricted set is everything, translates partition the group",
          "roots-partition", inst, partition);
  for (const auto& [key, value] : escaping.items()) rep.data["escaping_coset_reps"][key] = value;
}

// ---------------------------------------------------------------------------
// report output and command driver
// ---------------------------------------------------------------------------

int emit_report(const Report& rep, const Options& opt) {
  Json j;
  j["schema_version"] = 1;
  j["command"] = rep.command;
  j["config"] = rep.config;
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json e;
    e["name"] = c.name;
    e["anchor"] = c.anchor;
    e["instance"] = c.instance;
    e["pass"] = c.pass;
    checks.push_back(e);
  }
  j["checks"] = checks;
  if (!rep.data.empty()) j["data"] = rep.data;
  Json summary;
  summary["total"] = static_cast<int>(rep.checks.size());
  summary["failed"] = rep.failures();
  summary["cap_hits"] = rep.cap_hits;
  j["summary"] = summary;

  std::ostringstream text;
  if (opt.format == "json") {
    text << j.dump(2) << "\n";
  } else {
    for (const auto& c : rep.checks)
      text << (c.pass ? "PASS" : "FAIL") << " " << c.anchor << " [" << c.instance << "] "
           << c.name << "\n";
    text << "summary: " << rep.checks.size() << " checks, " << rep.failures()
         << " failed, " << rep.cap_hits << " cap hits\n";
  }
  if (opt.out_path.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open output path " << opt.out_path << "\n";
      return 2;
    }
    out << text.str();
  }
  if (rep.cap_hits > 0) return 3;
  return rep.failures() == 0 ? 0 : 1;
}

Json config_json(const Options& opt) {
  Json c;
  c["n"] = opt.n;
  c["r"] = opt.r;
  if (!opt.a_text.empty()) c["a"] = opt.a_text;
  if (!opt.b_text.empty()) c["b"] = opt.b_text;
  if (!opt.spec_text.empty()) c["spec"] = opt.spec_text;
  c["seed"] = opt.seed;
  c["cap"] = opt.cap;
  return c;
}

std::vector<std::pair<ParabolicIndex, ParabolicIndex>> selected_pairs(const Options& opt) {
  std::vector<ParabolicIndex> as, bs;
  if (opt.a_text.empty()) {
    as = all_parabolic_indices(opt.n);
  } else {
    as.push_back(parse_parabolic(opt.a_text, opt.n));
  }
  if (opt.b_text.empty()) {
    bs = all_parabolic_indices(opt.n);
  } else {
    bs.push_back(parse_parabolic(opt.b_text, opt.n));
  }
  std::vector<std::pair<ParabolicIndex, ParabolicIndex>> out;
  for (const auto& a : as)
    for (const auto& b : bs) out.push_back({a, b});
  return out;
}

int run_all(const Options& opt) {
  Report rep;
  rep.command = "all";
  rep.config = config_json(opt);
  rep.config.erase("a");
  rep.config.erase("b");

  for (int n = 1; n <= 3; ++n) {
    for (int r = 1; r <= 3; ++r) {
      check_group(rep, n, r);
      check_roots(rep, n, r);
      check_braid(rep, n, r, opt.cap);
      for (const auto& p : all_parabolic_indices(n)) {
        check_cosets(rep, n, r, p, Side::right, false);
        check_cosets(rep, n, r, p, Side::left, false);
      }
      for (const auto& a : all_parabolic_indices(n))
        for (const auto& b : all_parabolic_indices(n))
          check_double_cosets(rep, n, r, a, b, false);
    }
  }
  const Specialization spec = parse_spec(opt.spec_text, 2);
  for (auto [n, r] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}}) {
    const Specialization s = parse_spec(opt.spec_text, r);
    check_hecke(rep, n, r, s, opt.seed, opt.samples);
    check_mackey(rep, n, r, s, opt.seed);
  }
  (void)spec;
  return emit_report(rep, opt);
}

}  // namespace
}  // namespace cyclo

int main(int argc, char** argv) {
  using namespace cyclo;
  CLI::App app{"exact coset combinatorics and cyclotomic Hecke algebras for G(r,1,n)"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd, bool with_pair) {
    cmd->add_option("--n", opt.n, "rank n of the group")->check(CLI::PositiveNumber);
    cmd->add_option("--r", opt.r, "order r of the cyclic factor")->check(CLI::PositiveNumber);
    if (with_pair) {
      cmd->add_option("--a", opt.a_text, "left parabolic index l:[m1,m2,...]");
      cmd->add_option("--b", opt.b_text, "right parabolic index l:[m1,m2,...]");
    }
    cmd->add_option("--spec", opt.spec_text, "specialization q,Q1,...,Qr (rationals)");
    cmd->add_option("--seed", opt.seed, "seed for sampled checks");
    cmd->add_option("--cap", opt.cap, "node cap for braid-word searches");
    cmd->add_option("--samples", opt.samples, "sample count for randomized checks");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", opt.out_path, "write the report to this path");
  };

  auto* cosets = app.add_subcommand("cosets", "one-sided coset representatives + oracles");
  add_common(cosets, true);
  cosets->add_option("--side", opt.side, "left or right cosets")
      ->check(CLI::IsMember({"left", "right"}));
  auto* dcosets =
      app.add_subcommand("double-cosets", "double coset representative data + oracles");
  add_common(dcosets, true);
  auto* vgroup = app.add_subcommand("verify-group", "group presentation and coset layer");
  add_common(vgroup, false);
  auto* vhecke = app.add_subcommand("verify-hecke", "algebra relations and normal forms");
  add_common(vhecke, false);
  auto* vmackey = app.add_subcommand("verify-mackey", "bimodule and functor decomposition");
  add_common(vmackey, false);
  auto* vbraid = app.add_subcommand("verify-braid", "braid-word conjugation identities");
  add_common(vbraid, false);
  auto* vroots = app.add_subcommand("roots-compare", "root-system representative comparison");
  add_common(vroots, false);
  auto* vall = app.add_subcommand("all", "the whole desk-scale battery");
  add_common(vall, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    Report rep;
    rep.config = config_json(opt);
    if (app.got_subcommand(cosets)) {
      rep.command = "cosets";
      rep.config["side"] = opt.side;
      const Side side = opt.side == "left" ? Side::left : Side::right;
      if (opt.a_text.empty()) throw ConfigError("cosets requires --a");
      check_cosets(rep, opt.n, opt.r, parse_parabolic(opt.a_text, opt.n), side, true);
      return emit_report(rep, opt);
    }
    if (app.got_subcommand(dcosets)) {
      rep.command = "double-cosets";
      for (const auto& [a, b] : selected_pairs(opt))
        check_double_cosets(rep, opt.n, opt.r, a, b, !opt.a_text.empty() && !opt.b_text.empty());
      return emit_report(rep, opt);
    }
    if (app.got_subcommand(vgroup)) {
      rep.command = "verify-group";
      check_group(rep, opt.n, opt.r);
      for (const auto& p : all_parabolic_indices(opt.n)) {
        check_cosets(rep, opt.n, opt.r, p, Side::right, false);
        check_cosets(rep, opt.n, opt.r, p, Side::left, false);
      }
      return emit_report(rep, opt);
    }
    if (app.got_subcommand(vhecke)) {
      rep.command = "verify-hecke";
      check_hecke(rep, opt.n, opt.r, parse_spec(opt.spec_text, opt.r), opt.seed, opt.samples);
      return emit_report(rep, opt);
    }
    if (app.got_subcommand(vmackey)) {
      rep.command = "verify-mackey";
      check_mackey(rep, opt.n, opt.r, parse_spec(opt.spec_text, opt.r), opt.seed);
      return emit_report(rep, opt);
    }
    if (app.got_subcommand(vbraid)) {
      rep.command = "verify-braid";
      check_braid(rep, opt.n, opt.r, opt.cap);
      return emit_report(rep, opt);
    }
    if (app.got_subcommand(vroots)) {
      rep.command = "roots-compare";
      check_roots(rep, opt.n, opt.r);
      return emit_report(rep, opt);
    }
    if (app.got_subcommand(vall)) return run_all(opt);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
