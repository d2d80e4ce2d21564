#include "cyclo/roots.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

namespace cyclo {

namespace {

int mod_r(int v, int r) {
  v %= r;
  return v < 0 ? v + r : v;
}

}  // namespace

Root single_root(int i, int a, int r) {
  if (i < 1) throw ConfigError("root index out of range");
  return Root{false, i, mod_r(a, r), 0, 0};
}

Root difference_root(int i, int a, int j, int b, int r) {
  if (i < 1 || j < 1 || i == j) throw ConfigError("invalid difference root");
  return Root{true, i, mod_r(a, r), j, mod_r(b, r)};
}

std::string root_str(const Root& root) {
  std::string s = "e(" + std::to_string(root.i) + "," + std::to_string(root.a) + ")";
  if (root.is_difference)
    s += "-e(" + std::to_string(root.j) + "," + std::to_string(root.b) + ")";
  return s;
}

Root act(const WElem& w, const Root& root, ActionMode mode) {
  const int r = w.r;
  const int sign = mode == ActionMode::dot ? 1 : -1;
  Root out = root;
  out.i = w.perm(root.i);
  out.a = mod_r(root.a + sign * w.colors[root.i - 1], r);
  if (root.is_difference) {
    out.j = w.perm(root.j);
    out.b = mod_r(root.b + sign * w.colors[root.j - 1], r);
  }
  return out;
}

bool in_phi0(const Root& root) {
  if (!root.is_difference) return root.a == 0;
  if (root.i > root.j) return root.a == 0;
  return root.b != 0;
}

RootSets build_sets(const ParabolicIndex& p, int r) {
  const int n = p.n();
  const int l = p.l;
  RootSets out;
  for (int i = 1; i <= n; ++i) {
    for (int a = 0; a < r; ++a) {
      out.phi.push_back(single_root(i, a, r));
      for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        for (int b = 0; b < r; ++b) out.phi.push_back(difference_root(i, a, j, b, r));
      }
    }
  }
  for (const Root& root : out.phi)
    if (in_phi0(root)) out.phi0.push_back(root);

  // block ranges of the parabolic: [1,l] with all colors, then the mu-blocks
  for (int i = 1; i <= l; ++i) {
    for (int a = 0; a < r; ++a) {
      out.phi_sub.push_back(single_root(i, a, r));
      for (int j = 1; j <= l; ++j) {
        if (j == i) continue;
        for (int b = 0; b < r; ++b) out.phi_sub.push_back(difference_root(i, a, j, b, r));
      }
    }
    out.omega.push_back(single_root(i, 0, r));
    out.omega_tilde.push_back(single_root(i, 0, r));
    for (int j = 1; j < i; ++j) {
      for (int b = 0; b < r; ++b) {
        out.omega.push_back(difference_root(i, 0, j, b, r));
        out.omega_tilde.push_back(difference_root(i, 0, j, b, r));
      }
    }
    if (i < l) out.delta.push_back(difference_root(i + 1, 0, i, 0, r));
  }
  if (l >= 1) out.delta.push_back(single_root(1, 0, r));
  int lo = l + 1;
  for (int part : p.mu.parts()) {
    const int hi = lo + part - 1;
    for (int i = lo; i <= hi; ++i) {
      for (int j = lo; j <= hi; ++j) {
        if (j == i) continue;
        out.phi_sub.push_back(difference_root(i, 0, j, 0, r));
      }
      for (int j = lo; j < i; ++j) {
        out.omega.push_back(difference_root(i, 0, j, 0, r));
        for (int b = 0; b < r; ++b) out.omega_tilde.push_back(difference_root(i, 0, j, b, r));
      }
      if (i < hi) out.delta.push_back(difference_root(i + 1, 0, i, 0, r));
    }
    lo = hi + 1;
  }
  return out;
}

const std::map<WElem, int>& w_length_table(int n, int r) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::map<WElem, int>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({n, r});
  if (it != cache.end()) return it->second;
  std::map<WElem, int> table;
  std::deque<WElem> frontier;
  table.emplace(w_identity(n, r), 0);
  frontier.push_back(w_identity(n, r));
  while (!frontier.empty()) {
    const WElem w = frontier.front();
    frontier.pop_front();
    const int d = table.at(w);
    for (int g = 0; g < n; ++g) {
      WElem next = w_multiply(w, w_generator(n, r, g));
      if (table.emplace(next, d + 1).second) frontier.push_back(std::move(next));
    }
  }
  return cache.emplace(std::make_pair(n, r), std::move(table)).first->second;
}

int w_length(const WElem& w) { return w_length_table(w.n(), w.r).at(w); }

RSets r_sets(const ParabolicIndex& p, int r) {
  const int n = p.n();
  const RootSets sets = build_sets(p, r);
  auto maps_into_phi0 = [](const WElem& w, const std::vector<Root>& roots, ActionMode mode) {
    for (const Root& root : roots)
      if (!in_phi0(act(w, root, mode))) return false;
    return true;
  };
  RSets out;
  for (const WElem& w : w_all_elements(n, r)) {
    const WElem winv = w_inverse(w);
    const bool om = maps_into_phi0(w, sets.omega, ActionMode::dot);
    const bool de = maps_into_phi0(w, sets.delta, ActionMode::dot);
    if (om != de) throw InternalError("r_sets: Omega and Delta criteria disagree");
    const bool om_star = maps_into_phi0(winv, sets.omega, ActionMode::star);
    const bool de_star = maps_into_phi0(winv, sets.delta, ActionMode::star);
    if (om_star != de_star) throw InternalError("r_sets: star criteria disagree");
    if (om) out.r_plain.push_back(w);
    if (om_star) out.r_star.push_back(w);
    if (maps_into_phi0(w, sets.omega_tilde, ActionMode::dot)) out.r0.push_back(w);
    if (maps_into_phi0(winv, sets.omega_tilde, ActionMode::star)) out.r_star0.push_back(w);
  }
  return out;
}

}  // namespace cyclo
