#include "cyclo/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cyclo {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > n() || seen[v - 1]) throw ConfigError("not a permutation");
    seen[v - 1] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return Perm(std::move(im));
}

Perm Perm::transposition(int n, int i) {
  if (i < 1 || i >= n) throw ConfigError("transposition index out of range");
  Perm p = identity(n);
  std::swap(p.images_[i - 1], p.images_[i]);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> im(n());
  for (int i = 1; i <= n(); ++i) im[(*this)(i)-1] = i;
  Perm out;
  out.images_ = std::move(im);
  return out;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.n() != b.n()) throw ConfigError("permutation size mismatch");
  std::vector<int> im(a.n());
  for (int i = 1; i <= a.n(); ++i) im[i - 1] = a(b(i));
  Perm out;
  out.images_ = std::move(im);
  return out;
}

Composition::Composition(std::vector<int> parts) {
  for (int p : parts) {
    if (p < 0) throw ConfigError("negative composition part");
    if (p > 0) parts_.push_back(p);
    total_ += p;
  }
}

Tableau::Tableau(Composition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  std::set<int> seen;
  int count = 0;
  if (static_cast<int>(rows_.size()) != shape_.num_parts())
    throw ConfigError("tableau row count mismatch");
  for (int i = 0; i < shape_.num_parts(); ++i) {
    if (static_cast<int>(rows_[i].size()) != shape_.parts()[i])
      throw ConfigError("tableau row length mismatch");
    for (int v : rows_[i]) {
      seen.insert(v);
      ++count;
    }
  }
  if (count != shape_.total() || static_cast<int>(seen.size()) != count ||
      (count > 0 && (*seen.begin() < 1 || *seen.rbegin() > count)))
    throw ConfigError("tableau entries not a bijection onto [1,n]");
}

Tableau Tableau::row_filling(const Composition& shape) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int p : shape.parts()) {
    std::vector<int> row(p);
    std::iota(row.begin(), row.end(), next);
    next += p;
    rows.push_back(std::move(row));
  }
  return Tableau(shape, std::move(rows));
}

bool Tableau::row_standard() const {
  for (const auto& row : rows_)
    for (size_t j = 1; j < row.size(); ++j)
      if (row[j - 1] >= row[j]) return false;
  return true;
}

Tableau Tableau::acted_by(const Perm& x) const {
  std::vector<std::vector<int>> rows = rows_;
  for (auto& row : rows)
    for (int& v : row) v = x(v);
  return Tableau(shape_, std::move(rows));
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

int perm_length(const Perm& x) {
  int inv = 0;
  for (int i = 1; i <= x.n(); ++i)
    for (int j = i + 1; j <= x.n(); ++j)
      if (x(i) > x(j)) ++inv;
  return inv;
}

std::vector<int> reduced_word(const Perm& x) {
  std::vector<int> word;
  Perm cur = x;
  bool descent = true;
  while (descent) {
    descent = false;
    for (int i = 1; i < cur.n(); ++i) {
      if (cur(i) > cur(i + 1)) {
        // strip the descent: cur := cur * s_i shortens by one
        word.push_back(i);
        cur = cur * Perm::transposition(cur.n(), i);
        descent = true;
        break;
      }
    }
  }
  // cur = x * s_{w_1} * ... * s_{w_k} = e, so x = s_{w_k} ... s_{w_1}
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<int> parabolic_generators(const Composition& mu) {
  std::vector<int> gens;
  int pos = 0;
  for (int p : mu.parts()) {
    for (int i = 1; i < p; ++i) gens.push_back(pos + i);
    pos += p;
  }
  return gens;
}

Composition composition_from_generators(int n, const std::vector<int>& gens) {
  std::set<int> g(gens.begin(), gens.end());
  std::vector<int> parts;
  int run = 1;
  for (int i = 1; i < n; ++i) {
    if (g.count(i)) {
      ++run;
    } else {
      parts.push_back(run);
      run = 1;
    }
  }
  if (n >= 1) parts.push_back(run);
  return Composition(parts);
}

bool in_parabolic(const Perm& x, const Composition& mu) {
  int lo = 1;
  for (int p : mu.parts()) {
    for (int i = lo; i < lo + p; ++i)
      if (x(i) < lo || x(i) >= lo + p) return false;
    lo += p;
  }
  return true;
}

bool is_coset_rep(const Perm& x, const Composition& mu, Side side) {
  int len = perm_length(x);
  for (int i : parabolic_generators(mu)) {
    Perm s = Perm::transposition(x.n(), i);
    const Perm prod = (side == Side::right) ? x * s : s * x;
    if (perm_length(prod) < len) return false;
  }
  return true;
}

std::vector<Perm> coset_reps(const Composition& mu, Side side) {
  std::vector<Perm> out;
  for (const Perm& x : all_perms(mu.total()))
    if (is_coset_rep(x, mu, side)) out.push_back(x);
  return out;
}

bool is_double_coset_rep(const Perm& x, const Composition& mu, const Composition& nu) {
  return is_coset_rep(x, mu, Side::left) && is_coset_rep(x, nu, Side::right);
}

std::vector<Perm> double_coset_reps(const Composition& mu, const Composition& nu) {
  if (mu.total() != nu.total()) throw ConfigError("composition size mismatch");
  std::vector<Perm> out;
  for (const Perm& x : all_perms(mu.total()))
    if (is_double_coset_rep(x, mu, nu)) out.push_back(x);
  return out;
}

Composition tau(const Perm& x, const Composition& mu, const Composition& nu) {
  if (!is_double_coset_rep(x, mu, nu))
    throw DomainError("tau: x is not a distinguished double coset representative");
  const int n = x.n();
  std::set<int> s_mu;
  for (int i : parabolic_generators(mu)) s_mu.insert(i);
  std::set<int> s_nu;
  for (int i : parabolic_generators(nu)) s_nu.insert(i);
  std::vector<int> gens;
  const Perm xinv = x.inverse();
  for (int j = 1; j < n; ++j) {
    if (!s_mu.count(j)) continue;
    // s_j in x S_nu x^-1 iff x^-1 s_j x is some s_i with i in S_nu
    const Perm conj = xinv * Perm::transposition(n, j) * x;
    for (int i = 1; i < n; ++i) {
      if (conj == Perm::transposition(n, i)) {
        if (s_nu.count(i)) gens.push_back(j);
        break;
      }
    }
  }
  return composition_from_generators(n, gens);
}

std::pair<Perm, Perm> coset_split(const Perm& w, const Composition& mu) {
  Perm w1 = w;
  Perm w2 = Perm::identity(w.n());
  const std::vector<int> gens = parabolic_generators(mu);
  bool reduced = true;
  while (reduced) {
    reduced = false;
    for (int i : gens) {
      if (w1(i) > w1(i + 1)) {
        Perm s = Perm::transposition(w.n(), i);
        w1 = w1 * s;
        w2 = s * w2;
        reduced = true;
        break;
      }
    }
  }
  return {w1, w2};
}

TripleDecomposition triple_decompose(const Perm& w, const Composition& mu,
                                     const Composition& nu) {
  if (mu.total() != w.n() || nu.total() != w.n())
    throw ConfigError("composition size mismatch");
  const int n = w.n();
  // Bubble w down to the minimal element of S_mu w S_nu, recording the moves.
  Perm x = w;
  Perm y = Perm::identity(n);  // accumulated left part, w = y * x * z
  Perm z = Perm::identity(n);
  const std::vector<int> gens_mu = parabolic_generators(mu);
  const std::vector<int> gens_nu = parabolic_generators(nu);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : gens_mu) {
      if (x.inverse()(i) > x.inverse()(i + 1)) {  // l(s_i x) < l(x)
        Perm s = Perm::transposition(n, i);
        x = s * x;
        y = y * s;
        moved = true;
        break;
      }
    }
    if (moved) continue;
    for (int i : gens_nu) {
      if (x(i) > x(i + 1)) {  // l(x s_i) < l(x)
        Perm s = Perm::transposition(n, i);
        x = x * s;
        z = s * z;
        moved = true;
        break;
      }
    }
  }
  // Canonicalize y modulo S_tau(x), pushing the remainder into z.
  auto [y1, h] = coset_split(y, tau(x, mu, nu));
  const Perm z_final = (x.inverse() * h * x) * z;
  TripleDecomposition out{y1, x, z_final};
  if (!(out.y * out.x * out.z == w)) throw InternalError("triple decomposition failed");
  if (perm_length(out.y) + perm_length(out.x) + perm_length(out.z) != perm_length(w))
    throw InternalError("triple decomposition lengths do not add");
  return out;
}

std::pair<int, int> lemma_constants(const Perm& x, int l, int m) {
  const int n = x.n();
  if (l < 0 || l > n || m < 0 || m > n) throw ConfigError("l or m out of range");
  int c = 0;
  while (c < n && x(c + 1) == c + 1) ++c;
  const int k = std::min({c, l, m});
  // guaranteed conclusions; their failure flags a precondition violation
  for (int i = 1; i <= k; ++i)
    if (x(i) != i) throw DomainError("lemma_constants: x does not fix [1,k]");
  std::set<int> image;
  for (int i = 1; i <= m; ++i)
    if (x(i) <= l) image.insert(x(i));
  std::set<int> expect;
  for (int i = 1; i <= k; ++i) expect.insert(i);
  if (image != expect)
    throw DomainError("lemma_constants: [1,l] meets x([1,m]) outside [1,k]");
  return {c, k};
}

Composition prefixed_composition(int l, const Composition& mu) {
  std::vector<int> parts;
  if (l > 0) parts.push_back(l);
  for (int p : mu.parts()) parts.push_back(p);
  return Composition(parts);
}

}  // namespace cyclo
