#include "cyclo/hmodule.hpp"

#include <algorithm>
#include <set>

namespace cyclo {

SparseVec sparse_unit(int i) { return {{i, Rational(1)}}; }

SparseVec sparse_add(const SparseVec& a, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      Rational s = a[i].second + b[j].second;
      if (s != 0) out.push_back({a[i].first, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec sparse_scale(const SparseVec& a, const Rational& c) {
  SparseVec out;
  if (c == 0) return out;
  out.reserve(a.size());
  for (const auto& [i, v] : a) out.push_back({i, v * c});
  return out;
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.cols_data_[i] = sparse_unit(i);
  return m;
}

void QMatrix::set(int i, int j, const Rational& v) {
  SparseVec& c = cols_data_[j];
  auto it = std::lower_bound(c.begin(), c.end(), i,
                             [](const auto& p, int k) { return p.first < k; });
  if (it != c.end() && it->first == i) {
    if (v == 0) {
      c.erase(it);
    } else {
      it->second = v;
    }
    return;
  }
  if (v != 0) c.insert(it, {i, v});
}

Rational QMatrix::at(int i, int j) const {
  const SparseVec& c = cols_data_[j];
  auto it = std::lower_bound(c.begin(), c.end(), i,
                             [](const auto& p, int k) { return p.first < k; });
  if (it != c.end() && it->first == i) return it->second;
  return Rational(0);
}

SparseVec QMatrix::apply(const SparseVec& v) const {
  SparseVec out;
  for (const auto& [j, val] : v) out = sparse_add(out, sparse_scale(cols_data_[j], val));
  return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw ConfigError("matrix dimension mismatch");
  QMatrix out(a.rows(), b.cols());
  for (int j = 0; j < b.cols(); ++j) out.cols_data_[j] = a.apply(b.col(j));
  return out;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ConfigError("matrix dimension mismatch");
  QMatrix out(a.rows(), a.cols());
  for (int j = 0; j < a.cols(); ++j) out.cols_data_[j] = sparse_add(a.col(j), b.col(j));
  return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) { return a + b.scaled(Rational(-1)); }

QMatrix QMatrix::scaled(const Rational& c) const {
  QMatrix out(rows_, cols_);
  for (int j = 0; j < cols_; ++j) out.cols_data_[j] = sparse_scale(cols_data_[j], c);
  return out;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cols_data_ == b.cols_data_;
}

bool QMatrix::is_zero() const {
  for (const auto& c : cols_data_)
    if (!c.empty()) return false;
  return true;
}

int QMatrix::rank() const {
  // dense elimination over Q
  std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_, Rational(0)));
  for (int j = 0; j < cols_; ++j)
    for (const auto& [i, v] : cols_data_[j]) m[i][j] = v;
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows_; ++i) {
      if (m[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const Rational inv = 1 / m[rank][col];
    for (int j = col; j < cols_; ++j) m[rank][j] *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == rank || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (int j = col; j < cols_; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

namespace {

Specialization spec_of(const RationalHecke& h) {
  return Specialization{h.coeffs().q_value(), h.coeffs().q_big_values()};
}

}  // namespace

SparseVec apply_elem(const RationalHecke& h, const HModule& m,
                     const RationalHecke::Elem& c, const SparseVec& v) {
  SparseVec out;
  for (const auto& [w, coeff] : c) {
    auto [letters, q_exp] = h.generator_word(w);
    SparseVec cur = v;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      cur = m.gen_action.at(*it).apply(cur);
    Rational scalar = coeff * rational_power(h.coeffs().q_value(), q_exp);
    out = sparse_add(out, sparse_scale(cur, scalar));
  }
  return out;
}

HModule regular_module(const RationalHecke& h, const ParabolicIndex& p) {
  const std::vector<WElem> basis = parabolic_elements(p, h.r());
  std::map<WElem, int> index;
  for (int i = 0; i < static_cast<int>(basis.size()); ++i) index.emplace(basis[i], i);
  HModule m;
  m.algebra = p;
  m.n = h.n();
  m.r = h.r();
  m.dim = static_cast<int>(basis.size());
  m.spec = spec_of(h);
  for (int g : parabolic_generator_set(p)) {
    QMatrix mat(m.dim, m.dim);
    for (int j = 0; j < m.dim; ++j) {
      SparseVec col;
      for (const auto& [w, c] : h.mul(h.gen(g), h.t_basis(basis[j]))) {
        col.push_back({index.at(w), c});
      }
      std::sort(col.begin(), col.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      mat.set_col(j, std::move(col));
    }
    m.gen_action.emplace(g, std::move(mat));
  }
  return m;
}

HModule one_dim_module(const RationalHecke& h, const ParabolicIndex& p,
                       const Rational& t_scalar, int q_index) {
  if (q_index < 1 || q_index > h.r()) throw ConfigError("Q index out of range");
  HModule m;
  m.algebra = p;
  m.n = h.n();
  m.r = h.r();
  m.dim = 1;
  m.spec = spec_of(h);
  for (int g : parabolic_generator_set(p)) {
    QMatrix mat(1, 1);
    mat.set(0, 0, g == 0 ? m.spec.q_big[q_index - 1] : t_scalar);
    m.gen_action.emplace(g, std::move(mat));
  }
  return m;
}

bool module_satisfies_relations(const HModule& m) {
  const std::vector<int> gens = parabolic_generator_set(m.algebra);
  const std::set<int> gen_set(gens.begin(), gens.end());
  const QMatrix id = QMatrix::identity(m.dim);
  const Rational& q = m.spec.q;
  for (int g : gens) {
    const QMatrix& t = m.gen_action.at(g);
    if (g == 0) {
      QMatrix prod = id;
      for (int j = 1; j <= m.r; ++j) prod = prod * (t - id.scaled(m.spec.q_big[j - 1]));
      if (!prod.is_zero()) return false;
    } else {
      if (!((t + id) * (t - id.scaled(q))).is_zero()) return false;
    }
  }
  for (int g : gens) {
    for (int g2 : gens) {
      if (g2 <= g) continue;
      const QMatrix& a = m.gen_action.at(g);
      const QMatrix& b = m.gen_action.at(g2);
      if (g2 - g > 1) {
        if (!(a * b == b * a)) return false;
      } else if (g == 0) {
        if (!(a * b * a * b == b * a * b * a)) return false;
      } else {
        if (!(a * b * a == b * a * b)) return false;
      }
    }
  }
  return true;
}

HModule restrict_module(const HModule& m, const ParabolicIndex& sub) {
  HModule out;
  out.algebra = sub;
  out.n = m.n;
  out.r = m.r;
  out.dim = m.dim;
  out.spec = m.spec;
  for (int g : parabolic_generator_set(sub)) {
    auto it = m.gen_action.find(g);
    if (it == m.gen_action.end())
      throw DomainError("restrict_module: generator outside the module's algebra");
    out.gen_action.emplace(g, it->second);
  }
  return out;
}

HModule induce_module(const RationalHecke& h, const HModule& m, const ParabolicIndex& up) {
  const ParabolicIndex sub = m.algebra;
  {
    std::set<int> up_gens;
    for (int g : parabolic_generator_set(up)) up_gens.insert(g);
    for (int g : parabolic_generator_set(sub))
      if (!up_gens.count(g)) throw DomainError("induce_module: subalgebra not contained");
  }
  const std::vector<WElem> reps = relative_reps(up, sub, h.r());
  const int blocks = static_cast<int>(reps.size());
  HModule out;
  out.algebra = up;
  out.n = m.n;
  out.r = m.r;
  out.dim = blocks * m.dim;
  out.spec = m.spec;
  std::map<WElem, int> rep_index;
  for (int i = 0; i < blocks; ++i) rep_index.emplace(reps[i], i);
  for (int g : parabolic_generator_set(up)) {
    QMatrix mat(out.dim, out.dim);
    for (int vi = 0; vi < blocks; ++vi) {
      const auto expansion = h.coset_expand(h.mul(h.gen(g), h.t_basis(reps[vi])), up, sub);
      for (int j = 0; j < m.dim; ++j) {
        SparseVec col;
        for (const auto& [v2, c_part] : expansion) {
          const int block = rep_index.at(v2);
          for (const auto& [i, val] : apply_elem(h, m, c_part, sparse_unit(j)))
            col.push_back({block * m.dim + i, val});
        }
        std::sort(col.begin(), col.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        mat.set_col(vi * m.dim + j, std::move(col));
      }
    }
    out.gen_action.emplace(g, std::move(mat));
  }
  if (!module_satisfies_relations(out))
    throw InternalError("induce_module: relations fail at the specialization");
  return out;
}

HModule twist_module(const HModule& m, const DoubleCosetDatum& d) {
  HModule out;
  out.algebra = d.pi_index();
  out.n = m.n;
  out.r = m.r;
  out.dim = m.dim;
  out.spec = m.spec;
  for (int g : parabolic_generator_set(out.algebra)) {
    const int target = datum_psi(d, g);
    auto it = m.gen_action.find(target);
    if (it == m.gen_action.end())
      throw DomainError("twist_module: psi image outside the module's algebra");
    out.gen_action.emplace(g, it->second);
  }
  return out;
}

MackeyFunctorReport mackey_functor_check(const RationalHecke& h, const HModule& m,
                                         const ParabolicIndex& a) {
  const ParabolicIndex b = m.algebra;
  const ParabolicIndex full = full_index(h.n());
  MackeyFunctorReport report;

  const HModule ind_full = induce_module(h, m, full);
  const HModule lhs = restrict_module(ind_full, a);
  const std::vector<WElem> reps_b = relative_reps(full, b, h.r());
  std::map<WElem, int> reps_b_index;
  for (int i = 0; i < static_cast<int>(reps_b.size()); ++i) reps_b_index.emplace(reps_b[i], i);
  report.lhs_dim = lhs.dim;

  const std::vector<DoubleCosetDatum> data = double_coset_reps(a, b, h.r());
  struct Block {
    const DoubleCosetDatum* d;
    std::vector<WElem> reps;
    std::map<WElem, int> rep_index;
    HModule induced;
    int offset = 0;
  };
  std::vector<Block> blocks;
  int rhs_dim = 0;
  for (const auto& d : data) {
    Block blk;
    blk.d = &d;
    blk.reps = relative_reps(a, d.pi_index(), h.r());
    for (int i = 0; i < static_cast<int>(blk.reps.size()); ++i)
      blk.rep_index.emplace(blk.reps[i], i);
    const HModule twisted = twist_module(restrict_module(m, d.pi_sharp_index()), d);
    blk.induced = induce_module(h, twisted, a);
    blk.offset = rhs_dim;
    rhs_dim += blk.induced.dim;
    blocks.push_back(std::move(blk));
  }
  report.rhs_dim = rhs_dim;
  report.dims_match = (lhs.dim == rhs_dim);
  if (!report.dims_match) return report;

  // the intertwiner: multiplication T_{w1} T_u against the free basis of the
  // induced module on the left-hand side
  QMatrix lambda(lhs.dim, rhs_dim);
  for (const Block& blk : blocks) {
    for (int wi = 0; wi < static_cast<int>(blk.reps.size()); ++wi) {
      const auto product = h.mul(h.t_basis(blk.reps[wi]), h.t_basis(blk.d->u));
      const auto expansion = h.coset_expand(product, full, b);
      for (int j = 0; j < m.dim; ++j) {
        SparseVec col;
        for (const auto& [v, c_part] : expansion) {
          const int block_row = reps_b_index.at(v);
          for (const auto& [i, val] : apply_elem(h, m, c_part, sparse_unit(j)))
            col.push_back({block_row * m.dim + i, val});
        }
        std::sort(col.begin(), col.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        lambda.set_col(blk.offset + wi * m.dim + j, std::move(col));
      }
    }
  }

  // its inverse from the bimodule decomposition of each T_v
  QMatrix lambda_inv(rhs_dim, lhs.dim);
  for (int vi = 0; vi < static_cast<int>(reps_b.size()); ++vi) {
    const auto decomp = h.mackey_phi(h.t_basis(reps_b[vi]), a, b);
    for (int ui = 0; ui < static_cast<int>(decomp.size()); ++ui) {
      const Block& blk = blocks[ui];
      for (const auto& pair : decomp[ui].pairs) {
        const int wi = blk.rep_index.at(pair.w1);
        for (int j = 0; j < m.dim; ++j) {
          for (const auto& [i, val] : apply_elem(h, m, pair.y, sparse_unit(j))) {
            const Rational prev = lambda_inv.at(blk.offset + wi * m.dim + i, vi * m.dim + j);
            lambda_inv.set(blk.offset + wi * m.dim + i, vi * m.dim + j, prev + val);
          }
        }
      }
    }
  }

  const QMatrix id_lhs = QMatrix::identity(lhs.dim);
  const QMatrix id_rhs = QMatrix::identity(rhs_dim);
  report.bijective = (lambda * lambda_inv == id_lhs) && (lambda_inv * lambda == id_rhs);
  if (!report.bijective) return report;

  report.equivariant = true;
  for (int g : parabolic_generator_set(a)) {
    QMatrix rho_rhs(rhs_dim, rhs_dim);
    for (const Block& blk : blocks) {
      const QMatrix& action = blk.induced.gen_action.at(g);
      for (int j = 0; j < blk.induced.dim; ++j) {
        SparseVec col;
        for (const auto& [i, val] : action.col(j)) col.push_back({blk.offset + i, val});
        rho_rhs.set_col(blk.offset + j, std::move(col));
      }
    }
    if (!(lambda * rho_rhs == lhs.gen_action.at(g) * lambda)) {
      report.equivariant = false;
      break;
    }
  }
  return report;
}

}  // namespace cyclo
