#include "cyclo/laurent.hpp"

#include <cctype>
#include <sstream>

namespace cyclo {

LaurentPoly::LaurentPoly(Ring ring, const Integer& constant) : ring_(ring) {
  if (constant != 0) {
    terms_.emplace(Monomial{0, std::vector<int>(ring.r, 0)}, constant);
  }
}

LaurentPoly LaurentPoly::q_power(Ring ring, int e) {
  LaurentPoly p(ring);
  p.terms_.emplace(Monomial{e, std::vector<int>(ring.r, 0)}, 1);
  return p;
}

LaurentPoly LaurentPoly::q_param(Ring ring, int i) {
  if (i < 1 || i > ring.r) throw ConfigError("Q index out of range");
  LaurentPoly p(ring);
  Monomial m{0, std::vector<int>(ring.r, 0)};
  m.q_big_exps[i - 1] = 1;
  p.terms_.emplace(m, 1);
  return p;
}

Integer LaurentPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const Integer& c) {
  if (static_cast<int>(m.q_big_exps.size()) != ring_.r)
    throw ConfigError("monomial arity does not match ring");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void LaurentPoly::check_same_ring(const LaurentPoly& o) const {
  if (!(ring_ == o.ring_)) throw ConfigError("polynomials over different rings");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same_ring(b);
  LaurentPoly out(a.ring_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m{ma.q_exp + mb.q_exp, ma.q_big_exps};
      for (int i = 0; i < a.ring_.r; ++i) m.q_big_exps[i] += mb.q_big_exps[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(ring_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Rational rational_power(const Rational& base, int e) {
  if (e == 0) return Rational(1);
  Rational b = base;
  if (e < 0) {
    if (b == 0) throw DomainError("inverting zero");
    b = 1 / b;
    e = -e;
  }
  Rational out(1);
  for (int i = 0; i < e; ++i) out *= b;
  return out;
}

Rational LaurentPoly::specialize(const Rational& q_val,
                                 const std::vector<Rational>& q_big_vals) const {
  if (q_val == 0) throw DomainError("q must be invertible: q_val = 0");
  if (static_cast<int>(q_big_vals.size()) != ring_.r)
    throw ConfigError("wrong number of Q values");
  Rational qv = q_val;
  qv.canonicalize();
  std::vector<Rational> qs = q_big_vals;
  for (Rational& v : qs) v.canonicalize();
  Rational out(0);
  for (const auto& [m, c] : terms_) {
    Rational t(c);
    t *= rational_power(qv, m.q_exp);
    for (int i = 0; i < ring_.r; ++i) t *= rational_power(qs[i], m.q_big_exps[i]);
    out += t;
  }
  return out;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Integer ac = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::vector<std::string> factors;
    if (m.q_exp != 0) {
      factors.push_back(m.q_exp == 1 ? "q" : "q^" + std::to_string(m.q_exp));
    }
    for (int i = 0; i < ring_.r; ++i) {
      int e = m.q_big_exps[i];
      if (e == 0) continue;
      std::string f = "Q" + std::to_string(i + 1);
      if (e != 1) f += "^" + std::to_string(e);
      factors.push_back(f);
    }
    if (factors.empty()) {
      os << ac.get_str();
    } else {
      if (ac != 1) os << ac.get_str() << "*";
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i) os << "*";
        os << factors[i];
      }
    }
  }
  return os.str();
}

namespace {

struct Parser {
  Ring ring;
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  int parse_int() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw DomainError("expected integer at position " + std::to_string(start));
    return std::stoi(s.substr(start, pos - start));
  }

  Integer parse_bigint() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw DomainError("expected integer at position " + std::to_string(start));
    return Integer(s.substr(start, pos - start));
  }

  // One product of factors: [int] (* factor)* where factor = q[^e] | Qi[^e].
  void parse_term(LaurentPoly& out, bool negate) {
    Integer coeff = 1;
    Monomial m{0, std::vector<int>(ring.r, 0)};
    bool expect_factor = true;
    bool any = false;
    while (expect_factor) {
      skip_ws();
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        coeff *= parse_bigint();
      } else if (pos < s.size() && s[pos] == 'q') {
        ++pos;
        int e = eat('^') ? parse_int() : 1;
        m.q_exp += e;
      } else if (pos < s.size() && s[pos] == 'Q') {
        ++pos;
        int idx = parse_int();
        if (idx < 1 || idx > ring.r) throw DomainError("Q index out of range in text");
        int e = eat('^') ? parse_int() : 1;
        if (e < 0) throw DomainError("negative Q exponent");
        m.q_big_exps[idx - 1] += e;
      } else {
        throw DomainError("unexpected character in polynomial text");
      }
      any = true;
      expect_factor = eat('*');
    }
    if (!any) throw DomainError("empty term");
    out.add_term(m, negate ? -coeff : coeff);
  }

  LaurentPoly parse() {
    LaurentPoly out(ring);
    skip_ws();
    if (pos == s.size()) throw DomainError("empty polynomial text");
    if (s == "0") return out;
    bool negate = eat('-');
    parse_term(out, negate);
    for (;;) {
      skip_ws();
      if (pos == s.size()) break;
      if (eat('+')) {
        parse_term(out, false);
      } else if (eat('-')) {
        parse_term(out, true);
      } else {
        throw DomainError("expected '+' or '-' in polynomial text");
      }
    }
    return out;
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(Ring ring, const std::string& text) {
  Parser p{ring, text};
  return p.parse();
}

LaurentPoly elementary_symmetric(Ring ring, int k) {
  if (k < 0 || k > ring.r) throw ConfigError("elementary symmetric index out of range");
  // prod_i (X + Q_i), coefficient extraction via incremental convolution
  std::vector<LaurentPoly> e(ring.r + 1, LaurentPoly::zero(ring));
  e[0] = LaurentPoly::one(ring);
  for (int i = 1; i <= ring.r; ++i) {
    LaurentPoly qi = LaurentPoly::q_param(ring, i);
    for (int j = std::min(i, ring.r); j >= 1; --j) {
      e[j] += e[j - 1] * qi;
    }
  }
  return e[k];
}

}  // namespace cyclo
