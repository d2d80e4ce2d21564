#include "cyclo/serial.hpp"

#include <sstream>

namespace cyclo {

Json to_json(const Perm& x) { return Json(x.images()); }

Json to_json(const Composition& mu) { return Json(mu.parts()); }

Json to_json(const WElem& w) {
  Json j;
  j["perm"] = to_json(w.perm);
  j["colors"] = w.colors;
  return j;
}

Json to_json(const ParabolicIndex& p) {
  Json j;
  j["l"] = p.l;
  j["mu"] = to_json(p.mu);
  return j;
}

Json to_json(const DoubleCosetDatum& d) {
  Json j;
  j["u"] = to_json(d.u);
  j["x"] = to_json(d.x);
  j["I_x"] = d.i_of_x;
  j["c"] = d.c;
  j["k"] = d.k;
  Json gamma;
  gamma["s_indices"] = d.gamma_s;
  gamma["t_count"] = d.gamma_t_count;
  j["gamma"] = gamma;
  j["pi"] = to_json(d.pi);
  j["pi_sharp"] = to_json(d.pi_sharp);
  Json psi = Json::object();
  for (const auto& [from, to] : d.psi) psi[std::to_string(from)] = to;
  j["psi"] = psi;
  return j;
}

Json to_json(const BraidWord& w) { return Json(w.letters); }

Json to_json(const std::vector<RewriteStep>& trace) {
  Json out = Json::array();
  for (const RewriteStep& s : trace) {
    Json j;
    j["position"] = s.position;
    j["relation"] = s.relation;
    j["direction"] = s.direction;
    out.push_back(j);
  }
  return out;
}

Json to_json(const Root& root) { return Json(root_str(root)); }

std::string rational_str(const Rational& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

Json to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rational_str(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const HModule& m) {
  Json j;
  j["algebra"] = to_json(m.algebra);
  j["n"] = m.n;
  j["r"] = m.r;
  j["dim"] = m.dim;
  Json spec;
  spec["q"] = rational_str(m.spec.q);
  Json qs = Json::array();
  for (const Rational& v : m.spec.q_big) qs.push_back(rational_str(v));
  spec["Q"] = qs;
  j["spec"] = spec;
  Json gens = Json::object();
  for (const auto& [g, mat] : m.gen_action) gens[std::to_string(g)] = to_json(mat);
  j["generators"] = gens;
  return j;
}

Json to_json(const GenericHecke& h, const GenericHecke::Elem& e) {
  (void)h;
  Json out = Json::array();
  for (const auto& [w, c] : e) {
    Json j;
    j["element"] = to_json(w);
    j["coeff"] = c.str();
    out.push_back(j);
  }
  return out;
}

Json to_json(const RationalHecke& h, const RationalHecke::Elem& e) {
  (void)h;
  Json out = Json::array();
  for (const auto& [w, c] : e) {
    Json j;
    j["element"] = to_json(w);
    j["coeff"] = rational_str(c);
    out.push_back(j);
  }
  return out;
}

ParabolicIndex parse_parabolic(const std::string& text, int n) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ConfigError("expected 'l:[m1,m2,...]'");
  int l = 0;
  try {
    l = std::stoi(text.substr(0, colon));
  } catch (const std::exception&) {
    throw ConfigError("invalid torus rank in '" + text + "'");
  }
  std::string rest = text.substr(colon + 1);
  if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']')
    throw ConfigError("expected 'l:[m1,m2,...]'");
  rest = rest.substr(1, rest.size() - 2);
  std::vector<int> parts;
  std::stringstream ss(rest);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      parts.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ConfigError("invalid composition part in '" + text + "'");
    }
  }
  ParabolicIndex p{l, Composition(parts)};
  if (p.l < 0 || p.n() != n)
    throw ConfigError("parabolic index '" + text + "' does not sum to n");
  return p;
}

std::string parabolic_str(const ParabolicIndex& p) {
  std::string s = std::to_string(p.l) + ":[";
  for (size_t i = 0; i < p.mu.parts().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.mu.parts()[i]);
  }
  return s + "]";
}

}  // namespace cyclo
