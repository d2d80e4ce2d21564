#include "cyclo/braid.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace cyclo {

BraidWord braid_word(int n, std::vector<int> letters) {
  for (int l : letters)
    if (l < 0 || l >= n) throw ConfigError("braid letter out of range");
  return BraidWord{std::move(letters), n};
}

BraidWord braid_concat(const BraidWord& a, const BraidWord& b) {
  if (a.n != b.n) throw ConfigError("braid word alphabet mismatch");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord gamma_word(int n, int i) {
  if (i < 1 || i > n) throw ConfigError("gamma index out of range");
  std::vector<int> letters;
  for (int j = i - 1; j >= 0; --j) letters.push_back(j);
  for (int j = 1; j <= i - 1; ++j) letters.push_back(j);
  return BraidWord{std::move(letters), n};
}

BraidWord omega_word(const DoubleCosetDatum& d, int n, int r) {
  BraidWord out{{}, n};
  for (int i : d.i_of_x) {
    const int a = d.u.colors[i - 1];
    const BraidWord g = gamma_word(n, i);
    for (int rep = 0; rep < a; ++rep) out = braid_concat(out, g);
  }
  std::vector<int> word = reduced_word(d.x);
  std::reverse(word.begin(), word.end());
  out.letters.insert(out.letters.end(), word.begin(), word.end());
  (void)r;
  return out;
}

WElem word_image(const BraidWord& w, int r) {
  WElem out = w_identity(w.n, r);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out = w_multiply(out, w_generator(w.n, r, *it));
  return out;
}

std::vector<std::pair<BraidWord, RewriteStep>> braid_neighbors(const BraidWord& w) {
  std::vector<std::pair<BraidWord, RewriteStep>> out;
  const auto& v = w.letters;
  const int len = w.length();
  for (int p = 0; p + 1 < len; ++p) {
    const int a = v[p], b = v[p + 1];
    if (std::abs(a - b) > 1) {
      BraidWord nw = w;
      std::swap(nw.letters[p], nw.letters[p + 1]);
      out.push_back({std::move(nw), RewriteStep{p, "comm", a < b ? "fwd" : "bwd"}});
    }
  }
  for (int p = 0; p + 2 < len; ++p) {
    const int a = v[p], b = v[p + 1], c = v[p + 2];
    if (a >= 1 && b >= 1 && a == c && std::abs(a - b) == 1) {
      BraidWord nw = w;
      nw.letters[p] = b;
      nw.letters[p + 1] = a;
      nw.letters[p + 2] = b;
      out.push_back({std::move(nw), RewriteStep{p, "braid", a < b ? "fwd" : "bwd"}});
    }
  }
  for (int p = 0; p + 3 < len; ++p) {
    const int a = v[p];
    if ((a == 0 || a == 1) && v[p + 1] == 1 - a && v[p + 2] == a && v[p + 3] == 1 - a) {
      BraidWord nw = w;
      nw.letters[p] = 1 - a;
      nw.letters[p + 1] = a;
      nw.letters[p + 2] = 1 - a;
      nw.letters[p + 3] = a;
      out.push_back({std::move(nw), RewriteStep{p, "braid0", a == 0 ? "fwd" : "bwd"}});
    }
  }
  return out;
}

namespace {

std::string encode(const std::vector<int>& letters) {
  std::string s;
  s.reserve(letters.size());
  for (int l : letters) s.push_back(static_cast<char>(l));
  return s;
}

}  // namespace

EquivResult braid_equiv(const BraidWord& w1, const BraidWord& w2, std::size_t node_cap) {
  if (w1.n != w2.n) throw ConfigError("braid word alphabet mismatch");
  if (w1.length() != w2.length()) return {EquivStatus::inequivalent, {}};
  if (w1 == w2) return {EquivStatus::equivalent, {}};

  // Bidirectional breadth-first search over the rewrite graph.  Every
  // relation is its own inverse as an unordered rewrite, so the graph is
  // undirected and meeting in the middle decides closure membership.
  struct Parent {
    std::string from;
    RewriteStep step;
    int side;  // 0 = reached from w1, 1 = reached from w2
  };
  std::unordered_map<std::string, Parent> seen;
  const std::string k1 = encode(w1.letters), k2 = encode(w2.letters);
  seen.emplace(k1, Parent{"", {}, 0});
  seen.emplace(k2, Parent{"", {}, 1});
  std::deque<BraidWord> frontier[2];
  frontier[0].push_back(w1);
  frontier[1].push_back(w2);

  auto build_trace = [&](const std::string& meet_key, const BraidWord& meet,
                         const RewriteStep& bridge, int bridge_from_side,
                         const std::string& bridge_from_key) {
    // path from w1 side to the bridge word, then the bridging step, then the
    // reversed path down the w2 side
    std::vector<RewriteStep> fwd, bwd;
    auto walk = [&](std::string key, std::vector<RewriteStep>& steps) {
      while (true) {
        const Parent& p = seen.at(key);
        if (p.from.empty()) break;
        steps.push_back(p.step);
        key = p.from;
      }
    };
    std::vector<RewriteStep> trace;
    if (bridge_from_side == 0) {
      walk(bridge_from_key, fwd);
      std::reverse(fwd.begin(), fwd.end());
      trace = fwd;
      trace.push_back(bridge);
      walk(meet_key, bwd);
      (void)meet;
      for (auto& st : bwd) {
        st.direction = (st.direction == "fwd") ? "bwd" : "fwd";
        trace.push_back(st);
      }
    } else {
      walk(meet_key, fwd);
      std::reverse(fwd.begin(), fwd.end());
      trace = fwd;
      RewriteStep rb = bridge;
      rb.direction = (rb.direction == "fwd") ? "bwd" : "fwd";
      trace.push_back(rb);
      walk(bridge_from_key, bwd);
      for (auto& st : bwd) {
        st.direction = (st.direction == "fwd") ? "bwd" : "fwd";
        trace.push_back(st);
      }
    }
    return trace;
  };

  while (!frontier[0].empty() || !frontier[1].empty()) {
    const int side = (frontier[0].size() <= frontier[1].size() && !frontier[0].empty()) ||
                             frontier[1].empty()
                         ? 0
                         : 1;
    std::deque<BraidWord> next;
    for (const BraidWord& w : frontier[side]) {
      const std::string wkey = encode(w.letters);
      for (auto& [nw, step] : braid_neighbors(w)) {
        std::string key = encode(nw.letters);
        auto it = seen.find(key);
        if (it != seen.end()) {
          if (it->second.side != side) {
            auto trace = side == 0 ? build_trace(key, nw, step, 0, wkey)
                                   : build_trace(key, nw, step, 1, wkey);
            return {EquivStatus::equivalent, std::move(trace)};
          }
          continue;
        }
        if (seen.size() >= node_cap) return {EquivStatus::resource_exhausted, {}};
        seen.emplace(std::move(key), Parent{wkey, step, side});
        next.push_back(std::move(nw));
      }
    }
    frontier[side] = std::move(next);
    // one class fully explored without meeting the other: not equivalent
    if (frontier[side].empty()) return {EquivStatus::inequivalent, {}};
  }
  return {EquivStatus::inequivalent, {}};
}

}  // namespace cyclo
