#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclo/wgroup.hpp"

namespace cyclo {

// A positive word in the braid group generators sigma_0 .. sigma_{n-1}.
struct BraidWord {
  std::vector<int> letters;
  int n = 1;  // number of generators

  int length() const { return static_cast<int>(letters.size()); }
  friend auto operator<=>(const BraidWord& a, const BraidWord& b) = default;
};

BraidWord braid_word(int n, std::vector<int> letters);
BraidWord braid_concat(const BraidWord& a, const BraidWord& b);

// gamma_i = sigma_{i-1} ... sigma_1 sigma_0 sigma_1 ... sigma_{i-1},
// a word of length 2i - 1 whose image in W(n,r) is t_i.
BraidWord gamma_word(int n, int i);

// The word (prod_{i in I(x)} gamma_i^{a_i}) sigma_{j_l} ... sigma_{j_1} for a
// representative u with reduced permutation part x = s_{j_1} ... s_{j_l};
// its image in W(n,r) is u.
BraidWord omega_word(const DoubleCosetDatum& d, int n, int r);

// Image in W(n,r).  Words map to the group through the opposite orientation,
// so letters are multiplied right to left: image([w_1..w_k]) = s_{w_k} ... s_{w_1}
// and image(a ++ b) = image(b) * image(a).
WElem word_image(const BraidWord& w, int r);

// One rewrite step in a trace: the relation applied, at which position, and
// in which direction it was read.
struct RewriteStep {
  int position = 0;
  std::string relation;   // "comm", "braid", "braid0"
  std::string direction;  // "fwd" or "bwd"
};

enum class EquivStatus { equivalent, inequivalent, resource_exhausted };

struct EquivResult {
  EquivStatus status = EquivStatus::inequivalent;
  std::vector<RewriteStep> trace;  // from w1 to w2 when equivalent

  explicit operator bool() const { return status == EquivStatus::equivalent; }
};

inline constexpr std::size_t kDefaultNodeCap = 5'000'000;

// Decides whether w2 lies in the closure of w1 under the length-preserving
// relations (commutation, the degree-3 braid relation for adjacent sigma_i
// with i >= 1, and the degree-4 relation between sigma_0 and sigma_1),
// applied at every position in both directions.  Breadth-first with a
// visited set, so a returned trace is shortest; exceeding node_cap yields
// resource_exhausted, never a wrong answer.
EquivResult braid_equiv(const BraidWord& w1, const BraidWord& w2,
                        std::size_t node_cap = kDefaultNodeCap);

// All words one rewrite step away from w.
std::vector<std::pair<BraidWord, RewriteStep>> braid_neighbors(const BraidWord& w);

}  // namespace cyclo
