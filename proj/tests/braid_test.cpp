#include "cyclo/braid.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>

namespace cyclo {
namespace {

BraidWord bw(int n, std::vector<int> letters) { return braid_word(n, std::move(letters)); }

// replays a trace step by step; each step must match one legal rewrite
bool replay_trace(const BraidWord& from, const BraidWord& to,
                  const std::vector<RewriteStep>& trace) {
  BraidWord cur = from;
  for (const RewriteStep& step : trace) {
    bool applied = false;
    for (const auto& [next, candidate] : braid_neighbors(cur)) {
      if (candidate.position == step.position && candidate.relation == step.relation) {
        // direction disambiguates which of the two patterns was present
        if (candidate.direction == step.direction ||
            candidate.relation == "comm") {
          cur = next;
          applied = true;
          break;
        }
      }
    }
    if (!applied) return false;
  }
  return cur == to;
}

TEST(Braid, GammaWordExamples) {
  EXPECT_EQ(gamma_word(3, 1).letters, (std::vector<int>{0}));
  EXPECT_EQ(gamma_word(3, 2).letters, (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(gamma_word(3, 3).letters, (std::vector<int>{2, 1, 0, 1, 2}));
  for (int i = 1; i <= 3; ++i) {
    EXPECT_EQ(gamma_word(3, i).length(), 2 * i - 1);
    EXPECT_EQ(word_image(gamma_word(3, i), 2), w_torus(3, 2, i));
  }
  EXPECT_THROW(gamma_word(3, 4), ConfigError);
}

TEST(Braid, OmegaWordExamples) {
  const int n = 2, r = 2;
  const ParabolicIndex a{1, Composition(std::vector<int>{1})};
  for (const auto& d : double_coset_reps(a, a, r)) {
    const BraidWord om = omega_word(d, n, r);
    EXPECT_EQ(word_image(om, r), d.u);
    if (d.u.is_identity()) EXPECT_TRUE(om.letters.empty());
    if (d.u.perm.is_identity() && d.u.colors == std::vector<int>{0, 1})
      EXPECT_EQ(om.letters, (std::vector<int>{1, 0, 1}));  // t_2
  }
}

TEST(Braid, OmegaImageForAllData) {
  for (int n = 2; n <= 3; ++n) {
    for (int r = 1; r <= 3; ++r) {
      for (const auto& a : all_parabolic_indices(n))
        for (const auto& b : all_parabolic_indices(n))
          for (const auto& d : double_coset_reps(a, b, r))
            EXPECT_EQ(word_image(omega_word(d, n, r), r), d.u);
    }
  }
}

TEST(Braid, EquivExamples) {
  EXPECT_TRUE(braid_equiv(bw(2, {0, 1, 0, 1}), bw(2, {1, 0, 1, 0})));
  EXPECT_TRUE(braid_equiv(bw(3, {0, 2}), bw(3, {2, 0})));
  EXPECT_FALSE(braid_equiv(bw(2, {0, 1}), bw(2, {1, 0})));
  EXPECT_FALSE(braid_equiv(bw(2, {0}), bw(2, {0, 0})));  // lengths differ
}

TEST(Braid, EquivTraceReplays) {
  const auto res = braid_equiv(bw(2, {0, 1, 0, 1}), bw(2, {1, 0, 1, 0}));
  ASSERT_TRUE(res);
  EXPECT_TRUE(replay_trace(bw(2, {0, 1, 0, 1}), bw(2, {1, 0, 1, 0}), res.trace));

  const auto res2 = braid_equiv(bw(3, {1, 2, 1, 0}), bw(3, {2, 1, 2, 0}));
  ASSERT_TRUE(res2);
  EXPECT_TRUE(replay_trace(bw(3, {1, 2, 1, 0}), bw(3, {2, 1, 2, 0}), res2.trace));
}

TEST(Braid, EquivIsEquivalenceOnSamples) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> letter(0, 2);
  std::vector<BraidWord> words;
  for (int i = 0; i < 12; ++i) {
    std::vector<int> letters(5);
    for (int& l : letters) l = letter(rng);
    words.push_back(bw(3, letters));
  }
  for (const auto& w : words) EXPECT_TRUE(braid_equiv(w, w));
  for (const auto& w1 : words) {
    for (const auto& w2 : words) {
      const auto lr = braid_equiv(w1, w2);
      const auto rl = braid_equiv(w2, w1);
      EXPECT_EQ(lr.status == EquivStatus::equivalent, rl.status == EquivStatus::equivalent);
      for (const auto& w3 : words) {
        if (braid_equiv(w1, w2) && braid_equiv(w2, w3)) EXPECT_TRUE(braid_equiv(w1, w3));
      }
    }
  }
}

TEST(Braid, ImageReversesConcatenation) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> letter(0, 2);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> l1(4), l2(3);
    for (int& l : l1) l = letter(rng);
    for (int& l : l2) l = letter(rng);
    const BraidWord w1 = bw(3, l1), w2 = bw(3, l2);
    EXPECT_EQ(word_image(braid_concat(w1, w2), 3),
              w_multiply(word_image(w2, 3), word_image(w1, 3)));
  }
}

TEST(Braid, ConjugationIdentitySmall) {
  // the computational content of the only-braid-relations statement at n = 2
  for (int r = 1; r <= 3; ++r) {
    for (const auto& a : all_parabolic_indices(2)) {
      for (const auto& b : all_parabolic_indices(2)) {
        for (const auto& d : double_coset_reps(a, b, r)) {
          const BraidWord om = omega_word(d, 2, r);
          for (const auto& [j, pj] : d.psi) {
            const auto res = braid_equiv(braid_concat(om, bw(2, {j})),
                                         braid_concat(bw(2, {pj}), om));
            EXPECT_EQ(res.status, EquivStatus::equivalent);
            EXPECT_TRUE(replay_trace(braid_concat(om, bw(2, {j})),
                                     braid_concat(bw(2, {pj}), om), res.trace));
          }
        }
      }
    }
  }
}

TEST(Braid, MatsumotoEquivalentReducedWords) {
  // any two reduced words of the same permutation are braid-equivalent
  for (const Perm& x : all_perms(3)) {
    const auto word = reduced_word(x);
    // brute-force all reduced words by search
    std::set<std::vector<int>> all_words;
    std::function<void(Perm, std::vector<int>&)> descend = [&](Perm cur,
                                                               std::vector<int>& acc) {
      if (cur.is_identity()) {
        std::vector<int> w(acc.rbegin(), acc.rend());
        all_words.insert(w);
        return;
      }
      for (int i = 1; i < 3; ++i) {
        if (cur(i) > cur(i + 1)) {
          acc.push_back(i);
          descend(cur * Perm::transposition(3, i), acc);
          acc.pop_back();
        }
      }
    };
    std::vector<int> acc;
    descend(x, acc);
    EXPECT_TRUE(all_words.count(word));
    for (const auto& other : all_words)
      EXPECT_TRUE(braid_equiv(bw(3, word), bw(3, other)));
  }
}

TEST(Braid, NodeCapReportsExhaustion) {
  // equivalent words more than one rewrite apart cannot be decided with a
  // one-node budget
  const BraidWord w1 = bw(2, {0, 1, 0, 1, 0, 1, 0, 1});
  const BraidWord w2 = bw(2, {1, 0, 1, 0, 1, 0, 1, 0});
  EXPECT_EQ(braid_equiv(w1, w2, 1).status, EquivStatus::resource_exhausted);
  EXPECT_EQ(braid_equiv(w1, w2).status, EquivStatus::equivalent);
}

}  // namespace
}  // namespace cyclo
