#include "c2zhu/weights.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace c2zhu;

namespace {

std::vector<GlWeight> gl_weights_up_to(int rank, int max_size) {
  std::vector<GlWeight> out;
  for (auto& p : partitions_in_box(rank, max_size))
    if (p.size() <= max_size) out.emplace_back(rank, std::move(p));
  return out;
}

std::set<Partition> as_set(const std::vector<Partition>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("partition normalization and validation") {
  CHECK(Partition{2, 1, 0, 0} == Partition{2, 1});
  CHECK(Partition{2, 1}.length() == 2);
  CHECK(Partition{3, 1, 1}.size() == 5);
  CHECK(Partition{}.empty());
  CHECK(Partition{1, 0} < Partition{1, 1});
  CHECK(Partition{1, 1} < Partition{2});
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(GlWeight(2, Partition{1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(SlWeight(3, Partition{1, 1, 1}), std::invalid_argument);
  CHECK(to_string(GlWeight(3, Partition{2, 1})) == "(2,1,0)");
  CHECK(to_string(SlWeight(3, Partition{})) == "(0,0)");
}

TEST_CASE("weyl_dim examples") {
  CHECK(weyl_dim(GlWeight(3, Partition{1})) == 3);
  CHECK(weyl_dim(GlWeight(3, Partition{})) == 1);
  // 27 GT patterns with top row (4,2,0)
  CHECK(oracle::count_gt_patterns({4, 2, 0}) == 27);
  CHECK(weyl_dim(GlWeight(3, Partition{4, 2})) == 27);
}

TEST_CASE("weyl_dim agrees with GT-pattern counting for rank <= 4, |λ| <= 8") {
  for (int rank = 1; rank <= 4; ++rank) {
    for (const auto& w : gl_weights_up_to(rank, 8)) {
      CAPTURE(to_string(w));
      CHECK(weyl_dim(w) == oracle::count_gt_patterns(w.parts.padded(rank)));
    }
  }
}

TEST_CASE("weyl_dim is exact beyond 64 bits") {
  std::vector<int> parts;
  for (int i = 19; i >= 0; --i) parts.push_back(5 * i);
  const GlWeight big(20, Partition(parts));
  const auto d = weyl_dim(big);
  CHECK(d > Integer(std::numeric_limits<std::uint64_t>::max()));
  CHECK(sl_dim(restrict_to_sl(big)) == d);
  CHECK(sl_dim(dual_sl(restrict_to_sl(big))) == d);
}

TEST_CASE("sl_dim examples") {
  for (int j = 0; j <= 6; ++j) CHECK(sl_dim(SlWeight(2, Partition{j})) == j + 1);
  CHECK(sl_dim(SlWeight(3, Partition{1, 0})) == 3);
  CHECK(oracle::count_gt_patterns({2, 1, 0}) == 8);
  CHECK(sl_dim(SlWeight(3, Partition{2, 1})) == 8);
}

TEST_CASE("enumerate_pk") {
  auto pk21 = enumerate_pk(2, 1);
  REQUIRE(pk21.size() == 2);
  CHECK(pk21[0] == SlWeight(2, Partition{}));
  CHECK(pk21[1] == SlWeight(2, Partition{1}));

  const std::vector<SlWeight> expected31{SlWeight(3, Partition{0, 0}), SlWeight(3, Partition{1, 0}),
                                         SlWeight(3, Partition{1, 1})};
  CHECK(enumerate_pk(3, 1) == expected31);
  CHECK(enumerate_pk(3, 2).size() == 6);

  for (int n = 2; n <= 6; ++n) {
    for (int k = 0; k <= 6; ++k) {
      const auto pk = enumerate_pk(n, k);
      CHECK(Integer(pk.size()) == binomial(n - 1 + k, n - 1));
      CHECK(std::is_sorted(pk.begin(), pk.end()));
      for (const auto& b : pk) CHECK(b.parts[0] <= k);
    }
  }
  CHECK_THROWS_AS(enumerate_pk(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_pk(3, -1), std::invalid_argument);
}

TEST_CASE("restrict_to_sl") {
  for (int n = 2; n <= 5; ++n) {
    const GlWeight det_power(n, Partition(std::vector<int>(static_cast<std::size_t>(n), 3)));
    CHECK(restrict_to_sl(det_power) == SlWeight(n, Partition{}));
  }
  CHECK(restrict_to_sl(GlWeight(3, Partition{2, 1})) == SlWeight(3, Partition{2, 1}));
  const GlWeight w(3, Partition{4, 2});
  CHECK(restrict_to_sl(w) == SlWeight(3, Partition{4, 2}));
  CHECK(sl_dim(restrict_to_sl(w)) == 27);
  for (int rank = 2; rank <= 4; ++rank)
    for (const auto& g : gl_weights_up_to(rank, 8)) CHECK(sl_dim(restrict_to_sl(g)) == weyl_dim(g));
}

TEST_CASE("dual_sl") {
  for (int j = 0; j <= 5; ++j) CHECK(dual_sl(SlWeight(2, Partition{j})) == SlWeight(2, Partition{j}));
  CHECK(dual_sl(SlWeight(3, Partition{1, 0})) == SlWeight(3, Partition{1, 1}));
  CHECK(dual_sl(SlWeight(3, Partition{2, 1})) == SlWeight(3, Partition{2, 1}));

  // Character symmetry: weights of V(β)* are the negatives of those of V(β),
  // modulo the all-ones vector.
  auto normalized = [](const oracle::Weights& ws, bool negate) {
    std::map<std::vector<int>, long> out;
    for (const auto& [w, m] : ws) {
      std::vector<int> v(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) v[i] = (negate ? -w[i] : w[i]) - (negate ? -w.back() : w.back());
      out[v] += m;
    }
    return out;
  };
  for (const auto& beta : enumerate_pk(4, 3)) {
    const auto dual = dual_sl(beta);
    CHECK(normalized(oracle::gt_pattern_weights(beta.parts.padded(4)), true) ==
          normalized(oracle::gt_pattern_weights(dual.parts.padded(4)), false));
  }

  for (int n = 2; n <= 5; ++n) {
    for (int k = 0; k <= 5; ++k) {
      for (const auto& b : enumerate_pk(n, k)) {
        CHECK(dual_sl(dual_sl(b)) == b);
        CHECK(sl_dim(dual_sl(b)) == sl_dim(b));
      }
    }
  }
}

TEST_CASE("gt_branch") {
  const std::vector<GlWeight> expected20{GlWeight(1, Partition{0}), GlWeight(1, Partition{1}),
                                         GlWeight(1, Partition{2})};
  CHECK(gt_branch(GlWeight(2, Partition{2, 0})) == expected20);
  const std::vector<GlWeight> expected11{GlWeight(1, Partition{1})};
  CHECK(gt_branch(GlWeight(2, Partition{1, 1})) == expected11);

  const auto b210 = gt_branch(GlWeight(3, Partition{2, 1}));
  CHECK(b210.size() == 4);
  Integer total = 0;
  for (const auto& mu : b210) total += weyl_dim(mu);
  CHECK(total == 8);

  CHECK_THROWS_AS(gt_branch(GlWeight(1, Partition{2})), std::invalid_argument);
}

TEST_CASE("gt_branch dimension sum rule for n <= 5, |λ| <= 8") {
  for (int rank = 2; rank <= 5; ++rank) {
    for (const auto& w : gl_weights_up_to(rank, 8)) {
      Integer total = 0;
      for (const auto& mu : gt_branch(w)) total += weyl_dim(mu);
      CAPTURE(to_string(w));
      CHECK(total == weyl_dim(w));
    }
  }
}

TEST_CASE("interlace_up") {
  CHECK(as_set(interlace_up(Partition{}, 1, 1)) == std::set<Partition>{Partition{}, Partition{1}});
  CHECK(as_set(interlace_up(Partition{1}, 1, 1)) == std::set<Partition>{Partition{1}});
  CHECK(as_set(interlace_up(Partition{1, 0}, 2, 2)) ==
        std::set<Partition>{Partition{1, 0}, Partition{2, 0}, Partition{1, 1}, Partition{2, 1}});
  const auto ups = interlace_up(Partition{1, 0}, 2, 2);
  CHECK(std::is_sorted(ups.begin(), ups.end()));
  CHECK(interlace_up(Partition{3}, 1, 2).empty());

  // Each μ satisfies the interlacing inequalities, and every admissible μ appears.
  for (const auto& lam : partitions_in_box(3, 3)) {
    const auto ups3 = interlace_up(lam, 3, 3);
    std::size_t brute = 0;
    for (const auto& mu : partitions_in_box(3, 3)) {
      bool ok = true;
      for (int i = 0; i < 3; ++i) {
        if (mu[i] < lam[i]) ok = false;
        if (i > 0 && mu[i] > lam[i - 1]) ok = false;
      }
      if (ok) ++brute;
    }
    CHECK(ups3.size() == brute);
  }
}

TEST_CASE("partitions_in_box") {
  CHECK(partitions_in_box(2, 2, 3) == std::vector<Partition>{Partition{2, 1}});
  CHECK(partitions_in_box(3, 1, 2) == std::vector<Partition>{Partition{1, 1}});
  CHECK(partitions_in_box(3, 1, 4).empty());
  CHECK(partitions_in_box(2, 3).size() == 10);
}
