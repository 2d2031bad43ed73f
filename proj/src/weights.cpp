#include "c2zhu/weights.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace c2zhu {

namespace {

std::string join_parts(const std::vector<int>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

// Cartesian product of inclusive integer ranges, first coordinate outermost,
// which yields lexicographic order.
void for_each_in_ranges(const std::vector<std::pair<int, int>>& ranges,
                        const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> current(ranges.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == ranges.size()) {
      visit(current);
      return;
    }
    for (int v = ranges[i].first; v <= ranges[i].second; ++v) {
      current[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(int len) const {
  if (len < length()) throw std::invalid_argument("cannot pad partition below its length");
  std::vector<int> out(parts_);
  out.resize(static_cast<std::size_t>(len), 0);
  return out;
}

GlWeight::GlWeight(int rank_, Partition parts_) : rank(rank_), parts(std::move(parts_)) {
  if (rank < 1) throw std::invalid_argument("gl rank must be positive");
  if (parts.length() > rank) throw std::invalid_argument("gl weight has more parts than the rank");
}

SlWeight::SlWeight(int rank_, Partition parts_) : rank(rank_), parts(std::move(parts_)) {
  if (rank < 2) throw std::invalid_argument("sl rank must be at least 2");
  if (parts.length() > rank - 1)
    throw std::invalid_argument("sl weight has more than rank-1 parts");
}

std::string to_string(const Partition& p) { return join_parts(p.parts()); }
std::string to_string(const GlWeight& w) { return join_parts(w.parts.padded(w.rank)); }
std::string to_string(const SlWeight& w) { return join_parts(w.parts.padded(w.rank - 1)); }

Integer weyl_dim(const GlWeight& w) {
  const auto lam = w.parts.padded(w.rank);
  Integer num = 1;
  Integer den = 1;
  for (int i = 0; i < w.rank; ++i) {
    for (int j = i + 1; j < w.rank; ++j) {
      num *= lam[i] - lam[j] + j - i;
      den *= j - i;
    }
  }
  return num / den;
}

Integer sl_dim(const SlWeight& b) { return weyl_dim(lift_to_gl(b)); }

std::vector<SlWeight> enumerate_pk(int n, int k) {
  if (n < 2 || k < 0) throw std::invalid_argument("enumerate_pk requires n >= 2, k >= 0");
  std::vector<SlWeight> out;
  for (auto& p : partitions_in_box(n - 1, k)) out.emplace_back(n, std::move(p));
  return out;
}

SlWeight restrict_to_sl(const GlWeight& w) {
  if (w.rank < 2) throw std::invalid_argument("restrict_to_sl requires rank >= 2");
  auto lam = w.parts.padded(w.rank);
  const int last = lam.back();
  lam.pop_back();
  for (int& x : lam) x -= last;
  return {w.rank, Partition(std::move(lam))};
}

GlWeight lift_to_gl(const SlWeight& b) { return {b.rank, b.parts}; }

SlWeight dual_sl(const SlWeight& b) {
  // Lift to (β₁..β_{n-1}, 0); dual is (β₁ - β_{n+1-i})_i.
  const auto beta = b.parts.padded(b.rank);
  std::vector<int> out(static_cast<std::size_t>(b.rank - 1));
  for (int i = 0; i < b.rank - 1; ++i) out[i] = beta[0] - beta[b.rank - 1 - i];
  return {b.rank, Partition(std::move(out))};
}

std::vector<GlWeight> gt_branch(const GlWeight& w) {
  if (w.rank < 2) throw std::invalid_argument("gt_branch requires rank >= 2");
  const auto lam = w.parts.padded(w.rank);
  std::vector<std::pair<int, int>> ranges;
  for (int i = 0; i + 1 < w.rank; ++i) ranges.emplace_back(lam[i + 1], lam[i]);
  std::vector<GlWeight> out;
  for_each_in_ranges(ranges, [&](const std::vector<int>& mu) {
    out.emplace_back(w.rank - 1, Partition(mu));
  });
  return out;
}

std::vector<Partition> interlace_up(const Partition& lambda, int length, int cap) {
  if (lambda.length() > length) throw std::invalid_argument("partition longer than stated length");
  if (length < 1) return {Partition{}};
  const auto lam = lambda.padded(length);
  if (lam[0] > cap) return {};
  std::vector<std::pair<int, int>> ranges;
  ranges.emplace_back(lam[0], cap);
  for (int i = 1; i < length; ++i) ranges.emplace_back(lam[i], lam[i - 1]);
  std::vector<Partition> out;
  for_each_in_ranges(ranges, [&](const std::vector<int>& mu) { out.emplace_back(mu); });
  return out;
}

std::vector<Partition> partitions_in_box(int max_parts, int max_part, std::optional<int> size) {
  std::vector<Partition> out;
  if (max_parts < 0 || max_part < 0) return out;
  if (size && (*size < 0 || *size > max_parts * max_part)) return out;
  // Enumerate padded tuples ascending; a tuple is visited only if weakly
  // decreasing, so output is lexicographic.
  std::vector<int> current(static_cast<std::size_t>(max_parts));
  std::function<void(int, int, int)> rec = [&](int i, int bound, int remaining) {
    if (i == max_parts) {
      if (!size || remaining == 0) out.emplace_back(current);
      return;
    }
    const int hi = size ? std::min(bound, remaining) : bound;
    for (int v = 0; v <= hi; ++v) {
      // remaining parts can hold at most v each
      if (size && remaining - v > v * (max_parts - i - 1)) continue;
      current[i] = v;
      rec(i + 1, v, size ? remaining - v : 0);
    }
  };
  rec(0, max_part, size.value_or(0));
  return out;
}

}  // namespace c2zhu
