#pragma once

#include "c2zhu/numeric.hpp"

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace c2zhu {

/// Weakly decreasing tuple of nonnegative integers. Trailing zeros are
/// stripped on construction, so (2,1,0) and (2,1) compare equal.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Number of nonzero parts.
  int length() const { return static_cast<int>(parts_.size()); }
  /// i-th part (0-based); zero past the length.
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }
  /// |λ|
  int size() const;
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }
  /// Parts padded with zeros to `len` entries (len >= length()).
  std::vector<int> padded(int len) const;

  // Lexicographic on the stripped parts, which agrees with comparing any
  // common zero padding.
  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Polynomial highest weight of an irreducible gl_n-module.
struct GlWeight {
  int rank = 1;
  Partition parts;

  GlWeight() = default;
  GlWeight(int rank, Partition parts);

  auto operator<=>(const GlWeight&) const = default;
  bool operator==(const GlWeight&) const = default;
};

/// Highest weight of an irreducible sl_n-module, at most n-1 parts.
struct SlWeight {
  int rank = 2;
  Partition parts;

  SlWeight() = default;
  SlWeight(int rank, Partition parts);

  auto operator<=>(const SlWeight&) const = default;
  bool operator==(const SlWeight&) const = default;
};

std::string to_string(const Partition& p);
/// Parts padded to the rank (gl) or rank-1 (sl), e.g. "(2,1,0)".
std::string to_string(const GlWeight& w);
std::string to_string(const SlWeight& w);

/// Weyl dimension formula for gl_n.
Integer weyl_dim(const GlWeight& w);
Integer sl_dim(const SlWeight& b);

/// Level-k integrable weights of sl_n (β₁ <= k), in lexicographic order.
std::vector<SlWeight> enumerate_pk(int n, int k);

/// (λ₁-λ_n, ..., λ_{n-1}-λ_n)
SlWeight restrict_to_sl(const GlWeight& w);
/// Partition representative (β, 0) of an sl_n weight.
GlWeight lift_to_gl(const SlWeight& b);
/// Highest weight of the contragredient module.
SlWeight dual_sl(const SlWeight& b);

/// Gelfand-Tsetlin branching gl_n -> gl_{n-1}: every μ with
/// λ₁ >= μ₁ >= λ₂ >= ... >= μ_{n-1} >= λ_n, lexicographic order.
std::vector<GlWeight> gt_branch(const GlWeight& w);

/// Every μ with `length` parts satisfying μ₁ >= λ₁ >= μ₂ >= ... >= μ_len >= λ_len
/// and μ₁ <= cap.
std::vector<Partition> interlace_up(const Partition& lambda, int length, int cap);

/// Partitions with at most `max_parts` parts, each part <= `max_part`,
/// optionally of fixed size. Lexicographic order.
std::vector<Partition> partitions_in_box(int max_parts, int max_part,
                                         std::optional<int> size = std::nullopt);

}  // namespace c2zhu
