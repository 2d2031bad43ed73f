#pragma once

#include "c2zhu/numeric.hpp"
#include "c2zhu/weights.hpp"

#include <map>
#include <vector>

namespace c2zhu {

/// Element of the Grothendieck group of finite-dimensional sl_n-modules:
/// signed multiplicities over irreducible highest weights. Zero entries are
/// never stored.
class IrrDecomposition {
 public:
  explicit IrrDecomposition(int rank);

  int rank() const { return rank_; }
  const std::map<SlWeight, Integer>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  Integer multiplicity(const SlWeight& w) const;

  void add(const SlWeight& w, const Integer& mult);
  IrrDecomposition& operator+=(const IrrDecomposition& other);
  IrrDecomposition& operator-=(const IrrDecomposition& other);
  IrrDecomposition& scale(const Integer& factor);

  /// Σ mult · dim V(β); any integer for virtual modules.
  Integer virtual_dim() const;
  bool nonnegative() const;

  bool operator==(const IrrDecomposition&) const = default;

 private:
  void check_rank(int r) const;

  int rank_;
  std::map<SlWeight, Integer> entries_;
};

/// Formal character of an sl_n-module. Weights are epsilon coordinates
/// modulo the all-ones vector, normalized so the n-th coordinate is zero and
/// stored as the remaining n-1 coordinates.
class Character {
 public:
  using Weight = std::vector<int>;

  explicit Character(int rank);

  int rank() const { return rank_; }
  const std::map<Weight, Integer>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  Integer coefficient(const Weight& w) const;

  void add(const Weight& w, const Integer& mult);
  /// Total coefficient mass.
  Integer mass() const;

  bool operator==(const Character&) const = default;

 private:
  int rank_;
  std::map<Weight, Integer> terms_;
};

/// Drop the all-ones component of a length-n epsilon weight.
Character::Weight normalize_weight(const std::vector<int>& eps);

/// Weight multiplicities of the gl_n-module V(λ) in raw epsilon coordinates,
/// obtained by Gelfand-Tsetlin pattern enumeration.
std::map<std::vector<int>, Integer> gl_weight_multiplicities(const GlWeight& w);

/// Horizontal strips: ν ⊇ λ with |ν/λ| = j, at most one box per column,
/// at most n rows. Lexicographic order.
std::vector<Partition> pieri_row(const Partition& lambda, int j, int n);

/// Littlewood-Richardson coefficients c^ν_{λμ} restricted to ν with at most
/// n rows, by enumeration of LR skew tableaux.
std::map<Partition, Integer> lr_coefficients(const Partition& lambda, const Partition& mu, int n);

/// V(a) ⊗ V(b) as an sl_n-module.
IrrDecomposition tensor_sl(const SlWeight& a, const SlWeight& b);

/// Throws std::invalid_argument on a negative multiplicity.
Character char_of(const IrrDecomposition& d);

/// Inverse of char_of by repeated removal of a dominance-maximal weight
/// (lexicographically largest among ties). Throws NotACharacter when a
/// coefficient goes negative or a nonzero remainder has no dominant weight.
IrrDecomposition char_decompose(const Character& c);

/// a >= b in dominance order (a - b a nonnegative sum of positive roots).
bool dominates(const Character::Weight& a, const Character::Weight& b);

}  // namespace c2zhu
