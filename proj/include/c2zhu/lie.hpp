#pragma once

#include "c2zhu/numeric.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace c2zhu {

/// Sparse vector over the basis: (basis index, coefficient), sorted by index.
using LieVector = std::vector<std::pair<int, Rational>>;
/// Epsilon coordinates, length n.
using EpsWeight = std::vector<int>;

/// sl_n with the basis E_ab (a != b, in lexicographic (a,b) order) followed
/// by H_i = E_ii - E_{i+1,i+1}, i = 1..n-1. The bracket table is computed
/// from matrix-unit commutators; antisymmetry, the Jacobi identity and weight
/// additivity are verified on construction (std::logic_error on failure).
class LieBasis {
 public:
  explicit LieBasis(int n);

  int rank() const { return n_; }
  int dim() const { return static_cast<int>(labels_.size()); }

  /// Index of E_ab, 1-based matrix indices, a != b.
  int e_index(int a, int b) const;
  /// Index of H_i, 1 <= i <= n-1.
  int h_index(int i) const;
  /// e_θ = E_{1,n}
  int highest_root_index() const { return e_index(1, n_); }

  const EpsWeight& weight(int idx) const { return weights_.at(idx); }
  const std::string& label(int idx) const { return labels_.at(idx); }
  const LieVector& bracket(int x, int y) const { return table_.at(x * dim() + y); }

 private:
  using Matrix = std::map<std::pair<int, int>, Rational>;

  Matrix to_matrix(int idx) const;
  LieVector from_matrix(const Matrix& m) const;
  void verify() const;

  int n_;
  std::vector<std::string> labels_;
  std::vector<EpsWeight> weights_;
  std::vector<std::pair<int, int>> units_;  // (a,b) 0-based for E_ab; (i,i) marks H_{i+1}
  std::vector<LieVector> table_;
};

/// Exponent vector over the LieBasis.
using Monomial = std::vector<std::uint16_t>;

/// Homogeneous element of S(sl_n) with exact rational coefficients.
/// Zero coefficients are never stored; the zero polynomial keeps its degree.
class SymPoly {
 public:
  SymPoly(int nvars, int degree);
  /// x_idx^power
  static SymPoly power(int nvars, int idx, int exponent);
  static SymPoly monomial(Monomial m, Rational coeff = 1);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rational& c);
  SymPoly& operator+=(const SymPoly& other);
  SymPoly& operator-=(const SymPoly& other);
  SymPoly operator*(const SymPoly& other) const;
  SymPoly scaled(const Rational& c) const;

  bool operator==(const SymPoly&) const = default;

 private:
  int nvars_;
  int degree_;
  std::map<Monomial, Rational> terms_;
};

int monomial_degree(const Monomial& m);
EpsWeight monomial_weight(const LieBasis& basis, const Monomial& m);
/// Common weight of all terms; nullopt for zero or non-homogeneous input.
std::optional<EpsWeight> poly_weight(const LieBasis& basis, const SymPoly& p);

/// ad_X extended to S^m(sl_n) as a derivation.
SymPoly adjoint_on_sym(const LieBasis& basis, int x, const SymPoly& p);

/// All monomials of the given degree in `nvars` variables, lexicographic.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

std::string to_string(const LieBasis& basis, const SymPoly& p);

}  // namespace c2zhu
