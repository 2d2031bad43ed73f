#pragma once

#include "c2zhu/numeric.hpp"
#include "c2zhu/tensor.hpp"
#include "c2zhu/weights.hpp"

#include <map>
#include <string>
#include <vector>

namespace c2zhu {

/// Degree m -> dim A^m_[2](sl_n; k).
struct GradedDimTable {
  int n = 2;
  int k = 0;
  std::map<int, Integer> dims;

  /// Largest degree with a nonzero entry, or -1 for an empty table.
  int max_degree() const;
  Integer total() const;
  Integer at(int m) const;
};

/// One summand V(λ) ⊗ V(λ)* of C^m(k).
struct CSummand {
  GlWeight weight;
  Integer dim;  // dim V(λ)

  Integer squared_dim() const { return dim * dim; }
};

/// Σ_{β ∈ P_k^+} (dim V(β))².
Integer zhu_dim(int n, int k);
/// ⊕_{β ∈ P_k^+} V(β) ⊗ V(β)* under the diagonal sl_n.
IrrDecomposition zhu_decomposition_sl(int n, int k);

/// λ with at most n parts, λ₁ <= k, |λ| = m.
std::vector<CSummand> c_graded_summands(int n, int k, int m);
Integer c_dim(int n, int k);
Integer c_graded_dim(int n, int k, int m);
/// ⊕ V(λ) ⊗ V(λ)* over c_graded_summands, restricted to the diagonal sl_n.
IrrDecomposition c_graded_decomposition(int n, int k, int m);

/// dim C^m(k) - dim C^{m-1}(k-1); the subtrahend is zero for k = 0 or m = 0.
/// Throws NegativeDimension if the difference is negative.
Integer c2_graded_dim(int n, int k, int m);
/// Same difference taken in the Grothendieck group. Throws
/// NegativeMultiplicity if any multiplicity is negative.
IrrDecomposition c2_graded_decomposition(int n, int k, int m);

struct C2Table {
  GradedDimTable dims;
  std::map<int, IrrDecomposition> modules;  // empty unless requested
};

/// Degrees 0..n·k. Checks dim C^m(k) = Σ_i dim A^{m-i}_[2](k-i) at every m
/// (and the same identity of modules when `with_modules`), throwing
/// RecursionMismatch on failure.
C2Table c2_table(int n, int k, bool with_modules = true);

struct IdentitySides {
  Integer lhs;
  Integer rhs;
  bool equal() const { return lhs == rhs; }
};

/// Both sides of Σ_β (dim V(β))² = Σ_λ Σ_{μ,ν ⪰ λ} dim U(μ) dim U(ν),
/// with U(·) irreducible gl_{n-1}-modules and μ₁, ν₁ <= k.
IdentitySides b_identity_sides(int n, int k);

struct BijectionReport {
  bool ok = false;
  std::size_t lhs_count = 0;
  std::size_t rhs_count = 0;
  Integer lhs_sum;
  Integer rhs_sum;
  std::string failure;  // first problem found, empty when ok
};

/// Explicitly enumerates {(β, μ, ν): β ∈ P_k^+, μ, ν ⪯ β} and
/// {(λ, μ̄, ν̄): λ₁ <= k, μ̄, ν̄ ⪰ λ, μ̄₁, ν̄₁ <= k} and checks that the
/// complement-and-reverse map sends one bijectively onto the other with
/// matching dimension products.
BijectionReport bijection_report(int n, int k);
bool bijection_check(int n, int k);

struct RectSummand {
  Partition lambda;
  Integer left_dim;   // dim V_i(λ)
  Integer right_dim;  // dim V_{N-i}(λ)
};

/// V_N((k^i)) restricted to gl_i ⊕ gl_{N-i}: ⊕_λ V_i(λ)* ⊗ V_{N-i}(λ) over
/// λ₁ <= k with at most min(i, N-i) parts.
std::vector<RectSummand> rect_branch(int N, int i, int k);

/// Co-minuscule simple roots (Bourbaki numbering) for a Cartan type A..G.
std::vector<int> cominuscule_nodes(char type, int rank);

}  // namespace c2zhu
