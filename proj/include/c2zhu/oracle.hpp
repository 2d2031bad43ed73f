#pragma once

#include "c2zhu/lie.hpp"
#include "c2zhu/numeric.hpp"
#include "c2zhu/tensor.hpp"
#include "c2zhu/weights.hpp"

#include <cstddef>
#include <vector>

namespace c2zhu {

// Brute-force model of S(sl_n)/⟨V_{k+1}⟩ built from the bracket table and
// exact linear algebra only. The Weyl formula appears solely as the closure
// check in generate_relations.

/// Spanning set of V_{k+1} = U(g)∘e_θ^{k+1} ⊂ S^{k+1}(g). Every element is
/// weight-homogeneous and the set is linearly independent.
struct RelationSpace {
  int k = 0;
  std::vector<SymPoly> basis;
  std::vector<EpsWeight> weights;  // weights[i] is the weight of basis[i]

  int degree() const { return k + 1; }
  std::size_t dim() const { return basis.size(); }
};

struct OracleOptions {
  /// Largest rows × columns allowed for a single weight block.
  std::size_t budget = 5'000'000;
};

/// OracleOptions with the budget taken from C2ZHU_BUDGET when set.
/// Throws std::invalid_argument on an unparsable value.
OracleOptions options_from_env();

/// gl_n partition representative of c·θ: (2c, c, ..., c, 0).
GlWeight highest_root_multiple(int n, int c);

/// Closure of {e_θ^{k+1}} under ad_X for every basis element X. Throws
/// ClosureDimensionMismatch unless the result has dimension dim V((k+1)θ).
RelationSpace generate_relations(const LieBasis& basis, int k);

/// Per-degree result of the brute-force computation.
struct OracleDegree {
  int m = 0;
  Integer monomials;   // dim S^m(sl_n)
  Integer ideal_rank;  // dim of the degree-m part of ⟨V_{k+1}⟩
  Integer dim;         // monomials - ideal_rank
  Character character{2};
};

/// Computes the degree-m component of the ideal as the span of
/// {u · r : u a monomial of degree m-k-1, r in the relation basis},
/// one weight block at a time. Throws BudgetExceeded when a block would
/// exceed options.budget entries.
OracleDegree oracle_degree(const LieBasis& basis, const RelationSpace& rel, int m,
                           const OracleOptions& options = {});

Integer ideal_graded_rank(const LieBasis& basis, const RelationSpace& rel, int m,
                          const OracleOptions& options = {});

// Convenience wrappers that build the basis and relations themselves.
Integer oracle_graded_dim(int n, int k, int m, const OracleOptions& options = {});
Character oracle_character(int n, int k, int m, const OracleOptions& options = {});

}  // namespace c2zhu
