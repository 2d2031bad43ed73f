#include "c2zhu/errors.hpp"
#include "c2zhu/formula.hpp"
#include "c2zhu/oracle.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace c2zhu;

namespace {

std::vector<int> theta_multiple(int n, int c) {
  std::vector<int> top(static_cast<std::size_t>(n), c);
  top.front() = 2 * c;
  top.back() = 0;
  return top;
}

}  // namespace

TEST_CASE("highest_root_multiple") {
  CHECK(highest_root_multiple(3, 1) == GlWeight(3, Partition{2, 1, 0}));
  CHECK(highest_root_multiple(2, 3) == GlWeight(2, Partition{6}));
  CHECK(highest_root_multiple(4, 2) == GlWeight(4, Partition{4, 2, 2}));
}

TEST_CASE("relation space dimension and independence") {
  const std::vector<std::tuple<int, int, long>> cases{{2, 0, 3}, {2, 1, 5}, {2, 2, 7}, {3, 1, 27},
                                                      {3, 2, 64}, {4, 1, 84}};
  for (const auto& [n, k, expected] : cases) {
    CAPTURE(n);
    CAPTURE(k);
    const LieBasis basis(n);
    const auto rel = generate_relations(basis, k);
    CHECK(rel.degree() == k + 1);
    CHECK(static_cast<long>(rel.dim()) == expected);
    CHECK(oracle::count_gt_patterns(theta_multiple(n, k + 1)) == expected);
    CHECK(weyl_dim(highest_root_multiple(n, k + 1)) == expected);

    // Independence over Q and weight homogeneity
    const auto monos = monomials_of_degree(basis.dim(), k + 1);
    std::map<Monomial, std::size_t> col;
    for (std::size_t j = 0; j < monos.size(); ++j) col[monos[j]] = j;
    std::vector<std::vector<oracle::BigRational>> dense;
    for (std::size_t r = 0; r < rel.dim(); ++r) {
      CHECK(poly_weight(basis, rel.basis[r]) == rel.weights[r]);
      std::vector<oracle::BigRational> row(monos.size());
      for (const auto& [m, c] : rel.basis[r].terms()) row[col.at(m)] = c;
      dense.push_back(std::move(row));
    }
    if (n <= 3) CHECK(oracle::dense_rank(dense) == rel.dim());
  }
}

TEST_CASE("relation space is ad-stable") {
  const LieBasis basis(3);
  const auto rel = generate_relations(basis, 1);
  const auto monos = monomials_of_degree(basis.dim(), 2);
  std::map<Monomial, std::size_t> col;
  for (std::size_t j = 0; j < monos.size(); ++j) col[monos[j]] = j;
  auto dense_row = [&](const SymPoly& p) {
    std::vector<oracle::BigRational> row(monos.size());
    for (const auto& [m, c] : p.terms()) row[col.at(m)] = c;
    return row;
  };
  std::vector<std::vector<oracle::BigRational>> span;
  for (const auto& p : rel.basis) span.push_back(dense_row(p));
  for (int x = 0; x < basis.dim(); ++x) {
    for (std::size_t r = 0; r < rel.dim(); r += 5) {
      auto extended = span;
      extended.push_back(dense_row(adjoint_on_sym(basis, x, rel.basis[r])));
      CHECK(oracle::dense_rank(extended) == rel.dim());
    }
  }
}

TEST_CASE("ideal rank and graded dimension examples") {
  const LieBasis b2(2);
  const auto r21 = generate_relations(b2, 1);
  // S²(sl₂) has dimension 6 and the relations fill a 5-dimensional subspace
  CHECK(ideal_graded_rank(b2, r21, 2) == 5);
  CHECK(ideal_graded_rank(b2, r21, 1) == 0);
  CHECK(oracle_graded_dim(2, 1, 2) == 1);

  const auto d312 = oracle_degree(LieBasis(3), generate_relations(LieBasis(3), 1), 2);
  CHECK(d312.monomials == 36);
  CHECK(d312.ideal_rank == 27);
  CHECK(d312.dim == 9);
  CHECK(d312.character.mass() == 9);
}

TEST_CASE("oracle characters decompose into the formula modules") {
  IrrDecomposition triv(2);
  triv.add(SlWeight(2, Partition{}), 1);
  CHECK(char_decompose(oracle_character(2, 1, 2)) == triv);

  const auto d = char_decompose(oracle_character(3, 1, 2));
  CHECK(d.virtual_dim() == 9);
  CHECK(d == c2_graded_decomposition(3, 1, 2));
}

TEST_CASE("oracle vanishes above degree n·k") {
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {2, 2}, {3, 1}}) {
    CHECK(oracle_graded_dim(n, k, n * k + 1) == 0);
    CHECK(oracle_graded_dim(n, k, n * k + 2) == 0);
  }
}

TEST_CASE("budget enforcement") {
  OracleOptions tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(oracle_graded_dim(3, 1, 2, tiny), BudgetExceeded);

  ::setenv("C2ZHU_BUDGET", "1234", 1);
  CHECK(options_from_env().budget == 1234);
  ::setenv("C2ZHU_BUDGET", "lots", 1);
  CHECK_THROWS_AS(options_from_env(), std::invalid_argument);
  ::unsetenv("C2ZHU_BUDGET");
  CHECK(options_from_env().budget == 5'000'000);
}
