#include "c2zhu/oracle.hpp"

#include "c2zhu/errors.hpp"
#include "c2zhu/exact_rank.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>

namespace c2zhu {

namespace {

EpsWeight add_weights(const EpsWeight& a, const EpsWeight& b) {
  EpsWeight out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

EpsWeight sub_weights(const EpsWeight& a, const EpsWeight& b) {
  EpsWeight out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

std::map<EpsWeight, std::vector<Monomial>> group_by_weight(const LieBasis& basis,
                                                           std::vector<Monomial> monos) {
  std::map<EpsWeight, std::vector<Monomial>> out;
  for (auto& m : monos) {
    auto w = monomial_weight(basis, m);
    out[w].push_back(std::move(m));
  }
  return out;
}

// Relation rewritten with integer coefficients (denominators cleared).
using IntegerPoly = std::vector<std::pair<Monomial, Integer>>;

IntegerPoly clear_denominators(const SymPoly& p) {
  Integer l = 1;
  for (const auto& [m, c] : p.terms()) {
    const Integer d = denominator(c);
    l = l / gcd(l, d) * d;
  }
  IntegerPoly out;
  out.reserve(p.terms().size());
  for (const auto& [m, c] : p.terms()) out.emplace_back(m, numerator(c) * (l / denominator(c)));
  return out;
}

struct RelationBlock {
  SparseEchelon echelon;
  std::map<Monomial, int> columns;

  SparseRow to_row(const SymPoly& p) {
    std::vector<std::pair<int, Rational>> row;
    row.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) {
      auto [it, inserted] = columns.try_emplace(m, static_cast<int>(columns.size()));
      row.emplace_back(it->second, c);
    }
    return primitive_row(row);
  }
};

}  // namespace

OracleOptions options_from_env() {
  OracleOptions options;
  if (const char* raw = std::getenv("C2ZHU_BUDGET"); raw && *raw) {
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(raw, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || raw[pos] != '\0' || value == 0)
      throw std::invalid_argument(std::string("C2ZHU_BUDGET must be a positive integer, got '") +
                                  raw + "'");
    options.budget = static_cast<std::size_t>(value);
  }
  return options;
}

GlWeight highest_root_multiple(int n, int c) {
  if (n < 2 || c < 0) throw std::invalid_argument("highest_root_multiple requires n >= 2, c >= 0");
  std::vector<int> parts(static_cast<std::size_t>(n), c);
  parts.front() = 2 * c;
  parts.back() = 0;
  return {n, Partition(std::move(parts))};
}

RelationSpace generate_relations(const LieBasis& basis, int k) {
  if (k < 0) throw std::invalid_argument("generate_relations requires k >= 0");
  const int nv = basis.dim();
  RelationSpace rel;
  rel.k = k;
  std::map<EpsWeight, RelationBlock> blocks;
  std::deque<std::size_t> pending;

  auto offer = [&](SymPoly p, EpsWeight w) {
    auto& block = blocks[w];
    if (!block.echelon.insert(block.to_row(p))) return;
    rel.basis.push_back(std::move(p));
    rel.weights.push_back(std::move(w));
    pending.push_back(rel.basis.size() - 1);
  };

  auto seed = SymPoly::power(nv, basis.highest_root_index(), k + 1);
  auto seed_weight = *poly_weight(basis, seed);
  offer(std::move(seed), std::move(seed_weight));

  while (!pending.empty()) {
    const std::size_t i = pending.front();
    pending.pop_front();
    const SymPoly p = rel.basis[i];
    const EpsWeight w = rel.weights[i];
    for (int x = 0; x < nv; ++x) {
      auto q = adjoint_on_sym(basis, x, p);
      if (q.is_zero()) continue;
      offer(std::move(q), add_weights(w, basis.weight(x)));
    }
  }

  const Integer expected = weyl_dim(highest_root_multiple(basis.rank(), k + 1));
  if (Integer(rel.dim()) != expected)
    throw ClosureDimensionMismatch("relation space closed at dimension " +
                                   std::to_string(rel.dim()) + ", expected " + expected.str());
  return rel;
}

OracleDegree oracle_degree(const LieBasis& basis, const RelationSpace& rel, int m,
                           const OracleOptions& options) {
  if (m < 0) throw std::invalid_argument("degree must be nonnegative");
  const int nv = basis.dim();
  const int n = basis.rank();
  OracleDegree result{m, 0, 0, 0, Character(n)};

  const auto columns = group_by_weight(basis, monomials_of_degree(nv, m));
  const int mult_degree = m - rel.degree();

  std::map<EpsWeight, std::vector<Monomial>> multipliers;
  std::map<EpsWeight, std::vector<IntegerPoly>> relations;
  if (mult_degree >= 0) {
    multipliers = group_by_weight(basis, monomials_of_degree(nv, mult_degree));
    for (std::size_t i = 0; i < rel.dim(); ++i)
      relations[rel.weights[i]].push_back(clear_denominators(rel.basis[i]));
  }

  for (const auto& [weight, cols] : columns) {
    const std::size_t ncols = cols.size();
    std::size_t rank = 0;

    std::vector<std::pair<const std::vector<Monomial>*, const std::vector<IntegerPoly>*>> pairs;
    std::size_t nrows = 0;
    for (const auto& [rw, polys] : relations) {
      auto it = multipliers.find(sub_weights(weight, rw));
      if (it == multipliers.end()) continue;
      pairs.emplace_back(&it->second, &polys);
      nrows += it->second.size() * polys.size();
    }
    if (nrows > 0 && nrows * ncols > options.budget)
      throw BudgetExceeded("weight block of " + std::to_string(nrows) + " x " +
                           std::to_string(ncols) + " entries at degree " + std::to_string(m) +
                           " exceeds the budget of " + std::to_string(options.budget));

    SparseEchelon echelon;
    auto column_of = [&cols](const Monomial& mono) {
      auto it = std::lower_bound(cols.begin(), cols.end(), mono);
      return static_cast<int>(it - cols.begin());
    };
    for (const auto& [us, polys] : pairs) {
      for (const auto& r : *polys) {
        for (const auto& u : *us) {
          if (echelon.rank() == ncols) break;
          SparseRow row;
          row.reserve(r.size());
          for (const auto& [mono, c] : r) {
            Monomial prod(mono);
            for (int j = 0; j < nv; ++j) prod[j] = static_cast<std::uint16_t>(prod[j] + u[j]);
            row.emplace_back(column_of(prod), c);
          }
          echelon.insert(std::move(row));
        }
      }
    }
    rank = echelon.rank();

    result.monomials += ncols;
    result.ideal_rank += rank;
    result.character.add(normalize_weight(weight), Integer(ncols - rank));
  }
  result.dim = result.monomials - result.ideal_rank;
  return result;
}

Integer ideal_graded_rank(const LieBasis& basis, const RelationSpace& rel, int m,
                          const OracleOptions& options) {
  return oracle_degree(basis, rel, m, options).ideal_rank;
}

Integer oracle_graded_dim(int n, int k, int m, const OracleOptions& options) {
  const LieBasis basis(n);
  return oracle_degree(basis, generate_relations(basis, k), m, options).dim;
}

Character oracle_character(int n, int k, int m, const OracleOptions& options) {
  const LieBasis basis(n);
  return oracle_degree(basis, generate_relations(basis, k), m, options).character;
}

}  // namespace c2zhu
