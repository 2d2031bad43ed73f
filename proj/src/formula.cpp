#include "c2zhu/formula.hpp"

#include "c2zhu/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace c2zhu {

namespace {

void require_nk(int n, int k) {
  if (n < 2) throw std::invalid_argument("rank n must be at least 2");
  if (k < 0) throw std::invalid_argument("level k must be nonnegative");
}

void require_nkm(int n, int k, int m) {
  require_nk(n, k);
  if (m < 0) throw std::invalid_argument("degree m must be nonnegative");
}

std::string describe(int n, int k, int m) {
  return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ", m=" + std::to_string(m) + ")";
}

// V(λ) ⊗ V(λ)* restricted to sl_n.
IrrDecomposition self_dual_product(const GlWeight& lambda) {
  const auto beta = restrict_to_sl(lambda);
  return tensor_sl(beta, dual_sl(beta));
}

// k - p_{len-1-i}: the complement of p in a len × k box, read backwards.
Partition complement_reverse(const Partition& p, int len, int k) {
  const auto parts = p.padded(len);
  std::vector<int> out(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) out[i] = k - parts[len - 1 - i];
  return Partition(std::move(out));
}

}  // namespace

int GradedDimTable::max_degree() const {
  for (auto it = dims.rbegin(); it != dims.rend(); ++it)
    if (it->second != 0) return it->first;
  return -1;
}

Integer GradedDimTable::total() const {
  Integer t = 0;
  for (const auto& [m, d] : dims) t += d;
  return t;
}

Integer GradedDimTable::at(int m) const {
  auto it = dims.find(m);
  return it == dims.end() ? Integer(0) : it->second;
}

Integer zhu_dim(int n, int k) {
  require_nk(n, k);
  Integer total = 0;
  for (const auto& beta : enumerate_pk(n, k)) {
    const auto d = sl_dim(beta);
    total += d * d;
  }
  return total;
}

IrrDecomposition zhu_decomposition_sl(int n, int k) {
  require_nk(n, k);
  IrrDecomposition out(n);
  for (const auto& beta : enumerate_pk(n, k)) out += tensor_sl(beta, dual_sl(beta));
  return out;
}

std::vector<CSummand> c_graded_summands(int n, int k, int m) {
  require_nkm(n, k, m);
  std::vector<CSummand> out;
  for (auto& p : partitions_in_box(n, k, m)) {
    GlWeight w(n, std::move(p));
    auto d = weyl_dim(w);
    out.push_back({std::move(w), std::move(d)});
  }
  return out;
}

Integer c_dim(int n, int k) {
  require_nk(n, k);
  Integer total = 0;
  for (const auto& p : partitions_in_box(n, k)) {
    const auto d = weyl_dim(GlWeight(n, p));
    total += d * d;
  }
  return total;
}

Integer c_graded_dim(int n, int k, int m) {
  Integer total = 0;
  for (const auto& s : c_graded_summands(n, k, m)) total += s.squared_dim();
  return total;
}

IrrDecomposition c_graded_decomposition(int n, int k, int m) {
  IrrDecomposition out(n);
  for (const auto& s : c_graded_summands(n, k, m)) out += self_dual_product(s.weight);
  return out;
}

Integer c2_graded_dim(int n, int k, int m) {
  require_nkm(n, k, m);
  Integer result = c_graded_dim(n, k, m);
  if (k > 0 && m > 0) result -= c_graded_dim(n, k - 1, m - 1);
  if (result < 0)
    throw NegativeDimension("negative graded dimension " + result.str() + " at " + describe(n, k, m));
  return result;
}

IrrDecomposition c2_graded_decomposition(int n, int k, int m) {
  require_nkm(n, k, m);
  IrrDecomposition result = c_graded_decomposition(n, k, m);
  if (k > 0 && m > 0) result -= c_graded_decomposition(n, k - 1, m - 1);
  for (const auto& [w, mult] : result.entries()) {
    if (mult < 0)
      throw NegativeMultiplicity("multiplicity " + mult.str() + " of " + to_string(w) + " at " +
                                 describe(n, k, m));
  }
  return result;
}

C2Table c2_table(int n, int k, bool with_modules) {
  require_nk(n, k);
  C2Table table{GradedDimTable{n, k, {}}, {}};
  const int top = n * k;

  // Lower levels are needed for the recursion check.
  std::map<std::pair<int, int>, Integer> dim_cache;
  std::map<std::pair<int, int>, IrrDecomposition> module_cache;
  auto graded = [&](int level, int degree) -> const Integer& {
    auto key = std::make_pair(level, degree);
    auto it = dim_cache.find(key);
    if (it == dim_cache.end()) it = dim_cache.emplace(key, c2_graded_dim(n, level, degree)).first;
    return it->second;
  };
  auto graded_module = [&](int level, int degree) -> const IrrDecomposition& {
    auto key = std::make_pair(level, degree);
    auto it = module_cache.find(key);
    if (it == module_cache.end())
      it = module_cache.emplace(key, c2_graded_decomposition(n, level, degree)).first;
    return it->second;
  };

  for (int m = 0; m <= top; ++m) {
    table.dims.dims[m] = graded(k, m);

    Integer sum = 0;
    for (int i = 0; i <= std::min(m, k); ++i) sum += graded(k - i, m - i);
    const auto expected = c_graded_dim(n, k, m);
    if (sum != expected)
      throw RecursionMismatch("dim C^m(k) = " + expected.str() + " but graded pieces sum to " +
                              sum.str() + " at " + describe(n, k, m));

    if (with_modules) {
      const auto& piece = graded_module(k, m);
      if (piece.virtual_dim() != table.dims.dims[m])
        throw RecursionMismatch("module and dimension disagree at " + describe(n, k, m));
      IrrDecomposition module_sum(n);
      for (int i = 0; i <= std::min(m, k); ++i) module_sum += graded_module(k - i, m - i);
      if (module_sum != c_graded_decomposition(n, k, m))
        throw RecursionMismatch("module recursion fails at " + describe(n, k, m));
      table.modules.emplace(m, piece);
    }
  }
  return table;
}

IdentitySides b_identity_sides(int n, int k) {
  require_nk(n, k);
  IdentitySides sides{zhu_dim(n, k), 0};
  const int len = n - 1;
  for (const auto& lambda : partitions_in_box(len, k)) {
    Integer branch_sum = 0;
    for (const auto& mu : interlace_up(lambda, len, k)) branch_sum += weyl_dim(GlWeight(len, mu));
    // Σ_{μ,ν} dim U(μ) dim U(ν) factorizes.
    sides.rhs += branch_sum * branch_sum;
  }
  return sides;
}

BijectionReport bijection_report(int n, int k) {
  require_nk(n, k);
  using Triple = std::tuple<Partition, Partition, Partition>;
  const int len = n - 1;
  BijectionReport report;

  std::map<Partition, Integer> udim;
  auto dim_u = [&](const Partition& p) -> const Integer& {
    auto it = udim.find(p);
    if (it == udim.end()) it = udim.emplace(p, weyl_dim(GlWeight(len, p))).first;
    return it->second;
  };

  std::set<Triple> rhs;
  for (const auto& lambda : partitions_in_box(len, k)) {
    const auto ups = interlace_up(lambda, len, k);
    for (const auto& mu : ups) {
      for (const auto& nu : ups) {
        rhs.emplace(lambda, mu, nu);
        report.rhs_sum += dim_u(mu) * dim_u(nu);
      }
    }
  }
  report.rhs_count = rhs.size();

  std::set<Triple> image;
  for (const auto& beta : enumerate_pk(n, k)) {
    const auto downs = gt_branch(lift_to_gl(beta));
    const auto lambda = complement_reverse(beta.parts, len, k);
    for (const auto& mu : downs) {
      for (const auto& nu : downs) {
        ++report.lhs_count;
        const auto product = dim_u(mu.parts) * dim_u(nu.parts);
        report.lhs_sum += product;
        Triple mapped{lambda, complement_reverse(mu.parts, len, k),
                      complement_reverse(nu.parts, len, k)};
        if (report.failure.empty()) {
          if (!rhs.contains(mapped)) {
            report.failure = "image of β=" + to_string(beta) + " μ=" + to_string(mu) +
                             " ν=" + to_string(nu) + " is not an admissible triple";
          } else if (dim_u(std::get<1>(mapped)) * dim_u(std::get<2>(mapped)) != product) {
            report.failure = "dimension product changes under the map at β=" + to_string(beta);
          } else if (!image.insert(mapped).second) {
            report.failure = "map is not injective at β=" + to_string(beta);
          }
        }
      }
    }
  }
  if (report.failure.empty() && report.lhs_count != report.rhs_count)
    report.failure = "parameter sets differ in size: " + std::to_string(report.lhs_count) +
                     " vs " + std::to_string(report.rhs_count);
  if (report.failure.empty() && report.lhs_sum != report.rhs_sum)
    report.failure = "sums differ: " + report.lhs_sum.str() + " vs " + report.rhs_sum.str();
  report.ok = report.failure.empty();
  return report;
}

bool bijection_check(int n, int k) { return bijection_report(n, k).ok; }

std::vector<RectSummand> rect_branch(int N, int i, int k) {
  if (i < 1 || i > N - 1) throw std::invalid_argument("rect_branch requires 1 <= i <= N-1");
  if (k < 0) throw std::invalid_argument("rect_branch requires k >= 0");
  std::vector<RectSummand> out;
  for (auto& lambda : partitions_in_box(std::min(i, N - i), k)) {
    auto left = weyl_dim(GlWeight(i, lambda));
    auto right = weyl_dim(GlWeight(N - i, lambda));
    out.push_back({std::move(lambda), std::move(left), std::move(right)});
  }
  return out;
}

std::vector<int> cominuscule_nodes(char type, int rank) {
  auto bad = [&] {
    return std::invalid_argument(std::string("invalid Cartan type ") + type + std::to_string(rank));
  };
  switch (type) {
    case 'A': {
      if (rank < 1) throw bad();
      std::vector<int> all(static_cast<std::size_t>(rank));
      for (int i = 0; i < rank; ++i) all[i] = i + 1;
      return all;
    }
    case 'B':
      if (rank < 2) throw bad();
      return {1};
    case 'C':
      if (rank < 2) throw bad();
      return {rank};
    case 'D':
      if (rank < 4) throw bad();
      return {1, rank - 1, rank};
    case 'E':
      if (rank == 6) return {1, 6};
      if (rank == 7) return {7};
      if (rank == 8) return {};
      throw bad();
    case 'F':
      if (rank != 4) throw bad();
      return {};
    case 'G':
      if (rank != 2) throw bad();
      return {};
    default:
      throw bad();
  }
}

}  // namespace c2zhu
