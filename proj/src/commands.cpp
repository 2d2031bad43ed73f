#include "c2zhu/commands.hpp"

#include "c2zhu/errors.hpp"
#include "c2zhu/formula.hpp"

#include <stdexcept>

namespace c2zhu {

namespace {

void require_nk(int n, int k) {
  if (n < 2) throw std::invalid_argument("--n must be at least 2");
  if (k < 0) throw std::invalid_argument("--k must be nonnegative");
}

std::string instance(int n, int k) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k);
}

// Collects the first failure of a suite across the grid.
struct SuiteTally {
  std::string name;
  bool pass = true;
  std::string detail;

  void fail(const std::string& what) {
    if (pass) detail = what;
    pass = false;
  }
  Verdict verdict() const { return {name, pass, detail}; }
};

}  // namespace

OutputRecord cmd_dims(int n, int k) {
  require_nk(n, k);
  OutputRecord r;
  r.command = "dims";
  r.params = {{"n", n}, {"k", k}};

  const auto table = c2_table(n, k, false);
  for (const auto& [m, d] : table.dims.dims) r.rows.push_back({{"degree", m}, {"dim", json_integer(d)}});

  const auto zhu = zhu_dim(n, k);
  const auto c = c_dim(n, k);
  Integer zhu_sum = 0;
  for (int j = 0; j <= k; ++j) zhu_sum += zhu_dim(n, j);
  r.totals = {{"zhu_dim", json_integer(zhu)},
              {"c_dim", json_integer(c)},
              {"graded_total", json_integer(table.dims.total())},
              {"max_degree", table.dims.max_degree()}};
  r.verdicts.push_back({"graded_total_equals_zhu", table.dims.total() == zhu,
                        table.dims.total().str() + " vs " + zhu.str()});
  r.verdicts.push_back({"c_dim_equals_zhu_sum", c == zhu_sum, c.str() + " vs " + zhu_sum.str()});
  return r;
}

OutputRecord cmd_decompose(int n, int k, int m) {
  require_nk(n, k);
  if (m < 0) throw std::invalid_argument("--m must be nonnegative");
  OutputRecord r;
  r.command = "decompose";
  r.params = {{"n", n}, {"k", k}, {"m", m}};
  const auto d = c2_graded_decomposition(n, k, m);
  r.rows = decomposition_rows(d);
  const auto total = d.virtual_dim();
  const auto expected = c2_graded_dim(n, k, m);
  r.totals = {{"dim", json_integer(total)}, {"irreducibles", d.entries().size()}};
  r.verdicts.push_back({"dimension", total == expected, total.str() + " vs " + expected.str()});
  return r;
}

OutputRecord cmd_verify(int n_max, int k_max, const std::string& suite) {
  if (n_max < 2) throw std::invalid_argument("--n-max must be at least 2");
  if (k_max < 0) throw std::invalid_argument("--k-max must be nonnegative");
  const bool all = suite == "all";
  if (!all && suite != "dual" && suite != "sum" && suite != "bijection")
    throw std::invalid_argument("unknown suite '" + suite + "' (dual | sum | bijection | all)");

  OutputRecord r;
  r.command = "verify";
  r.params = {{"n_max", n_max}, {"k_max", k_max}, {"suite", suite}};
  SuiteTally dual{"dual", true, {}}, sum{"sum", true, {}}, bijection{"bijection", true, {}};

  auto row = [&](const std::string& name, int n, int k, const Integer& lhs, const Integer& rhs, bool ok) {
    r.rows.push_back({{"suite", name}, {"n", n}, {"k", k}, {"lhs", json_integer(lhs)},
                      {"rhs", json_integer(rhs)}, {"status", ok ? "pass" : "fail"}});
  };

  for (int n = 2; n <= n_max; ++n) {
    for (int k = 0; k <= k_max; ++k) {
      if (all || suite == "dual") {
        const auto sides = b_identity_sides(n, k);
        row("dual", n, k, sides.lhs, sides.rhs, sides.equal());
        if (!sides.equal())
          dual.fail(instance(n, k) + ": lhs=" + sides.lhs.str() + " rhs=" + sides.rhs.str());
      }
      if (all || suite == "sum") {
        Integer zhu_sum = 0;
        for (int j = 0; j <= k; ++j) zhu_sum += zhu_dim(n, j);
        const auto c = c_dim(n, k);
        bool ok = c == zhu_sum;
        std::string why = ok ? "" : "c_dim=" + c.str() + " sum zhu=" + zhu_sum.str();
        try {
          const auto table = c2_table(n, k, false);
          const auto zhu = zhu_dim(n, k);
          if (ok && table.dims.total() != zhu) {
            ok = false;
            why = "graded total=" + table.dims.total().str() + " zhu=" + zhu.str();
          }
        } catch (const std::logic_error& e) {
          ok = false;
          why = e.what();
        }
        row("sum", n, k, c, zhu_sum, ok);
        if (!ok) sum.fail(instance(n, k) + ": " + why);
      }
      if (all || suite == "bijection") {
        const auto report = bijection_report(n, k);
        row("bijection", n, k, report.lhs_sum, report.rhs_sum, report.ok);
        if (!report.ok) bijection.fail(instance(n, k) + ": " + report.failure);
      }
    }
  }
  if (all || suite == "dual") r.verdicts.push_back(dual.verdict());
  if (all || suite == "sum") r.verdicts.push_back(sum.verdict());
  if (all || suite == "bijection") r.verdicts.push_back(bijection.verdict());
  r.totals = {{"instances", (n_max - 1) * (k_max + 1)}};
  return r;
}

OutputRecord cmd_oracle(int n, int k, std::optional<int> max_degree, const std::string& mode,
                        const OracleOptions& options) {
  require_nk(n, k);
  if (mode != "dims" && mode != "characters")
    throw std::invalid_argument("unknown mode '" + mode + "' (dims | characters)");
  const int top = max_degree.value_or(n * k);
  if (top < 0) throw std::invalid_argument("--max-degree must be nonnegative");
  const bool characters = mode == "characters";

  OutputRecord r;
  r.command = "oracle";
  r.params = {{"n", n}, {"k", k}, {"max_degree", top}, {"mode", mode}};

  const LieBasis basis(n);
  const auto rel = generate_relations(basis, k);
  Integer oracle_total = 0;
  int first_zero = -1;
  for (int m = 0; m <= top; ++m) {
    const auto piece = oracle_degree(basis, rel, m, options);
    const auto formula = c2_graded_dim(n, k, m);
    oracle_total += piece.dim;
    if (piece.dim == 0 && first_zero < 0) first_zero = m;
    bool ok = piece.dim == formula;
    Json row = {{"degree", m},
                {"oracle_dim", json_integer(piece.dim)},
                {"formula_dim", json_integer(formula)},
                {"ideal_rank", json_integer(piece.ideal_rank)}};
    std::string detail = "oracle " + piece.dim.str() + " vs formula " + formula.str();
    if (characters) {
      bool module_ok = false;
      try {
        module_ok = char_decompose(piece.character) == c2_graded_decomposition(n, k, m);
      } catch (const NotACharacter& e) {
        detail += "; " + std::string(e.what());
      }
      row["module_match"] = module_ok;
      if (!module_ok) detail += "; module mismatch";
      ok = ok && module_ok;
    }
    row["status"] = ok ? "pass" : "fail";
    r.rows.push_back(std::move(row));
    r.verdicts.push_back({"degree " + std::to_string(m), ok, ok ? "" : detail});
  }
  r.totals = {{"relation_dim", rel.dim()},
              {"oracle_total", json_integer(oracle_total)},
              {"zhu_dim", json_integer(zhu_dim(n, k))},
              {"first_zero_degree", first_zero}};
  return r;
}

OutputRecord cmd_branch(int N, int i, int k) {
  if (N < 2) throw std::invalid_argument("--N must be at least 2");
  if (i < 1 || i > N - 1) throw std::invalid_argument("--i must lie in [1, N-1]");
  if (k < 0) throw std::invalid_argument("--k must be nonnegative");
  OutputRecord r;
  r.command = "branch";
  r.params = {{"N", N}, {"i", i}, {"k", k}};
  Integer total = 0;
  for (const auto& s : rect_branch(N, i, k)) {
    const auto product = s.left_dim * s.right_dim;
    total += product;
    r.rows.push_back({{"lambda", json_weight(s.lambda)},
                      {"left_dim", json_integer(s.left_dim)},
                      {"right_dim", json_integer(s.right_dim)},
                      {"product", json_integer(product)}});
  }
  const auto expected = weyl_dim(GlWeight(N, Partition(std::vector<int>(static_cast<std::size_t>(i), k))));
  r.totals = {{"total", json_integer(total)}, {"expected", json_integer(expected)}};
  r.verdicts.push_back({"dimension_sum", total == expected, total.str() + " vs " + expected.str()});
  return r;
}

OutputRecord cmd_cominuscule(const std::string& type, int rank) {
  if (type.size() != 1) throw std::invalid_argument("--type must be one letter A..G");
  OutputRecord r;
  r.command = "cominuscule";
  r.params = {{"type", type}, {"rank", rank}};
  const auto nodes = cominuscule_nodes(type[0], rank);
  for (int node : nodes) r.rows.push_back({{"node", node}});
  r.totals = {{"count", nodes.size()}};
  return r;
}

}  // namespace c2zhu
