// c2zhu: graded decompositions of type-A C2-algebras and Zhu-algebra
// dimensions, with a brute-force oracle for cross-checking.
//
// Exit codes: 0 all verdicts pass, 1 a verdict failed, 2 usage error,
// 3 resource budget exceeded.

#include "c2zhu/commands.hpp"
#include "c2zhu/errors.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zhu and C2-algebras of sl_n at level k"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  bool timing = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_flag("--timing", timing, "Record elapsed_ms (otherwise 0, for reproducible output)");

  int n = 2, k = 0, m = 0, n_max = 2, k_max = 0, N = 2, i = 1, rank = 1;
  std::string suite = "all", mode = "dims", type;
  std::optional<int> max_degree;

  auto* dims = app.add_subcommand("dims", "Zhu dimension, C(k) dimension and graded table");
  dims->add_option("--n", n, "Rank of sl_n")->required();
  dims->add_option("--k", k, "Level")->required();

  auto* decompose = app.add_subcommand("decompose", "sl_n decomposition of one graded piece");
  decompose->add_option("--n", n)->required();
  decompose->add_option("--k", k)->required();
  decompose->add_option("--m", m, "Degree")->required();

  auto* verify = app.add_subcommand("verify", "Check the dimension identities over a grid");
  verify->add_option("--n-max", n_max)->required();
  verify->add_option("--k-max", k_max)->required();
  verify->add_option("--suite", suite)->check(CLI::IsMember({"dual", "sum", "bijection", "all"}));

  auto* oracle = app.add_subcommand("oracle", "Brute-force quotient S(sl_n)/<V_{k+1}> vs formulas");
  oracle->add_option("--n", n)->required();
  oracle->add_option("--k", k)->required();
  oracle->add_option("--max-degree", max_degree, "Highest degree (default n*k)");
  oracle->add_option("--mode", mode)->check(CLI::IsMember({"dims", "characters"}));

  auto* branch = app.add_subcommand("branch", "V_N((k^i)) restricted to gl_i + gl_{N-i}");
  branch->add_option("--N", N)->required();
  branch->add_option("--i", i)->required();
  branch->add_option("--k", k)->required();

  auto* cominuscule = app.add_subcommand("cominuscule", "Co-minuscule simple roots");
  cominuscule->add_option("--type", type)->required()->check(
      CLI::IsMember({"A", "B", "C", "D", "E", "F", "G"}));
  cominuscule->add_option("--rank", rank)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  c2zhu::OutputRecord record;
  try {
    if (*dims) {
      record = c2zhu::cmd_dims(n, k);
    } else if (*decompose) {
      record = c2zhu::cmd_decompose(n, k, m);
    } else if (*verify) {
      record = c2zhu::cmd_verify(n_max, k_max, suite);
    } else if (*oracle) {
      record = c2zhu::cmd_oracle(n, k, max_degree, mode, c2zhu::options_from_env());
    } else if (*branch) {
      record = c2zhu::cmd_branch(N, i, k);
    } else {
      record = c2zhu::cmd_cominuscule(type, rank);
    }
  } catch (const c2zhu::BudgetExceeded& e) {
    std::cerr << "error: resource budget exceeded: " << e.what()
              << " (raise C2ZHU_BUDGET to allow larger blocks)\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitMismatch;
  }
  if (timing)
    record.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();

  std::cout << c2zhu::emit(record, c2zhu::parse_format(format));
  if (!record.all_pass()) {
    for (const auto& v : record.verdicts)
      if (!v.pass) std::cerr << "FAIL " << v.name << ": " << v.detail << "\n";
    return kExitMismatch;
  }
  return 0;
}
