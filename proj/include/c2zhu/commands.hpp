#pragma once

#include "c2zhu/oracle.hpp"
#include "c2zhu/record.hpp"

#include <optional>
#include <string>

namespace c2zhu {

// Command implementations behind the c2zhu executable. Invalid parameters
// throw std::invalid_argument; failed checks are reported as verdicts.

OutputRecord cmd_dims(int n, int k);
OutputRecord cmd_decompose(int n, int k, int m);

/// suite: dual | sum | bijection | all; grid 2 <= n <= n_max, 0 <= k <= k_max.
OutputRecord cmd_verify(int n_max, int k_max, const std::string& suite);

/// mode: dims | characters. max_degree defaults to n·k.
OutputRecord cmd_oracle(int n, int k, std::optional<int> max_degree, const std::string& mode,
                        const OracleOptions& options = {});

OutputRecord cmd_branch(int N, int i, int k);
OutputRecord cmd_cominuscule(const std::string& type, int rank);

}  // namespace c2zhu
