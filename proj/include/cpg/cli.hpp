#pragma once

#include <string>
#include <vector>

namespace cpg {

struct CliResult {
  int code = 0;  // 0 verified/ok, 1 verification failure, 2 input error
  std::string out;
};

// Everything the cpgraph binary does except stream binding, so tests can
// drive the interface in-process. args excludes the program name.
CliResult cli_run(const std::vector<std::string>& args);

}  // namespace cpg
