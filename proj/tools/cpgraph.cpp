#include <cstdio>
#include <string>
#include <vector>

#include "cpg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  cpg::CliResult res = cpg::cli_run(args);
  std::fputs(res.out.c_str(), res.code == 2 ? stderr : stdout);
  return res.code;
}
