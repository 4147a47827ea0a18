#include <cstdio>
#include <string>
#include <vector>

#include "qwc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  qwc::cli::Result res = qwc::cli::run(args);
  std::fputs(res.out.c_str(), res.code == 2 ? stderr : stdout);
  return res.code;
}
