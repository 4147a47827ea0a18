#ifndef QWC_CLI_HPP
#define QWC_CLI_HPP

#include <string>
#include <vector>

namespace qwc::cli {

struct Result {
  int code = 0;        // 0 success, 1 check failure, 2 input error
  std::string out;
};

Result run(const std::vector<std::string>& args);

}  // namespace qwc::cli

#endif
