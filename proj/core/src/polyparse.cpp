#include "cherednik/polyparse.hpp"

namespace cherednik {

std::vector<std::string> default_variable_names(int nvars) {
  std::vector<std::string> out;
  for (int i = 0; i < nvars; ++i) out.push_back(nvars <= 4 ? std::string(1, "xyzw"[i]) : "x" + std::to_string(i + 1));
  return out;
}

}  // namespace cherednik
