#include "e6voa/golden.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <utility>

namespace e6voa::golden {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& fixtures();
}

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& [n, t] : detail::fixtures()) out.emplace_back(n);
  return out;
}

std::string load(const std::string& name, const std::optional<std::string>& dir) {
  if (dir) {
    std::ifstream in(*dir + "/" + name);
    if (!in) throw std::runtime_error("cannot read golden file " + *dir + "/" + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  for (const auto& [n, t] : detail::fixtures())
    if (n == name) return std::string(t);
  throw std::runtime_error("no embedded golden file " + name);
}

std::string hwv_file(const std::string& id) {
  std::string s = "hwv_";
  bool sep = false;
  for (char c : id) {
    bool alnum = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
    if (alnum) {
      if (sep && s.back() != '_') s += '_';
      s += c;
      sep = false;
    } else {
      sep = true;
    }
  }
  return s + ".json";
}

}  // namespace e6voa::golden
