#include "orbitgames/small_set.hpp"

#include "orbitgames/validation.hpp"

namespace orbitgames {

std::string SmallSet::str() const {
  std::string out = "{";
  bool first_item = true;
  for_each([&](int i) {
    if (!first_item) out += ',';
    out += std::to_string(i);
    first_item = false;
  });
  out += '}';
  return out;
}

void check_capacity(int n, const char* what) {
  if (n < 0 || n > SmallSet::capacity)
    throw std::invalid_argument(std::string(what) + ": size " + std::to_string(n) +
                                " outside [0, 64]");
}

std::string ValidationReport::summary() const {
  if (violations.empty()) return "ok";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.kind + ": " + v.detail;
  }
  return out;
}

}  // namespace orbitgames
