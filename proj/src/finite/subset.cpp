#include "tqu/finite/subset.hpp"

namespace tqu::finite {

std::vector<unsigned> Subset::elements() const {
  std::vector<unsigned> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<unsigned>(std::countr_zero(b)));
  return out;
}

std::string Subset::to_string() const {
  std::string s = "{";
  bool first = true;
  for (unsigned e : elements()) {
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

}  // namespace tqu::finite
