#include "vghjudge/text.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

namespace vghjudge {

std::string normalize_term(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (char ch : raw) {
    const unsigned char c = static_cast<unsigned char>(ch);
    if (c == '_' || std::isspace(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty()) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

double round4(double x) {
  double r = std::copysign(std::floor(std::fabs(x) * 10000.0 + 0.5) / 10000.0, x);
  return r + 0.0;  // fold -0.0 into +0.0
}

std::string fixed4(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", round4(x));
  return buf;
}

}  // namespace vghjudge
