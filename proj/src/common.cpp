#include "trisect/common.hpp"

#include <string>

namespace trisect {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ViolatedD: return "ViolatedD";
    case ErrorKind::ViolatedLagrangian: return "ViolatedLagrangian";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::MissingAnnotation: return "MissingAnnotation";
    case ErrorKind::MissingGeometry: return "MissingGeometry";
    case ErrorKind::NotGood: return "NotGood";
    case ErrorKind::NoNegativeSubarc: return "NoNegativeSubarc";
    case ErrorKind::BadEdge: return "BadEdge";
    case ErrorKind::BadJunction: return "BadJunction";
    case ErrorKind::BadSegment: return "BadSegment";
  }
  return "Unknown";
}

Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) fail(ErrorKind::InvalidInput, "not an integer: '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      fail(ErrorKind::InvalidInput, "not an integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

}  // namespace trisect
