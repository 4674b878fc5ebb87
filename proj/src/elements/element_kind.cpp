#include "maxwell/element_kind.hpp"

#include <algorithm>
#include <cctype>

#include "maxwell/types.hpp"

namespace maxwell {

std::string_view to_string(ElementKind k) {
  switch (k) {
    case ElementKind::Q4: return "Q4";
    case ElementKind::Q9: return "Q9";
    case ElementKind::T6: return "T6";
    case ElementKind::T3: return "T3";
    case ElementKind::EQ4: return "EQ4";
    case ElementKind::EQ12: return "EQ12";
    case ElementKind::ET8: return "ET8";
    case ElementKind::ET3: return "ET3";
  }
  return "?";
}

ElementKind parse_kind(std::string_view name) {
  std::string up(name);
  std::transform(up.begin(), up.end(), up.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (up == "T3GEOM") return ElementKind::T3;
  for (ElementKind k : kAllKinds) {
    if (up == to_string(k)) return k;
  }
  throw InputError("unknown element kind '" + std::string(name) + "'");
}

}  // namespace maxwell
