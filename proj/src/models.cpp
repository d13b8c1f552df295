#include "cogassess/models.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace cogassess {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::Rm:
      return "rm";
    case Variant::Grm:
      return "grm";
    case Variant::Tfam:
      return "tfam";
    case Variant::Tpfam:
      return "tpfam";
  }
  return "?";
}

Variant parse_variant(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (Variant v : {Variant::Rm, Variant::Grm, Variant::Tfam, Variant::Tpfam}) {
    if (lower == to_string(v)) return v;
  }
  throw InputError("unknown model '" + std::string(name) + "'");
}

}  // namespace cogassess
