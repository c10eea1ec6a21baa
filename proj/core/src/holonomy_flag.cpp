#include "subflag/holonomy_flag.hpp"

#include <string>

namespace subflag {

std::string_view flag_mode_name(FlagMode mode) {
  return mode == FlagMode::projection ? "projection" : "intersection";
}

FlagMode parse_flag_mode(std::string_view name) {
  if (name == "projection") return FlagMode::projection;
  if (name == "intersection") return FlagMode::intersection;
  throw UsageError("unknown flag mode '" + std::string(name) + "' (expected projection|intersection)");
}

}  // namespace subflag
