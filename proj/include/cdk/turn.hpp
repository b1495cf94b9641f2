#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cdk {

// One rendered conversation turn. Scene descriptions carry no speaker.
struct Turn {
  std::optional<std::string> speaker;
  std::string text;

  bool operator==(const Turn&) const = default;
};

/// Stable content key for de-duplication and membership tests. Uses
/// unit separators so distinct turn lists cannot collide.
std::string turn_key(const Turn& turn);
std::string turns_key(const std::vector<Turn>& turns);

}  // namespace cdk
