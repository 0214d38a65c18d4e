#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace ga3 {

// Fixed ambient variable set: Cox coordinates (t1,t2,x1,x2,x3), the group
// parameters (u,v,w) and their primed copies used for group-law checks.
enum class Var : std::uint8_t {
  t1 = 0,
  t2,
  x1,
  x2,
  x3,
  u,
  v,
  w,
  up,
  vp,
  wp,
};

inline constexpr int kNumVars = 11;
inline constexpr int kNumCoxVars = 5;

inline constexpr std::array<std::string_view, kNumVars> kVarNames = {
    "t1", "t2", "x1", "x2", "x3", "u", "v", "w", "u'", "v'", "w'"};

constexpr std::string_view name_of(Var v) {
  return kVarNames[static_cast<int>(v)];
}

constexpr int index_of(Var v) { return static_cast<int>(v); }

constexpr Var var_at(int i) { return static_cast<Var>(i); }

constexpr bool is_cox(Var v) { return index_of(v) < kNumCoxVars; }

constexpr bool is_parameter(Var v) { return index_of(v) >= kNumCoxVars; }

inline std::optional<Var> var_from_name(std::string_view s) {
  for (int i = 0; i < kNumVars; ++i) {
    if (kVarNames[i] == s) return var_at(i);
  }
  return std::nullopt;
}

}  // namespace ga3
