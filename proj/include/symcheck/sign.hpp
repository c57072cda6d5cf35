#pragma once

#include <cstdint>
#include <string_view>

namespace symcheck {

/// A discrete sign label (+1 or -1).
enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return static_cast<std::int8_t>(a) == static_cast<std::int8_t>(b) ? Sign::Plus : Sign::Minus;
}

constexpr Sign operator-(Sign a) noexcept { return a == Sign::Plus ? Sign::Minus : Sign::Plus; }

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr double to_double(Sign s) noexcept { return static_cast<double>(s); }

constexpr std::string_view to_string(Sign s) noexcept { return s == Sign::Plus ? "+" : "-"; }

}  // namespace symcheck
