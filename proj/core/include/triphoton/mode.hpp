#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace triphoton {

inline constexpr std::size_t kNumModes = 3;

/// Label of one of the three down-converted field modes.
enum class Mode : std::uint8_t { one = 1, two = 2, three = 3 };

inline constexpr std::array<Mode, kNumModes> kAllModes{Mode::one, Mode::two, Mode::three};

/// Zero-based storage slot of a mode.
constexpr std::size_t slot(Mode m) noexcept { return static_cast<std::size_t>(m) - 1; }

constexpr Mode mode_from_slot(std::size_t s) noexcept { return static_cast<Mode>(s + 1); }

constexpr int label(Mode m) noexcept { return static_cast<int>(m); }

}  // namespace triphoton
