#pragma once

#include <array>
#include <string_view>

namespace uttp::test {

// Mirrored circle schedule for ten teams, row t = team t, slots 0..17.
inline constexpr std::array<std::string_view, 10> kTenTeamRows = {
    "9H 1H 2H 3H 4H 5H 6H 7H 8H 9A 1A 2A 3A 4A 5A 6A 7A 8A",
    "8A 0A 9H 2H 3H 4H 5H 6H 7H 8H 0H 9A 2A 3A 4A 5A 6A 7A",
    "7A 8A 0A 1A 9H 3H 4H 5H 6H 7H 8H 0H 1H 9A 3A 4A 5A 6A",
    "6A 7A 8A 0A 1A 2A 9H 4H 5H 6H 7H 8H 0H 1H 2H 9A 4A 5A",
    "5A 6A 7A 8A 0A 1A 2A 3A 9H 5H 6H 7H 8H 0H 1H 2H 3H 9A",
    "4H 9H 6A 7A 8A 0A 1A 2A 3A 4A 9A 6H 7H 8H 0H 1H 2H 3H",
    "3H 4H 5H 9H 7A 8A 0A 1A 2A 3A 4A 5A 9A 7H 8H 0H 1H 2H",
    "2H 3H 4H 5H 6H 9H 8A 0A 1A 2A 3A 4A 5A 6A 9A 8H 0H 1H",
    "1H 2H 3H 4H 5H 6H 7H 9H 0A 1A 2A 3A 4A 5A 6A 7A 9A 0H",
    "0A 5A 1A 6A 2A 7A 3A 8A 4A 0H 5H 1H 6H 2H 7H 3H 8H 4H",
};

}  // namespace uttp::test
