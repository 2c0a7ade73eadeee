#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ctcseg {

struct DigitRunTooLarge : std::runtime_error {
    std::string digits;
    explicit DigitRunTooLarge(std::string run)
        : std::runtime_error("digit run exceeds supported magnitude (max 999999999999): " + run),
          digits(std::move(run)) {}
};

// Spells n as a Ukrainian cardinal, following num2words lang_UK output:
// nominative, masculine units, feminine agreement on the thousands group.
// Supported range 0..999'999'999'999.
std::string uk_cardinal(std::uint64_t n);

}  // namespace ctcseg
