#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qseries/identity.hpp"

namespace qseries {

/// Seeds for the randomized catalog families. Changing them changes the catalog.
inline constexpr std::uint32_t kTripleProductSeed = 20240801;
inline constexpr std::uint32_t kLemmaSeed = 20240802;

/// Every built-in identity, in a fixed order. Built once, on first use.
const std::vector<Identity>& catalog();

/// nullptr when no entry has that id.
const Identity* find_identity(std::string_view id);

/// Catalog ids closest to `id` by edit distance (prefix matches first), at most `limit`.
std::vector<std::string> near_matches(std::string_view id, std::size_t limit = 5);

/// Monomial exponent pairs (a, b) drawn from {1/2, 1, ..., 8}; with `ordered`, a < b.
std::vector<std::pair<Rational, Rational>> random_monomial_pairs(std::uint32_t seed, int count, bool ordered);

}  // namespace qseries
