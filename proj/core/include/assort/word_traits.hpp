#pragma once

#include <concepts>
#include <cstdint>
#include <limits>

namespace assort {

// Keys and integers are fixed-width unsigned machine words. The width is a
// compile-time property so that multi-pass behaviour can be exercised at desk
// scale (w = 8) by the same code that runs at w = 64.
template <typename T>
concept UnsignedWord =
    std::same_as<T, std::uint8_t> || std::same_as<T, std::uint16_t> ||
    std::same_as<T, std::uint32_t> || std::same_as<T, std::uint64_t>;

template <UnsignedWord W>
inline constexpr unsigned word_bits = static_cast<unsigned>(sizeof(W) * 8);

namespace detail {

template <UnsignedWord W>
struct double_word;
template <>
struct double_word<std::uint8_t> { using type = std::uint16_t; };
template <>
struct double_word<std::uint16_t> { using type = std::uint32_t; };
template <>
struct double_word<std::uint32_t> { using type = std::uint64_t; };
#if defined(__SIZEOF_INT128__)
template <>
struct double_word<std::uint64_t> { using type = unsigned __int128; };
#else
#error "assort requires a 128-bit integer type for 64-bit words"
#endif

}  // namespace detail

// Interval bounds such as delta + r*n can exceed w bits; every such
// expression is evaluated in this widened type, never in W itself.
template <UnsignedWord W>
using double_word_t = typename detail::double_word<W>::type;

template <UnsignedWord W>
inline constexpr W word_max = std::numeric_limits<W>::max();

// 2^(w-1): value of the tag bit, and the size cap of the modifiable variant.
template <UnsignedWord W>
inline constexpr W half_universe = static_cast<W>(W{1} << (word_bits<W> - 1));

}  // namespace assort
