#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace graphhash {

// 16-byte message digest; ordered lexicographically by byte.
struct Digest128 {
    std::array<std::uint8_t, 16> bytes{};

    std::string hex() const;

    friend auto operator<=>(const Digest128&, const Digest128&) = default;
    friend bool operator==(const Digest128&, const Digest128&) = default;
};

// RFC 1321 MD5.
Digest128 md5(std::span<const std::uint8_t> message);
Digest128 md5(std::string_view message);

// The single hashing seam used by the vertex coder and graph hash. Swapping
// the function behind it changes every digest the library produces.
inline Digest128 digest(std::span<const std::uint8_t> message) { return md5(message); }

}  // namespace graphhash
