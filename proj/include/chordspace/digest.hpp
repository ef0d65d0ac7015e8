#ifndef CHORDSPACE_DIGEST_HPP
#define CHORDSPACE_DIGEST_HPP

#include <string>
#include <string_view>

namespace chordspace {

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

}  // namespace chordspace

#endif  // CHORDSPACE_DIGEST_HPP
