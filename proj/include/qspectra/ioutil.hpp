#ifndef QSPECTRA_IOUTIL_HPP
#define QSPECTRA_IOUTIL_HPP

#include <cstdint>
#include <string>

namespace qspectra::ioutil {

/// Shortest-faithful decimal with 17 significant digits, '.' separator.
std::string format_g17(double v);

/// FNV-1a 64-bit digest, hex-encoded (manifest file digests).
std::string fnv1a64_hex(const std::string& bytes);

void write_text_file(const std::string& path, const std::string& content);

} // namespace qspectra::ioutil

#endif
