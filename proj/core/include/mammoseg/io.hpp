#pragma once

#include <string>

namespace mammoseg {

/// Read a whole file as bytes. Throws ParseError if unreadable.
std::string read_file(const std::string& path);

/// Write via a temp file in the same directory, then rename into place.
void atomic_write_file(const std::string& path, std::string_view bytes);

}  // namespace mammoseg
