#pragma once
#include <string>

namespace halasz {

// Writes content to path atomically (temp file in the same directory, then
// rename). Throws resource_error on IO failure.
void atomic_write_file(const std::string& path, const std::string& content);

// "# generated <ISO-8601 UTC>\n", or "" when suppressed.
std::string timestamp_header(bool suppress);

// ISO-8601 UTC now.
std::string iso_now();

} // namespace halasz
