#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grsq/code.hpp"
#include "grsq/rat.hpp"

namespace grsq {

/// Comma-separated canonical rationals; whitespace around entries ignored.
std::vector<Rat> parse_rational_list(std::string_view text);
std::string format_rational_list(std::span<const Rat> xs);

/// Symbol streams: one canonical rational per line; commas also split,
/// blank lines and '#' comments are skipped.
std::vector<Rat> read_symbols(std::istream& is);
std::vector<Rat> read_symbols_file(const std::string& path);
void write_symbols(std::ostream& os, std::span<const Rat> xs);
void write_symbols_file(const std::string& path, std::span<const Rat> xs);

/// Code specification document: key-value lines n, k, preset, alphas, and
/// v for the custom preset (v' is derived on load).
void save_code(std::ostream& os, const GrsCode& code);
void save_code_file(const std::string& path, const GrsCode& code);
GrsCode load_code(std::istream& is);
GrsCode load_code_file(const std::string& path);

}  // namespace grsq
