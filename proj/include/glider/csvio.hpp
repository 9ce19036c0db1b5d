#pragma once

#include "glider/sim.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace glider {

/// Serialize a double with 17 significant digits (lossless round trip).
std::string format_double(double v);

/// Write/read the CSV image of a run log.  Numeric cells use format_double;
/// the final "events" column carries semicolon-joined event codes.
void write_csv(const LogTable& table, std::ostream& os);
void write_csv_file(const LogTable& table, const std::filesystem::path& path);

LogTable read_csv(std::istream& is);          // throws std::runtime_error on malformed input
LogTable read_csv_file(const std::filesystem::path& path);

}  // namespace glider
