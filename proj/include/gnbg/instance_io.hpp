#pragma once

#include <filesystem>
#include <iosfwd>

#include "gnbg/problem.hpp"

namespace gnbg {

// Instance files are self-describing JSON documents tagged
// "gnbg-instance/1". Every parameter is stored, including the angle matrix
// and the rotation derived from it, so a file alone fully reproduces the
// problem. Numbers round-trip bit-exactly through the decimal text.
inline constexpr const char* kInstanceSchema = "gnbg-instance/1";

void write_instance(const Instanced& inst, std::ostream& os);
void write_instance(const Instanced& inst, const std::filesystem::path& path);

// Throws std::runtime_error naming the offending field on malformed input and
// std::invalid_argument when a loaded instance violates an invariant (bad
// bounds, non-orthogonal rotation, ...).
Instanced read_instance(std::istream& is);
Instanced read_instance(const std::filesystem::path& path);

}  // namespace gnbg
