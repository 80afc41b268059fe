#pragma once

#include <iosfwd>
#include <string>

#include "rotno/lift.hpp"

namespace rotno {

// Map file format: {"segments": [{"start": "a/b", "value": "c/d",
// "slope": "e/f", "intercept": "g/h"}, ...]} with rationals as "p/q" or "p"
// strings, segments sorted by start, starts in [0,1).  Parsing is exact;
// any non-rational token raises ValidationError.
Lift read_map(std::istream& is);
Lift read_map_file(const std::string& path);

// Writes the canonical form: every rational as "p/q", two-space indent.
void write_map(std::ostream& os, const Lift& lift);
void write_map_file(const std::string& path, const Lift& lift);

}  // namespace rotno
