#pragma once

#include <iosfwd>
#include <string>

#include "mosaic/dperm.hpp"
#include "mosaic/gentree.hpp"
#include "mosaic/geometry.hpp"

namespace mosaic {

/// {"dim": d, "bounds": {"min": [...], "max": [...]}, "blocks": [...]}.
/// Deterministic field order; blocks in identifier order.
std::string floorplan_to_json(const Floorplan& fp);

/// Parse and validate. Malformed JSON or missing fields throw ParseError;
/// validation failures propagate as their DomainError subtypes.
Floorplan floorplan_from_json(const std::string& text);

/// d-1 lines, one space-separated 1-based permutation of [n] per line.
std::string permutation_to_text(const DPermutation& p);

/// Accepts the line format above, and for n <= 9 the compact one-line form
/// "12435|34125". Throws ParseError.
DPermutation permutation_from_text(const std::string& text);

/// Line-oriented checkpoint of a counting frontier: a header followed by one
/// sorted "label count" record per line.
void save_frontier(const Frontier& f, std::ostream& os);
Frontier load_frontier(std::istream& is);
void save_frontier_file(const Frontier& f, const std::string& path);
Frontier load_frontier_file(const std::string& path);

}  // namespace mosaic
