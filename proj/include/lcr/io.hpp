#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lcr/crossing.hpp"
#include "lcr/geometry.hpp"

namespace lcr {

/// Point-set text format: one "x y" pair per line, each coordinate an integer
/// or "num/den"; '#' starts a comment; blank lines are skipped; an optional
/// first data line "n <count>" is checked against the number of points.
/// The result must be in general position.
PointSet parse_pointset(std::string_view text);

/// Inverse of parse_pointset. `labels`, when given, are written as trailing comments.
std::string serialize_pointset(const PointSet& points,
                               const std::vector<std::string>* labels = nullptr);

PointSet read_pointset_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

struct ReportOptions {
  bool profile = false;
  bool witness = false;
  bool certificate = false;
};

/// {"n", "lcr", "total_crossings", "formula_value", "meets_formula", and optionally
/// "profile", "witness", "certificate"}. The lcr is recomputed from the serialized
/// points before emission; a mismatch throws.
nlohmann::json build_report(const PointSet& points, const ReportOptions& options = {});

struct SvgOptions {
  std::vector<std::string> labels;  ///< per-point part names; empty for none
  std::string title;
};

/// Deterministic SVG rendering: points as labeled disks, edges as lines, and the
/// edges achieving a positive local crossing number highlighted.
std::string emit_svg(const PointSet& points, const CrossingProfile& profile,
                     const SvgOptions& options = {});

}  // namespace lcr
