#include "lcr/io.hpp"

#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

#include "lcr/error.hpp"
#include "lcr/formula.hpp"
#include "lcr/separation.hpp"

namespace lcr {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

PointSet parse_pointset(std::string_view text) {
  PointSet points;
  std::optional<long> declared;
  bool seen_data = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!seen_data && tokens[0] == "n") {
      seen_data = true;
      if (tokens.size() != 2) throw Error(where + "expected 'n <count>'");
      try {
        std::size_t used = 0;
        declared = std::stol(tokens[1], &used);
        if (used != tokens[1].size() || *declared < 0) throw Error("");
      } catch (...) {
        throw Error(where + "malformed point count '" + tokens[1] + "'");
      }
      continue;
    }
    seen_data = true;
    if (tokens.size() != 2) throw Error(where + "expected two coordinates");
    try {
      points.add(parse_rational(tokens[0]), parse_rational(tokens[1]));
    } catch (const Error& e) {
      throw Error(where + e.what());
    }
  }
  if (declared && *declared != points.size()) {
    throw Error("declared " + std::to_string(*declared) + " points but found " +
                std::to_string(points.size()));
  }
  if (auto bad = general_position_violation(points)) throw Error(*bad);
  return points;
}

std::string serialize_pointset(const PointSet& points, const std::vector<std::string>* labels) {
  std::string out = "n " + std::to_string(points.size()) + "\n";
  for (const auto& p : points) {
    out += to_string(p.x) + " " + to_string(p.y);
    if (labels && static_cast<std::size_t>(p.id) < labels->size()) {
      out += "  # " + (*labels)[static_cast<std::size_t>(p.id)];
    }
    out += "\n";
  }
  return out;
}

PointSet read_pointset_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "': file not found or unreadable");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_pointset(buf.str());
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error("write to '" + path.string() + "' failed");
}

nlohmann::json build_report(const PointSet& points, const ReportOptions& options) {
  const auto profile = crossing_profile(points);
  const int lcr = profile.local_crossing_number();
  const auto formula = lcr_formula(points.size()).value;

  // The number reported must be reproducible from the file a reader would get.
  const auto reparsed = parse_pointset(serialize_pointset(points));
  if (local_crossing_number(reparsed) != lcr) {
    throw Error("report lcr does not match recomputation from serialized points");
  }

  nlohmann::json j = {{"n", points.size()},
                      {"lcr", lcr},
                      {"total_crossings", profile.total_crossings()},
                      {"formula_value", formula},
                      {"meets_formula", lcr == formula}};
  if (options.profile) j["profile"] = to_json(profile);
  if (points.size() >= 3) {
    if (options.witness) j["witness"] = to_json(find_separation_witness(points));
    if (options.certificate) j["certificate"] = to_json(lemma_lower_bound(points));
  }
  return j;
}

// -- SVG ----------------------------------------------------------------------

namespace {

constexpr int kCanvas = 1000;
constexpr int kMargin = 50;

const char* part_color(std::size_t index) {
  static constexpr const char* kPalette[] = {"#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e",
                                             "#8c564b", "#e377c2", "#17becf", "#bcbd22",
                                             "#7f7f7f", "#393b79"};
  return kPalette[index % (sizeof kPalette / sizeof kPalette[0])];
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string emit_svg(const PointSet& points, const CrossingProfile& profile,
                     const SvgOptions& options) {
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas
      << "\" width=\"" << kCanvas << "\" height=\"" << kCanvas << "\">";
  if (points.empty()) {
    svg << "</svg>\n";
    return svg.str();
  }
  svg << '\n';
  if (!options.title.empty()) svg << "<title>" << escape(options.title) << "</title>\n";

  Rational min_x = points[0].x, max_x = points[0].x, min_y = points[0].y, max_y = points[0].y;
  for (const auto& p : points) {
    if (p.x < min_x) min_x = p.x;
    if (p.x > max_x) max_x = p.x;
    if (p.y < min_y) min_y = p.y;
    if (p.y > max_y) max_y = p.y;
  }
  Rational span = max_x - min_x;
  if (max_y - min_y > span) span = max_y - min_y;
  const Rational scale = span == 0 ? Rational(1) : Rational(kCanvas - 2 * kMargin) / span;
  // Center the bounding box; y grows downward in SVG.
  const Rational off_x = Rational(kCanvas) / 2 - (min_x + max_x) / 2 * scale;
  const Rational off_y = Rational(kCanvas) / 2 + (min_y + max_y) / 2 * scale;
  auto sx = [&](const Point& p) { return to_decimal(off_x + p.x * scale); };
  auto sy = [&](const Point& p) { return to_decimal(off_y - p.y * scale); };

  const int lcr = profile.local_crossing_number();
  svg << "<g class=\"edges\">\n";
  for (const Edge& e : profile.edges()) {
    const bool max = lcr > 0 && profile.count(e) == lcr;
    const auto& a = points[e.u];
    const auto& b = points[e.v];
    svg << "<line class=\"edge" << (max ? " max" : "") << "\" x1=\"" << sx(a) << "\" y1=\""
        << sy(a) << "\" x2=\"" << sx(b) << "\" y2=\"" << sy(b) << "\" stroke=\""
        << (max ? "#d62728" : "#c8c8c8") << "\" stroke-width=\"" << (max ? "2.5" : "0.8")
        << "\" data-crossings=\"" << profile.count(e) << "\"/>\n";
  }
  svg << "</g>\n";

  std::map<std::string, std::size_t> part_index;
  for (const auto& label : options.labels) part_index.try_emplace(label, part_index.size());

  svg << "<g class=\"points\">\n";
  for (const auto& p : points) {
    const auto id = static_cast<std::size_t>(p.id);
    const bool labeled = id < options.labels.size();
    const std::string part = labeled ? options.labels[id] : "";
    svg << "<circle class=\"point" << (labeled ? " part-" + escape(part) : "") << "\" cx=\""
        << sx(p) << "\" cy=\"" << sy(p) << "\" r=\"6\" fill=\""
        << (labeled ? part_color(part_index.at(part)) : "#000000") << "\"/>\n";
    svg << "<text x=\"" << sx(p) << "\" y=\"" << sy(p)
        << "\" dx=\"8\" dy=\"-8\" font-size=\"14\" font-family=\"sans-serif\">" << p.id
        << (labeled ? " " + escape(part) : "") << "</text>\n";
  }
  svg << "</g>\n";
  svg << "<text x=\"" << kMargin << "\" y=\"" << kCanvas - 15
      << "\" font-size=\"16\" font-family=\"sans-serif\">n=" << points.size() << " lcr=" << lcr
      << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace lcr
