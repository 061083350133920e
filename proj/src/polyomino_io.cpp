#include <json.hpp>

#include "gridpoly/polyomino.hpp"

namespace gridpoly {

Polyomino parse_ascii(const std::string& text) {
  if (text.empty()) throw ParseError("empty input");
  if (text.back() != '\n') throw ParseError("missing trailing newline");

  std::vector<std::string> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i)
    if (text[i] == '\n') {
      lines.push_back(text.substr(start, i - start));
      start = i + 1;
    }

  int nrows = int(lines.size());
  std::vector<Cell> cells;
  for (int k = 0; k < nrows; ++k) {
    const std::string& line = lines[k];
    if (!line.empty() && line.back() == ' ')
      throw ParseError("trailing space on line " + std::to_string(k + 1));
    int y = nrows - k;   // top line first
    for (int i = 0; i < int(line.size()); ++i) {
      char ch = line[i];
      if (ch == '#')
        cells.push_back(Cell{{i + 1, y}});
      else if (ch != '.')
        throw ParseError(std::string("unexpected character '") + ch + "' on line " +
                         std::to_string(k + 1));
    }
  }
  if (cells.empty()) throw ParseError("no cells ('#') in input");
  return Polyomino::from_cells(std::move(cells));
}

std::string emit_ascii(const Polyomino& p) {
  const Interval& bb = p.bounding_box();
  std::string out;
  out.reserve(std::size_t(bb.hi.x) * std::size_t(bb.hi.y - 1));
  for (int y = bb.hi.y - 1; y >= 1; --y) {
    for (int x = 1; x < bb.hi.x; ++x)
      out += p.contains_cell(Cell{{x, y}}) ? '#' : '.';
    out += '\n';
  }
  return out;
}

Polyomino parse_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array())
    throw ParseError("expected an object with a \"cells\" array");
  std::vector<Cell> cells;
  for (const auto& entry : j["cells"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer())
      throw ParseError("each cell must be an [x,y] integer pair");
    cells.push_back(Cell{{entry[0].get<int>(), entry[1].get<int>()}});
  }
  if (cells.empty()) throw ParseError("\"cells\" is empty");
  try {
    return Polyomino::from_cells(std::move(cells));
  } catch (const InputError& e) {
    throw ParseError(e.what());
  }
}

std::string emit_json_text(const Polyomino& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (Cell c : p.cells()) arr.push_back({c.lo.x, c.lo.y});
  nlohmann::json j;
  j["cells"] = std::move(arr);
  return j.dump() + "\n";
}

Polyomino parse_any(const std::string& text) {
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
    return ch == '{' ? parse_json_text(text) : parse_ascii(text);
  }
  throw ParseError("empty input");
}

}  // namespace gridpoly
