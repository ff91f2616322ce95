#include "cli/report.hpp"

#include <algorithm>

#include <json.hpp>

#include "casimir/format.hpp"

namespace casimir::cli {

std::string render(const Value& v) {
  struct Visitor {
    std::string operator()(double d) const { return format_double(d); }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  };
  return std::visit(Visitor{}, v);
}

void Record::write_json(std::ostream& os) const {
  os << '{';
  bool first = true;
  for (const auto& [key, value] : entries_) {
    if (!first) os << ',';
    first = false;
    os << nlohmann::json(key).dump() << ':';
    if (const auto* s = std::get_if<std::string>(&value)) {
      os << nlohmann::json(*s).dump();
    } else {
      os << render(value);
    }
  }
  os << "}\n";
}

void Record::write_text(std::ostream& os) const {
  std::size_t width = 0;
  for (const auto& e : entries_) width = std::max(width, e.first.size());
  for (const auto& [key, value] : entries_) {
    os << key << std::string(width - key.size() + 2, ' ') << render(value) << '\n';
  }
}

void Record::write_csv_metadata(std::ostream& os) const {
  for (const auto& [key, value] : entries_) os << "# " << key << ": " << render(value) << '\n';
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace casimir::cli
