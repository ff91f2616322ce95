#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace casimir::cli {

using Value = std::variant<double, std::int64_t, std::string, bool>;

/// Ordered key/value record rendered as a flat JSON object, aligned text or
/// `# key: value` CSV metadata. Doubles always carry 17 significant digits.
class Record {
 public:
  Record& add(std::string key, double v) { return put(std::move(key), v); }
  Record& add(std::string key, std::int64_t v) { return put(std::move(key), v); }
  Record& add(std::string key, std::uint64_t v) {
    return put(std::move(key), static_cast<std::int64_t>(v));
  }
  Record& add(std::string key, std::string v) { return put(std::move(key), std::move(v)); }
  Record& add(std::string key, const char* v) { return put(std::move(key), std::string(v)); }
  Record& add(std::string key, bool v) { return put(std::move(key), v); }

  void write_json(std::ostream& os) const;
  void write_text(std::ostream& os) const;
  void write_csv_metadata(std::ostream& os) const;

  const std::vector<std::pair<std::string, Value>>& entries() const { return entries_; }

 private:
  Record& put(std::string key, Value v) {
    entries_.emplace_back(std::move(key), std::move(v));
    return *this;
  }
  std::vector<std::pair<std::string, Value>> entries_;
};

std::string render(const Value& v);

/// RFC 4180 quoting when the field contains a separator, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace casimir::cli
