#pragma once

#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "thinset/errors.hpp"

namespace thinset {

// Everything that determines a run, serialized into every report header.
// Replaying a manifest reproduces byte-identical structured output.
class RunManifest {
 public:
  void set(const std::string& key, std::string value) { fields_[key] = std::move(value); }
  void set(const std::string& key, std::uint64_t value) {
    fields_[key] = std::to_string(value);
  }
  bool has(const std::string& key) const { return fields_.count(key) != 0; }
  const std::string& get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& fallback) const;
  std::uint64_t get_u64(const std::string& key) const;
  std::uint64_t get_u64_or(const std::string& key, std::uint64_t fallback) const;

  const std::map<std::string, std::string>& fields() const { return fields_; }

  std::string to_line() const;  // "manifest k=v k=v ..." sorted, %-escaped
  static RunManifest from_line(std::string_view line);

 private:
  std::map<std::string, std::string> fields_;
};

std::string records_escape(std::string_view value);
std::string records_unescape(std::string_view value);

// Line-delimited records with a versioned header; the structured output
// format of the CLI.
class RecordsWriter {
 public:
  explicit RecordsWriter(std::ostream& out, bool structured)
      : out_(out), structured_(structured) {}

  bool structured() const { return structured_; }

  void header(const RunManifest& manifest);
  void record(std::string_view type,
              const std::vector<std::pair<std::string, std::string>>& kv);
  void text(std::string_view line);  // text mode only
  void footer(int exit_code);

 private:
  std::ostream& out_;
  bool structured_;
};

}  // namespace thinset
