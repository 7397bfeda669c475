#include "thinset/manifest.hpp"

namespace thinset {

const std::string& RunManifest::get(const std::string& key) const {
  auto it = fields_.find(key);
  if (it == fields_.end()) throw PreconditionError("manifest is missing '" + key + "'");
  return it->second;
}

std::string RunManifest::get_or(const std::string& key,
                                const std::string& fallback) const {
  auto it = fields_.find(key);
  return it == fields_.end() ? fallback : it->second;
}

std::uint64_t RunManifest::get_u64(const std::string& key) const {
  try {
    return std::stoull(get(key));
  } catch (const std::logic_error&) {
    throw PreconditionError("manifest field '" + key + "' is not a number");
  }
}

std::uint64_t RunManifest::get_u64_or(const std::string& key,
                                      std::uint64_t fallback) const {
  if (!has(key)) return fallback;
  return get_u64(key);
}

std::string records_escape(std::string_view value) {
  std::string out;
  out.reserve(value.size());
  for (char c : value) {
    switch (c) {
      case '%':
        out += "%25";
        break;
      case ' ':
        out += "%20";
        break;
      case '=':
        out += "%3D";
        break;
      case '\n':
        out += "%0A";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string records_unescape(std::string_view value) {
  std::string out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (value[i] == '%' && i + 2 < value.size()) {
      std::string hex(value.substr(i + 1, 2));
      out += static_cast<char>(std::stoi(hex, nullptr, 16));
      i += 2;
    } else {
      out += value[i];
    }
  }
  return out;
}

std::string RunManifest::to_line() const {
  std::string out = "manifest";
  for (const auto& [key, value] : fields_)
    out += " " + records_escape(key) + "=" + records_escape(value);
  return out;
}

RunManifest RunManifest::from_line(std::string_view line) {
  RunManifest m;
  std::size_t pos = 0;
  auto next_token = [&]() -> std::string_view {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ') ++pos;
    return line.substr(start, pos - start);
  };
  std::string_view head = next_token();
  if (head != "manifest")
    throw GrammarError("manifest line must start with 'manifest'", 0);
  while (true) {
    std::string_view token = next_token();
    if (token.empty()) break;
    std::size_t eq = token.find('=');
    if (eq == std::string_view::npos)
      throw GrammarError("manifest token without '='", pos);
    m.set(records_unescape(token.substr(0, eq)),
          records_unescape(token.substr(eq + 1)));
  }
  return m;
}

void RecordsWriter::header(const RunManifest& manifest) {
  if (structured_) {
    out_ << "!thinset-records 1\n";
    out_ << manifest.to_line() << "\n";
  } else {
    out_ << "# " << manifest.to_line() << "\n";
  }
}

void RecordsWriter::record(std::string_view type,
                           const std::vector<std::pair<std::string, std::string>>& kv) {
  if (structured_) {
    out_ << type;
    for (const auto& [key, value] : kv)
      out_ << ' ' << records_escape(key) << '=' << records_escape(value);
    out_ << '\n';
  } else {
    out_ << type << ":";
    for (const auto& [key, value] : kv) out_ << ' ' << key << '=' << value;
    out_ << '\n';
  }
}

void RecordsWriter::text(std::string_view line) {
  if (!structured_) out_ << line << '\n';
}

void RecordsWriter::footer(int exit_code) {
  if (structured_)
    out_ << "exit code=" << exit_code << "\n";
  else
    out_ << "# exit " << exit_code << "\n";
}

}  // namespace thinset
