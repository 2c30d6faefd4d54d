#include "qedem/config.hpp"

#include <fstream>
#include <sstream>

namespace qedem {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

}  // namespace

double parse_double(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ConfigError("not a number: '" + text + "'");
  }
  if (used != text.size()) throw ConfigError("not a number: '" + text + "'");
  return v;
}

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw ConfigError("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw ConfigError("not an integer: '" + text + "'");
  return v;
}

Vec3 parse_vec3(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw ConfigError("expected 3 comma-separated numbers: '" + text + "'");
  return {parse_double(parts[0]), parse_double(parts[1]), parse_double(parts[2])};
}

ConfigFile ConfigFile::parse_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file: " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_string(buf.str(), path);
}

ConfigFile ConfigFile::parse_string(const std::string& text, const std::string& origin) {
  ConfigFile cfg;
  cfg.origin_ = origin;
  std::stringstream ss(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(ss, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError(origin + ":" + std::to_string(line_no) + ": malformed section header");
      }
      const std::string name = trim(line.substr(1, line.size() - 2));
      if (name.empty()) {
        throw ConfigError(origin + ":" + std::to_string(line_no) + ": empty section name");
      }
      for (const auto& s : cfg.sections_) {
        if (s.name == name) {
          throw ConfigError(origin + ":" + std::to_string(line_no) + ": duplicate section [" +
                            name + "]");
        }
      }
      cfg.sections_.push_back(Section{name, {}, line_no});
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(origin + ":" + std::to_string(line_no) +
                        ": expected 'key = value' or '[section]'");
    }
    if (cfg.sections_.empty()) {
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": key outside any section");
    }
    Entry entry;
    entry.key = trim(line.substr(0, eq));
    entry.value = trim(line.substr(eq + 1));
    entry.line = line_no;
    if (entry.key.empty()) {
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": empty key");
    }
    auto& section = cfg.sections_.back();
    for (const auto& e : section.entries) {
      if (e.key == entry.key) {
        throw ConfigError(origin + ":" + std::to_string(line_no) + ": duplicate key '" +
                          entry.key + "' in [" + section.name + "]");
      }
    }
    section.entries.push_back(std::move(entry));
  }
  return cfg;
}

bool ConfigFile::has_section(const std::string& name) const {
  for (const auto& s : sections_) {
    if (s.name == name) return true;
  }
  return false;
}

bool ConfigFile::has_key(const std::string& section, const std::string& key) const {
  for (const auto& s : sections_) {
    if (s.name != section) continue;
    for (const auto& e : s.entries) {
      if (e.key == key) return true;
    }
  }
  return false;
}

std::vector<const ConfigFile::Section*> ConfigFile::sections_with_prefix(
    const std::string& prefix) const {
  std::vector<const Section*> out;
  for (const auto& s : sections_) {
    if (s.name.rfind(prefix, 0) == 0) out.push_back(&s);
  }
  return out;
}

namespace {

const std::string* find_value(const std::vector<ConfigFile::Section>& sections,
                              const std::string& section, const std::string& key) {
  for (const auto& s : sections) {
    if (s.name != section) continue;
    for (const auto& e : s.entries) {
      if (e.key == key) return &e.value;
    }
  }
  return nullptr;
}

[[noreturn]] void rethrow_with_location(const std::string& section, const std::string& key,
                                        const ConfigError& err) {
  throw ConfigError("[" + section + "] " + key + ": " + err.what());
}

}  // namespace

std::string ConfigFile::get_string(const std::string& section, const std::string& key,
                                   const std::string& fallback) const {
  const std::string* v = find_value(sections_, section, key);
  return v ? *v : fallback;
}

double ConfigFile::get_double(const std::string& section, const std::string& key,
                              double fallback) const {
  const std::string* v = find_value(sections_, section, key);
  if (!v) return fallback;
  try {
    return parse_double(*v);
  } catch (const ConfigError& e) {
    rethrow_with_location(section, key, e);
  }
}

int ConfigFile::get_int(const std::string& section, const std::string& key, int fallback) const {
  const std::string* v = find_value(sections_, section, key);
  if (!v) return fallback;
  try {
    return parse_int(*v);
  } catch (const ConfigError& e) {
    rethrow_with_location(section, key, e);
  }
}

Vec3 ConfigFile::get_vec3(const std::string& section, const std::string& key,
                          const Vec3& fallback) const {
  const std::string* v = find_value(sections_, section, key);
  if (!v) return fallback;
  try {
    return parse_vec3(*v);
  } catch (const ConfigError& e) {
    rethrow_with_location(section, key, e);
  }
}

std::array<int, 3> ConfigFile::get_int3(const std::string& section, const std::string& key,
                                        const std::array<int, 3>& fallback) const {
  const std::string* v = find_value(sections_, section, key);
  if (!v) return fallback;
  try {
    const auto parts = split(*v, ',');
    if (parts.size() != 3) throw ConfigError("expected 3 comma-separated integers");
    return {parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2])};
  } catch (const ConfigError& e) {
    rethrow_with_location(section, key, e);
  }
}

std::complex<double> ConfigFile::get_complex(const std::string& section, const std::string& key,
                                             const std::complex<double>& fallback) const {
  const std::string* v = find_value(sections_, section, key);
  if (!v) return fallback;
  try {
    const auto parts = split(*v, ',');
    if (parts.size() != 2) throw ConfigError("expected 're,im'");
    return {parse_double(parts[0]), parse_double(parts[1])};
  } catch (const ConfigError& e) {
    rethrow_with_location(section, key, e);
  }
}

void enforce_schema(const ConfigFile& cfg, const std::vector<SchemaSection>& schema) {
  for (const auto& section : cfg.sections()) {
    const SchemaSection* match = nullptr;
    for (const auto& rule : schema) {
      const bool hit = rule.is_prefix ? section.name.rfind(rule.name, 0) == 0
                                      : section.name == rule.name;
      if (hit) {
        match = &rule;
        break;
      }
    }
    if (!match) {
      throw ConfigError(cfg.origin() + ": unknown section [" + section.name + "]");
    }
    for (const auto& entry : section.entries) {
      bool known = false;
      for (const auto& k : match->keys) {
        if (k == entry.key) {
          known = true;
          break;
        }
      }
      if (!known) {
        throw ConfigError(cfg.origin() + ":" + std::to_string(entry.line) + ": unknown key '" +
                          entry.key + "' in [" + section.name + "]");
      }
    }
  }
}

}  // namespace qedem
