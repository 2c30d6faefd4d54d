#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "qedem/errors.hpp"
#include "qedem/vec3.hpp"

namespace qedem {

// Line-oriented "key = value" configuration with [section] headers.
// '#' starts a comment, blank lines are ignored, keys outside a section or
// duplicated within one are errors. Values stay strings until a typed getter
// parses them; getters report the section and key on malformed input.
class ConfigFile {
 public:
  struct Entry {
    std::string key;
    std::string value;
    int line = 0;
  };
  struct Section {
    std::string name;
    std::vector<Entry> entries;
    int line = 0;
  };

  static ConfigFile parse_file(const std::string& path);
  static ConfigFile parse_string(const std::string& text, const std::string& origin);

  const std::vector<Section>& sections() const { return sections_; }
  bool has_section(const std::string& name) const;
  bool has_key(const std::string& section, const std::string& key) const;

  // Sections whose name starts with `prefix`, in file order.
  std::vector<const Section*> sections_with_prefix(const std::string& prefix) const;

  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback) const;
  double get_double(const std::string& section, const std::string& key, double fallback) const;
  int get_int(const std::string& section, const std::string& key, int fallback) const;
  Vec3 get_vec3(const std::string& section, const std::string& key, const Vec3& fallback) const;
  std::array<int, 3> get_int3(const std::string& section, const std::string& key,
                              const std::array<int, 3>& fallback) const;
  // "re,im" pair.
  std::complex<double> get_complex(const std::string& section, const std::string& key,
                                   const std::complex<double>& fallback) const;

  std::string origin() const { return origin_; }

 private:
  std::vector<Section> sections_;
  std::string origin_;
};

// Allowed key sets per section. A section entry may be an exact name
// ("grid") or a prefix ("source." matching source.1, source.2, ...).
struct SchemaSection {
  std::string name;
  bool is_prefix = false;
  std::vector<std::string> keys;
};

// Rejects unknown sections and unknown keys with a ConfigError naming the
// offender. This is what makes typos fail loudly instead of silently
// falling back to defaults.
void enforce_schema(const ConfigFile& cfg, const std::vector<SchemaSection>& schema);

// Free-standing value parsers, exposed for reuse.
double parse_double(const std::string& text);
int parse_int(const std::string& text);
Vec3 parse_vec3(const std::string& text);

}  // namespace qedem
