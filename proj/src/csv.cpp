#include "qedem/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qedem/errors.hpp"

namespace qedem {

std::string format_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12e", v);
  return buf;
}

namespace {

std::ofstream open_for_write(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot open for writing: " + path);
  return f;
}

}  // namespace

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream f = open_for_write(path);
  f << header << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) f << ",";
      f << format_sci(row[i]);
    }
    f << "\n";
  }
}

void write_grid_csv(const std::string& path, const GridField& field) {
  std::ofstream f = open_for_write(path);
  f << "x,y,z";
  for (const auto& name : field.component_names) f << "," << name;
  f << "\n";
  const auto& spec = field.spec;
  for (int k = 0; k < spec.dims[2]; ++k) {
    for (int j = 0; j < spec.dims[1]; ++j) {
      for (int i = 0; i < spec.dims[0]; ++i) {
        const Vec3 x = spec.node(i, j, k);
        const std::size_t n = spec.index(i, j, k);
        f << format_sci(x.x) << "," << format_sci(x.y) << "," << format_sci(x.z);
        for (int c = 0; c < field.components(); ++c) f << "," << format_sci(field.at(n, c));
        f << "\n";
      }
    }
  }
}

std::vector<std::vector<double>> read_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open for reading: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  bool first = true;
  while (std::getline(f, line)) {
    if (first) {  // header
      first = false;
      continue;
    }
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(cell, &used);
      } catch (const std::exception&) {
        throw ConfigError("malformed numeric cell in " + path + ": '" + cell + "'");
      }
      if (used != cell.size()) {
        throw ConfigError("malformed numeric cell in " + path + ": '" + cell + "'");
      }
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace qedem
