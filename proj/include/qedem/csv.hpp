#pragma once

#include <string>
#include <vector>

#include "qedem/grid.hpp"

namespace qedem {

// All numeric output goes through one formatter ("%.12e") so that repeated
// runs produce byte-identical artifacts.
std::string format_sci(double v);

// Header line plus one row per entry; every cell formatted with format_sci.
void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& rows);

// Grid CSV: header "x,y,z,<component names>", one row per node in index order.
void write_grid_csv(const std::string& path, const GridField& field);

// Minimal CSV reader for the files this project writes: skips the header,
// splits on commas, parses doubles. Throws ConfigError on malformed input.
std::vector<std::vector<double>> read_csv(const std::string& path);

}  // namespace qedem
