#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "qedem/errors.hpp"
#include "qedem/vec3.hpp"

namespace qedem {

// Uniform Cartesian node grid: node (i,j,k) sits at origin + spacing*(i,j,k).
struct GridSpec {
  Vec3 origin{};
  double spacing = 0.0;
  std::array<int, 3> dims{0, 0, 0};

  std::size_t node_count() const {
    return static_cast<std::size_t>(dims[0]) * static_cast<std::size_t>(dims[1]) *
           static_cast<std::size_t>(dims[2]);
  }
  // x fastest, z slowest.
  std::size_t index(int i, int j, int k) const {
    return static_cast<std::size_t>(i) +
           static_cast<std::size_t>(dims[0]) *
               (static_cast<std::size_t>(j) + static_cast<std::size_t>(dims[1]) *
                                                  static_cast<std::size_t>(k));
  }
  Vec3 node(int i, int j, int k) const {
    return {origin.x + spacing * i, origin.y + spacing * j, origin.z + spacing * k};
  }
};

// Throws DomainError on non-positive spacing or dims < 1.
void validate(const GridSpec& spec);

// Sampled multi-component field on a grid. Values are stored node-major
// (all components of a node contiguous) in the node order of GridSpec::index.
struct GridField {
  GridSpec spec{};
  std::vector<std::string> component_names;
  std::vector<double> values;

  int components() const { return static_cast<int>(component_names.size()); }
  double& at(std::size_t node, int comp) {
    return values[node * component_names.size() + static_cast<std::size_t>(comp)];
  }
  double at(std::size_t node, int comp) const {
    return values[node * component_names.size() + static_cast<std::size_t>(comp)];
  }
};

GridField make_grid_field(const GridSpec& spec, std::vector<std::string> component_names);

}  // namespace qedem
