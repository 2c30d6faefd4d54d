#include "qedem/grid.hpp"

namespace qedem {

void validate(const GridSpec& spec) {
  if (!(spec.spacing > 0.0)) throw DomainError("GridSpec: spacing must be positive");
  for (int d = 0; d < 3; ++d) {
    if (spec.dims[static_cast<std::size_t>(d)] < 1) {
      throw DomainError("GridSpec: dims must be >= 1");
    }
  }
}

GridField make_grid_field(const GridSpec& spec, std::vector<std::string> component_names) {
  validate(spec);
  GridField f;
  f.spec = spec;
  f.component_names = std::move(component_names);
  f.values.assign(spec.node_count() * f.component_names.size(), 0.0);
  return f;
}

}  // namespace qedem
