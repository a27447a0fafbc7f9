#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cayley/marked/marked_group.hpp"

namespace cayley {

/// A declaratively specified family: members with their printed indices and
/// the declared Cayley limit when the construction carries one. Derived limit
/// markings (not printed in the source constructions) are flagged.
struct FamilyInstance {
  std::string name;
  std::vector<MarkedGroup> members;
  std::vector<std::uint64_t> indices;
  std::optional<MarkedGroup> limit;
  bool limit_marking_derived = false;
  std::string notes;  // convention notes carried into reports
};

/// Builds a family from a JSON spec {"name": ..., parameters...}. Known
/// names: cyclic, selberg, sl, slz, wreath, absorption, sym_encoding_cyclic,
/// upper_triangular_selberg. Unknown keys are rejected.
FamilyInstance build_family(const std::string& json_spec);

/// Declarative experiment form {"family": name, "params": {...},
/// "radii": [...], "limit_check": bool}; the flat {"name": ...} form is also
/// accepted, with defaults radii = [10] and limit_check = on.
struct FamilySpec {
  FamilyInstance instance;
  std::vector<std::uint32_t> radii;
  bool limit_check = true;
};
FamilySpec load_family_spec(const std::string& json_spec);

}  // namespace cayley
