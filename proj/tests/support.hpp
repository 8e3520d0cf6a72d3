#pragma once

#include <string>

#include "hcb/filtration.hpp"

namespace hcb::test {

inline std::string fixture(const std::string& name) { return std::string(HCB_FIXTURE_DIR) + "/" + name; }

inline Filtration load(const std::string& name) { return parse_filtration_file(fixture(name)); }

inline SparseVector vec(std::vector<SparseVector::Entry> entries) {
  return SparseVector::from_entries(std::move(entries));
}

}  // namespace hcb::test
