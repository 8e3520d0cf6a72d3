#include <algorithm>

#include "hcb/barcode.hpp"

namespace hcb {

std::vector<Bar> Barcode::in_degree(int p) const {
  std::vector<Bar> out;
  std::copy_if(bars.begin(), bars.end(), std::back_inserter(out),
               [p](const Bar& bar) { return bar.degree == p; });
  return out;
}

int Barcode::max_degree() const {
  int top = -1;
  for (const auto& bar : bars) top = std::max(top, bar.degree);
  return top;
}

}  // namespace hcb
