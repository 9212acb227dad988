#pragma once

#include "apolar/strata.hpp"

#include <string>
#include <vector>

namespace apolar {

struct ZNode {
  std::string name;
  TwistComplex cls;
  ChargePoint z;
  /// Reference objects are drawn as arrows only; they are not candidate kernels.
  bool reference = false;
  NodeVerdict verdict;
};

/// Supported: n = 1 with 1 <= d <= 12, n = 2 with 1 <= d <= 4.
bool zdiagram_supported(int n, int d);

/// Nodes of the charge diagram for degree-d socles on P^n, evaluated at 0
/// (d even) or -1/2 (d odd).
std::vector<ZNode> zdiagram(int n, int d);

std::string to_svg(const std::vector<ZNode>& nodes, int n, int d);

}  // namespace apolar
