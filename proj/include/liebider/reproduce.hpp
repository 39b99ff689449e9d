#pragma once

#include <string>
#include <vector>

#include "liebider/json_io.hpp"

namespace liebider {

struct ReproOptions {
  /// Scalar for the W~(0,-1) lifting item.
  Scalar b = Scalar(1, Field::rationals());
};

struct ReproReport {
  std::string item;
  std::vector<int> criteria;  // acceptance criteria the item feeds
  bool passed = false;
  Json details;
  Json to_json() const;
};

/// Registry names in a fixed order.
std::vector<std::string> registry_names();
std::vector<int> registry_criteria(const std::string& item);
/// Throws Error for an unknown item.
ReproReport reproduce(const std::string& item, const ReproOptions& opt = {});

// Building blocks shared with the acceptance driver ---------------------------

/// Catalog instances used by the structural and identity checks.
std::vector<std::pair<std::string, LieAlgebra>> structural_catalog();
/// f_s(x (x) t^k) = x (x) t^{k+s-1} on current_algebra(sl2, n), s = 1..2n.
std::vector<LinearMap> current_shift_family(std::size_t n);

}  // namespace liebider
