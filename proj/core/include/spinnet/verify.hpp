#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "spinnet/identities.hpp"

namespace spinnet {

enum class GridKind { Orthogonality, BE, Pachner23, Pachner14 };

std::string_view grid_kind_name(GridKind kind);

struct VerifyRecord {
  /// Named spins of the instance, in the identity's argument order.
  std::vector<std::pair<std::string, Spin>> instance;
  ExactCheckResult result;
};

struct VerifyOptions {
  int ceiling = 6;
  unsigned jobs = 1;
  BEForm be_form = BEForm::Weighted;
  /// Called once per instance in canonical (lexicographic twice-value) order.
  std::function<void(const VerifyRecord&)> sink;
};

struct VerifyReport {
  GridKind kind = GridKind::BE;
  int max_twice = 0;
  std::size_t instances = 0;
  std::size_t failures = 0;

  /// "N instances, M failures"
  std::string summary() const;
};

/// Enumerates every valid instance with all twice-spins in [0, max_twice]
/// and checks it exactly. Throws CeilingExceeded above options.ceiling.
VerifyReport verify_grid(int max_twice, GridKind kind, const VerifyOptions& options = {});

}  // namespace spinnet
