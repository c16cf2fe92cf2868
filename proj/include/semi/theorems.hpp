#pragma once

#include <string_view>
#include <vector>

#include "semi/cayley_table.hpp"
#include "semi/enumerate.hpp"

namespace semi {

struct CheckOptions {
  // Claims quantified over pairs of nonempty subsets run on all pairs up to
  // this order, on singletons and S beyond it.
  std::size_t max_pair_scan_order = 5;
  // Brute-force maximality and classification scans over all subsets run up
  // to this order and are skipped beyond it.
  std::size_t max_subset_scan_order = 10;
};

// Identifiers of every registered claim, in execution order.
std::vector<std::string_view> theorem_ids();

// Runs every registered claim on t and returns the failures (empty when
// all hold). PreconditionError if t is not a validated semigroup.
std::vector<Violation> check_all_theorems(const CayleyTable& t,
                                          const CheckOptions& options = {});

}  // namespace semi
