#pragma once

#include "semi/cayley_table.hpp"

namespace fixtures {

using semi::CayleyTable;

// ab = a
inline CayleyTable l2() { return CayleyTable::from_rows({{0, 0}, {1, 1}}); }
// ab = b
inline CayleyTable r2() { return CayleyTable::from_rows({{0, 1}, {0, 1}}); }
inline CayleyTable c2() { return CayleyTable::from_rows({{0, 1}, {1, 0}}); }
// {0,1} x {0,1} with (i,j)(k,l) = (i,l); element 2i + j.
inline CayleyTable rb4() {
  return CayleyTable::from_rows(
      {{0, 1, 0, 1}, {0, 1, 0, 1}, {2, 3, 2, 3}, {2, 3, 2, 3}});
}
// C2 x R2, element 2g + r.
inline CayleyTable rg4() {
  return CayleyTable::from_rows(
      {{0, 1, 2, 3}, {0, 1, 2, 3}, {2, 3, 0, 1}, {2, 3, 0, 1}});
}
// min on {0 < 1}
inline CayleyTable semilattice2() { return CayleyTable::from_rows({{0, 0}, {0, 1}}); }

}  // namespace fixtures
