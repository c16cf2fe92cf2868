#include "kernels_impl.hpp"

namespace semi::kernels::detail {

std::size_t first_gather_mismatch_scalar(const Element* base,
                                         const Element* index,
                                         const Element* expected,
                                         std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    if (base[index[k]] != expected[k]) return k;
  }
  return n;
}

void match_iota_scalar(const Element* row, std::size_t n,
                       ElementSet::Word* out) {
  const std::size_t words = (n + 63) / 64;
  for (std::size_t w = 0; w < words; ++w) out[w] = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (row[k] == k) out[k / 64] |= ElementSet::Word{1} << (k % 64);
  }
}

void match_value_scalar(const Element* row, std::size_t n, Element value,
                        ElementSet::Word* out) {
  const std::size_t words = (n + 63) / 64;
  for (std::size_t w = 0; w < words; ++w) out[w] = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (row[k] == value) out[k / 64] |= ElementSet::Word{1} << (k % 64);
  }
}

}  // namespace semi::kernels::detail
