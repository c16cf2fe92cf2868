#pragma once

#include "semi/kernels.hpp"

namespace semi::kernels::detail {

std::size_t first_gather_mismatch_scalar(const Element* base,
                                         const Element* index,
                                         const Element* expected,
                                         std::size_t n);
void match_iota_scalar(const Element* row, std::size_t n,
                       ElementSet::Word* out);
void match_value_scalar(const Element* row, std::size_t n, Element value,
                        ElementSet::Word* out);

#if defined(SEMI_HAVE_AVX2)
std::size_t first_gather_mismatch_avx2(const Element* base,
                                       const Element* index,
                                       const Element* expected, std::size_t n);
void match_iota_avx2(const Element* row, std::size_t n, ElementSet::Word* out);
void match_value_avx2(const Element* row, std::size_t n, Element value,
                      ElementSet::Word* out);
#endif

}  // namespace semi::kernels::detail
