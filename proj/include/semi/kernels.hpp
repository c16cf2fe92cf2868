#pragma once

// Data-parallel inner loops over Cayley-table rows. Every kernel has a
// scalar reference implementation; vector variants are selected once at
// runtime from the CPU feature set and must produce identical results.

#include <cstddef>
#include <string_view>

#include "semi/element_set.hpp"

namespace semi::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

struct KernelTable {
  Isa isa;

  // First k in [0, n) with base[index[k]] != expected[k], or n if none.
  // base must stay readable one Element past the largest index used.
  std::size_t (*first_gather_mismatch)(const Element* base,
                                       const Element* index,
                                       const Element* expected, std::size_t n);

  // out (ceil(n/64) words, overwritten) gets bit k set iff row[k] == k.
  void (*match_iota)(const Element* row, std::size_t n, ElementSet::Word* out);

  // out gets bit k set iff row[k] == value.
  void (*match_value)(const Element* row, std::size_t n, Element value,
                      ElementSet::Word* out);
};

const KernelTable& scalar_kernels();

// nullptr when the build has no AVX2 variant.
const KernelTable* avx2_kernels();

bool cpu_supports(Isa isa);

// Kernel table in use. The first call picks the widest supported ISA,
// unless SEMI_ISA=scalar is set in the environment.
const KernelTable& active();

// Pins the active table; throws semi::Error if the ISA is unavailable.
void force_isa(Isa isa);

}  // namespace semi::kernels
