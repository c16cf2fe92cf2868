// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <bit>

#include "kernels_impl.hpp"

namespace semi::kernels::detail {

namespace {

// 16 lanes of epi16 compare results -> 16-bit mask, lane order preserved.
inline std::uint32_t mask16(__m256i eq) {
  const __m128i lo = _mm256_castsi256_si128(eq);
  const __m128i hi = _mm256_extracti128_si256(eq, 1);
  return static_cast<std::uint32_t>(
      _mm_movemask_epi8(_mm_packs_epi16(lo, hi)));
}

template <typename Compare>
void match_blocks(const Element* row, std::size_t n, ElementSet::Word* out,
                  Compare&& compare_block, Element (*expected)(std::size_t,
                                                               Element),
                  Element value) {
  const std::size_t words = (n + 63) / 64;
  for (std::size_t w = 0; w < words; ++w) out[w] = 0;
  std::size_t k = 0;
  for (; k + 16 <= n; k += 16) {
    const __m256i v =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + k));
    const ElementSet::Word bits = compare_block(v, k);
    out[k / 64] |= bits << (k % 64);
  }
  for (; k < n; ++k) {
    if (row[k] == expected(k, value)) {
      out[k / 64] |= ElementSet::Word{1} << (k % 64);
    }
  }
}

}  // namespace

std::size_t first_gather_mismatch_avx2(const Element* base,
                                       const Element* index,
                                       const Element* expected,
                                       std::size_t n) {
  const auto* bytes = reinterpret_cast<const int*>(base);
  const __m256i low16 = _mm256_set1_epi32(0xFFFF);
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    const __m256i idx = _mm256_cvtepu16_epi32(
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(index + k)));
    // 32-bit gathers at 2-byte scale; the upper half belongs to the next
    // entry and is masked off.
    const __m256i got =
        _mm256_and_si256(_mm256_i32gather_epi32(bytes, idx, 2), low16);
    const __m256i want = _mm256_cvtepu16_epi32(
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(expected + k)));
    const auto eq = static_cast<unsigned>(
        _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(got, want))));
    if (eq != 0xFFU) return k + static_cast<std::size_t>(std::countr_one(eq));
  }
  for (; k < n; ++k) {
    if (base[index[k]] != expected[k]) return k;
  }
  return n;
}

void match_iota_avx2(const Element* row, std::size_t n,
                     ElementSet::Word* out) {
  const __m256i lane =
      _mm256_setr_epi16(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15);
  match_blocks(
      row, n, out,
      [&](__m256i v, std::size_t k) -> ElementSet::Word {
        const __m256i iota =
            _mm256_add_epi16(lane, _mm256_set1_epi16(static_cast<short>(k)));
        return mask16(_mm256_cmpeq_epi16(v, iota));
      },
      [](std::size_t k, Element) { return static_cast<Element>(k); }, 0);
}

void match_value_avx2(const Element* row, std::size_t n, Element value,
                      ElementSet::Word* out) {
  const __m256i needle = _mm256_set1_epi16(static_cast<short>(value));
  match_blocks(
      row, n, out,
      [&](__m256i v, std::size_t) -> ElementSet::Word {
        return mask16(_mm256_cmpeq_epi16(v, needle));
      },
      [](std::size_t, Element x) { return x; }, value);
}

}  // namespace semi::kernels::detail
