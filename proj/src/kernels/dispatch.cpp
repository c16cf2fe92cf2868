#include <atomic>
#include <cstdlib>
#include <cstring>
#include <string>

#include "kernels_impl.hpp"
#include "semi/errors.hpp"

namespace semi::kernels {

namespace {

constexpr KernelTable kScalar{
    Isa::Scalar,
    &detail::first_gather_mismatch_scalar,
    &detail::match_iota_scalar,
    &detail::match_value_scalar,
};

#if defined(SEMI_HAVE_AVX2)
constexpr KernelTable kAvx2{
    Isa::Avx2,
    &detail::first_gather_mismatch_avx2,
    &detail::match_iota_avx2,
    &detail::match_value_avx2,
};
#endif

const KernelTable* pick_default() {
  if (const char* env = std::getenv("SEMI_ISA");
      env != nullptr && std::strcmp(env, "scalar") == 0) {
    return &kScalar;
  }
  if (const auto* avx2 = avx2_kernels(); avx2 && cpu_supports(Isa::Avx2)) {
    return avx2;
  }
  return &kScalar;
}

std::atomic<const KernelTable*> g_active{nullptr};

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

const KernelTable& scalar_kernels() { return kScalar; }

const KernelTable* avx2_kernels() {
#if defined(SEMI_HAVE_AVX2)
  return &kAvx2;
#else
  return nullptr;
#endif
}

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(SEMI_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& active() {
  const KernelTable* table = g_active.load(std::memory_order_acquire);
  if (table == nullptr) {
    const KernelTable* chosen = pick_default();
    // Racing initialisers pick the same table.
    g_active.compare_exchange_strong(table, chosen, std::memory_order_acq_rel);
    table = g_active.load(std::memory_order_acquire);
  }
  return *table;
}

void force_isa(Isa isa) {
  const KernelTable* table = nullptr;
  if (isa == Isa::Scalar) {
    table = &kScalar;
  } else if (isa == Isa::Avx2 && cpu_supports(Isa::Avx2)) {
    table = avx2_kernels();
  }
  if (table == nullptr) {
    throw Error("kernel ISA " + std::string(isa_name(isa)) +
                " is not available on this build or CPU");
  }
  g_active.store(table, std::memory_order_release);
}

}  // namespace semi::kernels
