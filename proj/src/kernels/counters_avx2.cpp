#include "bindingfactor/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace bindingfactor::kernels {

namespace {

// Expands 32 mask bits into 32 bytes, 0xFF where the bit is set.
__attribute__((target("avx2"))) inline __m256i expand_bits(std::uint32_t bits) {
  const __m256i broadcast = _mm256_set1_epi32(static_cast<int>(bits));
  // Byte i of the result takes mask byte i/8; both 128-bit lanes see all four.
  const __m256i gather = _mm256_setr_epi8(0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1,
                                          2, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3);
  const __m256i select = _mm256_set1_epi64x(static_cast<long long>(0x8040201008040201ULL));
  const __m256i spread = _mm256_shuffle_epi8(broadcast, gather);
  return _mm256_cmpeq_epi8(_mm256_and_si256(spread, select), select);
}

__attribute__((target("avx2"))) void apply_avx2(Counters& counters, std::uint64_t row,
                                                int delta) {
  auto* base = reinterpret_cast<__m256i*>(counters.lane);
  for (int half = 0; half < 2; ++half) {
    const __m256i ones = expand_bits(static_cast<std::uint32_t>(row >> (32 * half)));
    __m256i lanes = _mm256_load_si256(base + half);
    // ones is -1 per selected byte.
    lanes = delta > 0 ? _mm256_sub_epi8(lanes, ones) : _mm256_add_epi8(lanes, ones);
    _mm256_store_si256(base + half, lanes);
  }
}

__attribute__((target("avx2"))) std::uint64_t at_least_avx2(const Counters& counters,
                                                             int threshold) {
  if (threshold > 127) return 0;
  const auto* base = reinterpret_cast<const __m256i*>(counters.lane);
  const __m256i floor = _mm256_set1_epi8(static_cast<char>(threshold - 1));
  std::uint64_t mask = 0;
  for (int half = 0; half < 2; ++half) {
    const __m256i hit = _mm256_cmpgt_epi8(_mm256_load_si256(base + half), floor);
    mask |= static_cast<std::uint64_t>(static_cast<std::uint32_t>(_mm256_movemask_epi8(hit)))
            << (32 * half);
  }
  return mask;
}

constexpr CounterKernels kAvx2{Isa::Avx2, "avx2", apply_avx2, at_least_avx2};

}  // namespace

const CounterKernels* avx2_kernels() {
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2 : nullptr;
}

}  // namespace bindingfactor::kernels

#else

namespace bindingfactor::kernels {
const CounterKernels* avx2_kernels() { return nullptr; }
}  // namespace bindingfactor::kernels

#endif
