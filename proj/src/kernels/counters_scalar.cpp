#include <bit>

#include "bindingfactor/kernels.hpp"

namespace bindingfactor::kernels {

namespace {

void apply_scalar(Counters& counters, std::uint64_t row, int delta) {
  const auto step = static_cast<std::uint8_t>(delta);
  for (; row; row &= row - 1) counters.lane[std::countr_zero(row)] += step;
}

std::uint64_t at_least_scalar(const Counters& counters, int threshold) {
  std::uint64_t mask = 0;
  for (int v = 0; v < kLanes; ++v)
    if (counters.lane[v] >= threshold) mask |= std::uint64_t{1} << v;
  return mask;
}

constexpr CounterKernels kScalar{Isa::Scalar, "scalar", apply_scalar, at_least_scalar};

}  // namespace

const CounterKernels& scalar_kernels() { return kScalar; }

}  // namespace bindingfactor::kernels
