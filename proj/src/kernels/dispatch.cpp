#include <cstdlib>
#include <string_view>

#include "bindingfactor/kernels.hpp"

namespace bindingfactor::kernels {

const CounterKernels& active_kernels() {
  static const CounterKernels& chosen = [] () -> const CounterKernels& {
    const char* forced = std::getenv("BINDINGFACTOR_ISA");
    if (forced != nullptr && std::string_view(forced) == "scalar") return scalar_kernels();
    if (const auto* avx2 = avx2_kernels()) return *avx2;
    return scalar_kernels();
  }();
  return chosen;
}

std::vector<const CounterKernels*> available_kernels() {
  std::vector<const CounterKernels*> out{&scalar_kernels()};
  if (const auto* avx2 = avx2_kernels()) out.push_back(avx2);
  return out;
}

}  // namespace bindingfactor::kernels
