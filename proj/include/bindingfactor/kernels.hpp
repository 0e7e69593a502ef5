#pragma once

#include <cstdint>
#include <vector>

// Per-vertex neighbour counters for the binding-number enumerators.
//
// While a subset S is walked in Gray-code order, counter[v] holds |N(v) & S|
// for every v < 64. Adding or removing one vertex u of S adds +1/-1 to every
// counter selected by row(u); the k-th neighbourhood of S is the set of lanes
// whose counter reaches k. Both steps are data-parallel over the 64 lanes, so
// each has a scalar reference kernel and a SIMD variant chosen at runtime.

namespace bindingfactor::kernels {

inline constexpr int kLanes = 64;

struct alignas(64) Counters {
  std::uint8_t lane[kLanes] = {};
};

enum class Isa { Scalar, Avx2 };

struct CounterKernels {
  Isa isa;
  const char* name;
  /// counter[v] += delta for every bit v of row; delta is +1 or -1.
  void (*apply)(Counters& counters, std::uint64_t row, int delta);
  /// Bitmask of lanes with counter >= threshold (threshold >= 1).
  std::uint64_t (*at_least)(const Counters& counters, int threshold);
};

const CounterKernels& scalar_kernels();

/// nullptr unless compiled for x86-64 and the running CPU reports AVX2.
const CounterKernels* avx2_kernels();

/// Fastest supported variant. Setting BINDINGFACTOR_ISA=scalar in the
/// environment pins the scalar reference.
const CounterKernels& active_kernels();

/// Every variant usable on this machine, scalar first.
std::vector<const CounterKernels*> available_kernels();

}  // namespace bindingfactor::kernels
