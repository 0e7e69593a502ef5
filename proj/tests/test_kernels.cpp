#include <doctest.h>

#include <random>

#include "bindingfactor/kernels.hpp"

using namespace bindingfactor::kernels;

TEST_CASE("scalar kernel counts") {
  const auto& s = scalar_kernels();
  Counters c;
  s.apply(c, 0b1011, +1);
  s.apply(c, 0b0011, +1);
  CHECK(c.lane[0] == 2);
  CHECK(c.lane[2] == 0);
  CHECK(c.lane[3] == 1);
  CHECK(s.at_least(c, 1) == 0b1011);
  CHECK(s.at_least(c, 2) == 0b0011);
  s.apply(c, 0b0001, -1);
  CHECK(s.at_least(c, 2) == 0b0010);
}

TEST_CASE("every available kernel matches scalar on random updates") {
  const auto& ref = scalar_kernels();
  auto all = available_kernels();
  REQUIRE_FALSE(all.empty());
  CHECK(all.front()->isa == Isa::Scalar);
  std::mt19937_64 rng(20261018);
  for (const CounterKernels* kern : all) {
    CAPTURE(kern->name);
    for (int trial = 0; trial < 200; ++trial) {
      Counters a, b;
      std::vector<std::uint64_t> rows;
      for (int step = 0; step < 120; ++step) {
        std::uint64_t row = rng();
        if (step % 3 == 2 && !rows.empty()) {
          // remove a previous row so counts go up and down
          std::uint64_t old = rows.back();
          rows.pop_back();
          ref.apply(a, old, -1);
          kern->apply(b, old, -1);
        } else if (rows.size() < 250) {
          rows.push_back(row);
          ref.apply(a, row, +1);
          kern->apply(b, row, +1);
        }
        for (int l = 0; l < kLanes; ++l) REQUIRE(a.lane[l] == b.lane[l]);
        for (int th : {1, 2, 3, 7, 64, 100, 200, 255})
          REQUIRE(ref.at_least(a, th) == kern->at_least(b, th));
      }
    }
  }
}

TEST_CASE("active kernel is one of the available ones") {
  const auto& act = active_kernels();
  bool found = false;
  for (auto* k : available_kernels()) found = found || k == &act;
  CHECK(found);
}
