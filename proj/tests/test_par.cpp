#include <gtest/gtest.h>

#include <random>

#include "alf/par.hpp"

namespace {

using alf::npos;

TEST(Par, FirstMatchAgreesWithSerialOnLargeInputs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 200000;
    const std::size_t hit = rng() % (n + n / 4);  // sometimes past the end
    auto pred = [&](std::size_t i) { return i >= hit && (i - hit) % 7 == 0; };
    EXPECT_EQ(alf::par::first_match(n, pred), alf::serial::first_match(n, pred));
  }
}

TEST(Par, FirstMatchReturnsSmallestIndexEvenWithManyHits) {
  const std::size_t n = 100000;
  auto pred = [](std::size_t i) { return i % 3000 == 2999; };
  EXPECT_EQ(alf::par::first_match(n, pred), 2999u);
  EXPECT_EQ(alf::par::first_match(n, [](std::size_t) { return false; }), npos);
  EXPECT_EQ(alf::par::first_match(0, [](std::size_t) { return true; }), npos);
}

TEST(Par, TabulateMatchesAndMinKeyAgreeWithSerial) {
  for (std::size_t n : {0u, 1u, 100u, 5000u, 70000u}) {
    auto pred = [](std::size_t i) { return (i * 2654435761u) % 11 < 3; };
    EXPECT_EQ(alf::par::tabulate(n, pred), alf::serial::tabulate(n, pred));
    EXPECT_EQ(alf::par::matches(n, pred), alf::serial::matches(n, pred));
    auto key = [](std::size_t i) -> std::size_t { return i % 5 == 4 ? (i * 7919) % 10007 : npos; };
    EXPECT_EQ(alf::par::min_key(n, key), alf::serial::min_key(n, key));
  }
}

TEST(Par, AllOf) {
  EXPECT_TRUE(alf::par::all_of(50000, [](std::size_t i) { return i < 50000; }));
  EXPECT_FALSE(alf::par::all_of(50000, [](std::size_t i) { return i != 40000; }));
  EXPECT_TRUE(alf::par::all_of(0, [](std::size_t) { return false; }));
  EXPECT_GE(alf::par::max_threads(), 1);
}

}  // namespace
