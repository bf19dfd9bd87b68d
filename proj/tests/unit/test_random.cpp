#include <catch_amalgamated.hpp>

#include <atomic>
#include <cmath>
#include <vector>

#include "nvpair/parallel.hpp"
#include "nvpair/random.hpp"

using nvpair::CounterRng;

TEST_CASE("counter streams are reproducible and independent") {
  CounterRng a(1, 1, 5), b(1, 1, 5), c(1, 2, 5), d(2, 1, 5);
  for (int i = 0; i < 10; ++i) {
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    CHECK(x != c.next_u64());
    CHECK(x != d.next_u64());
  }
}

TEST_CASE("uniform and normal draws have the right moments") {
  const int n = 400'000;
  double su = 0, su2 = 0, sn = 0, sn2 = 0;
  for (int i = 0; i < n; ++i) {
    CounterRng r(9, 1, static_cast<std::uint64_t>(i));
    const double u = r.uniform();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
    su += u;
    su2 += u * u;
    const double z = r.normal();
    sn += z;
    sn2 += z * z;
  }
  CHECK(std::abs(su / n - 0.5) < 4 * std::sqrt(1.0 / 12 / n));
  CHECK(std::abs(su2 / n - 1.0 / 3) < 0.002);
  CHECK(std::abs(sn / n) < 4 / std::sqrt(n));
  CHECK(std::abs(sn2 / n - 1.0) < 4 * std::sqrt(2.0 / n));
}

TEST_CASE("chunking covers the range exactly once for any worker count") {
  const std::size_t n = 10'001;
  for (unsigned w : {1u, 2u, 7u}) {
    std::vector<std::atomic<int>> hits(n);
    nvpair::for_each_chunk(n, w, [&](std::size_t, std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) ++hits[i];
    }, 100);
    for (std::size_t i = 0; i < n; ++i) REQUIRE(hits[i] == 1);
  }
  CHECK(nvpair::chunk_count(0) == 0);
  CHECK(nvpair::chunk_count(1, 10) == 1);
  CHECK(nvpair::chunk_count(20, 10) == 2);
  CHECK(nvpair::chunk_count(21, 10) == 3);
}
