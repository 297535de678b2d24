#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <thread>
#include <vector>

#include "assort/assort.hpp"
#include "support/step_sim.hpp"

using namespace assort;

namespace {

template <class W>
std::vector<std::uint64_t> widen(const std::vector<W>& v) {
  return std::vector<std::uint64_t>(v.begin(), v.end());
}

template <class W>
std::vector<W> keys_of(const std::vector<KeyedElement<W>>& elems) {
  std::vector<W> out;
  out.reserve(elems.size());
  for (const auto& e : elems) out.push_back(e.key);
  return out;
}

template <class W>
std::vector<KeyedElement<W>> with_payloads(const std::vector<W>& keys) {
  std::vector<KeyedElement<W>> out;
  for (std::size_t i = 0; i < keys.size(); ++i) out.push_back({keys[i], i});
  return out;
}

}  // namespace

TEST_CASE("hash_key maps the interval and rejects everything past it") {
  CHECK(hash_key<std::uint32_t>(7, 3, 10) == 4);
  CHECK(hash_key<std::uint32_t>(3, 3, 10) == 0);
  CHECK(hash_key<std::uint32_t>(3, 3, 1) == 0);
  CHECK_FALSE(hash_key<std::uint32_t>(13, 3, 10).has_value());
  CHECK_FALSE(hash_key<std::uint64_t>(word_max<std::uint64_t>, 0, 10).has_value());
}

TEST_CASE("implicit practice: frozen traces") {
  SortStats stats;

  SUBCASE("full cycle-leader rearrangement") {
    std::vector<std::uint8_t> keys{3, 1, 5, 2, 4};
    PassState<std::uint8_t> st;
    st.delta = 1;
    st.delta_next = word_max<std::uint8_t>;
    implicit_practice(std::span<std::uint8_t>(keys), st, stats);
    CHECK(keys == std::vector<std::uint8_t>{1, 2, 3, 4, 5});
    CHECK(st.practiced == 5);
    CHECK(st.deferred == 0);
    CHECK(stats.swaps == 4);

    auto replay = widen(std::vector<std::uint8_t>{3, 1, 5, 2, 4});
    auto counts = sim::readonly_practice(replay, 1);
    CHECK(replay == widen(keys));
    CHECK(counts.swaps == 4);
    CHECK(counts.practiced == 5);
  }

  SUBCASE("mixed interval and deferred keys") {
    std::vector<std::uint8_t> keys{9, 2, 0, 7};
    PassState<std::uint8_t> st;
    st.delta = 0;
    st.delta_next = word_max<std::uint8_t>;
    implicit_practice(std::span<std::uint8_t>(keys), st, stats);
    CHECK(keys == std::vector<std::uint8_t>{0, 9, 2, 7});
    CHECK(st.practiced == 2);
    CHECK(st.deferred == 2);
    CHECK(st.delta_next == 7);

    auto replay = widen(std::vector<std::uint8_t>{9, 2, 0, 7});
    auto counts = sim::readonly_practice(replay, 0);
    CHECK(replay == widen(keys));
    CHECK(counts.deferred == 2);
    CHECK(counts.delta_next == 7);
  }

  SUBCASE("already consecutive and in order: zero swaps") {
    std::vector<std::uint8_t> keys{1, 2, 3, 4, 5};
    PassState<std::uint8_t> st;
    st.delta = 1;
    st.delta_next = word_max<std::uint8_t>;
    const std::size_t before = stats.swaps;
    implicit_practice(std::span<std::uint8_t>(keys), st, stats);
    CHECK(keys == std::vector<std::uint8_t>{1, 2, 3, 4, 5});
    CHECK(st.practiced == 5);
    CHECK(stats.swaps == before);
  }
}

TEST_CASE("implicit store: frozen traces") {
  SortStats stats;

  SUBCASE("nodes cluster to the front in order") {
    std::vector<std::uint8_t> keys{0, 9, 2, 7};
    PassState<std::uint8_t> st;
    st.delta = 0;
    st.practiced = 2;
    implicit_store(std::span<std::uint8_t>(keys), st, stats);
    CHECK(keys == std::vector<std::uint8_t>{0, 2, 9, 7});
    CHECK(stats.swaps == 1);
  }

  SUBCASE("all nodes already at the front: only self-swaps") {
    std::vector<std::uint8_t> keys{1, 2, 3, 4, 5};
    PassState<std::uint8_t> st;
    st.delta = 1;
    st.practiced = 5;
    implicit_store(std::span<std::uint8_t>(keys), st, stats);
    CHECK(keys == std::vector<std::uint8_t>{1, 2, 3, 4, 5});
    CHECK(stats.swaps == 0);
  }

  SUBCASE("practice then store of [5,0,1]") {
    std::vector<std::uint8_t> keys{5, 0, 1};
    PassState<std::uint8_t> st;
    st.delta = 0;
    st.delta_next = word_max<std::uint8_t>;
    implicit_practice(std::span<std::uint8_t>(keys), st, stats);
    CHECK(keys == std::vector<std::uint8_t>{0, 1, 5});
    CHECK(st.practiced == 2);
    const std::size_t before = stats.swaps;
    implicit_store(std::span<std::uint8_t>(keys), st, stats);
    CHECK(keys == std::vector<std::uint8_t>{0, 1, 5});
    CHECK(stats.swaps == before);  // nodes already at the front
  }
}

TEST_CASE("practice agrees with the step simulator on random regions") {
  detail::Rng rng(0xabcdef12);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 1 + rng.below(16);
    auto wl = gen_uniform_distinct<std::uint8_t>(
        n, 1.0 + double(rng.below(4)), RangeUnit::key, rng.next(), std::uint8_t(rng.below(40)));
    std::vector<std::uint8_t> mine = wl.values;
    auto replay = widen(wl.values);

    PassState<std::uint8_t> st;
    st.delta = wl.min_value;
    st.delta_next = word_max<std::uint8_t>;
    SortStats stats;
    implicit_practice(std::span<std::uint8_t>(mine), st, stats);
    auto counts = sim::readonly_practice(replay, wl.min_value);
    REQUIRE(widen(mine) == replay);
    CHECK(st.practiced == counts.practiced);
    CHECK(st.deferred == counts.deferred);
    CHECK(stats.swaps == counts.swaps);

    implicit_store(std::span<std::uint8_t>(mine), st, stats);
    sim::readonly_store(replay, wl.min_value, counts.practiced);
    CHECK(widen(mine) == replay);
  }
}

TEST_CASE("sort_readonly: frozen driver traces") {
  SUBCASE("one key per interval forces one pass per key") {
    std::vector<std::uint8_t> keys{0, 4, 8, 12};
    auto stats = sort_readonly(keys);
    CHECK(std::is_sorted(keys.begin(), keys.end()));
    CHECK(stats.passes == 4);
  }
  SUBCASE("three passes for [9,2,0,7]") {
    std::vector<std::uint8_t> keys{9, 2, 0, 7};
    auto stats = sort_readonly(keys);
    CHECK(keys == std::vector<std::uint8_t>{0, 2, 7, 9});
    CHECK(stats.passes == 3);
  }
  SUBCASE("empty input") {
    std::vector<std::uint8_t> keys;
    auto stats = sort_readonly(keys);
    CHECK(keys.empty());
    CHECK(stats.passes == 0);
  }
  SUBCASE("single element") {
    std::vector<std::uint8_t> keys{77};
    auto stats = sort_readonly(keys);
    CHECK(stats.passes == 1);
    CHECK(stats.swaps == 0);
  }
}

TEST_CASE("sort_readonly equals the comparison oracle with payloads intact") {
  detail::Rng rng(0x5eed0001);
  int runs = 0;
  for (const double beta : {1.0, 2.0, 4.0, 16.0}) {
    for (const std::size_t n : {std::size_t{2}, std::size_t{10}, std::size_t{100},
                                std::size_t{1000}}) {
      for (int rep = 0; rep < 3; ++rep) {
        auto wl = gen_uniform_distinct<std::uint32_t>(n, beta, RangeUnit::key, rng.next(),
                                                      std::uint32_t(rng.below(1u << 20)));
        auto elems = with_payloads(wl.values);
        auto stats = sort_readonly(elems);
        auto expected = comparison_oracle_sort<std::uint32_t>(wl.values);
        REQUIRE(keys_of(elems) == expected);
        for (std::size_t p = 0; p < elems.size(); ++p)
          CHECK(wl.values[elems[p].payload] == elems[p].key);

        // swap accounting: per pass at most 2 n_d - 1, in total at most 2n - k
        std::size_t total = 0;
        std::size_t settled = 0;
        for (const auto& pass : stats.per_pass) {
          REQUIRE(pass.practiced >= 1);
          CHECK(pass.swaps <= 2 * pass.practiced - 1);
          total += pass.swaps;
          settled += pass.practiced;
        }
        CHECK(settled == n);
        CHECK(total == stats.swaps);
        CHECK(stats.swaps <= 2 * n - stats.passes);
        ++runs;
      }
    }
  }
  CHECK(runs == 48);
}

TEST_CASE("keys are moved, never rewritten") {
  detail::Rng rng(0x5eed0002);
  for (int rep = 0; rep < 20; ++rep) {
    auto wl = gen_uniform_distinct<std::uint64_t>(200, 4.0, RangeUnit::key, rng.next());
    std::uint64_t checksum = 0;
    for (auto v : wl.values) checksum ^= v * 0x9e3779b97f4a7c15ull;
    auto values = wl.values;
    sort_readonly(values);
    std::uint64_t after = 0;
    for (auto v : values) after ^= v * 0x9e3779b97f4a7c15ull;
    CHECK(checksum == after);
  }
}

TEST_CASE("full word range is legal for read-only keys") {
  std::vector<std::uint8_t> keys{255, 0, 128, 127, 200, 64};
  auto stats = sort_readonly(keys);
  CHECK(keys == std::vector<std::uint8_t>{0, 64, 127, 128, 200, 255});
  CHECK(stats.passes >= 1);

  std::vector<std::uint64_t> big{word_max<std::uint64_t>, 0, word_max<std::uint64_t> - 1, 5};
  sort_readonly(big);
  CHECK(std::is_sorted(big.begin(), big.end()));
}

TEST_CASE("single pass exactly when the range fits the region") {
  detail::Rng rng(0x5eed0003);
  for (const std::size_t n : {std::size_t{2}, std::size_t{17}, std::size_t{64}}) {
    auto exact = gen_uniform_distinct<std::uint16_t>(n, 1.0, RangeUnit::key, rng.next(), 100);
    auto stats = sort_readonly(exact.values);
    CHECK(stats.passes == 1);

    // range n + 1: drop one interior value, extend the top by one
    auto wider = gen_consecutive_sorted<std::uint16_t>(n, 100);
    wider.values[n / 2] = std::uint16_t(100 + n);
    detail::Rng shuf(n);
    shuf.shuffle(wider.values);
    auto stats2 = sort_readonly(wider.values);
    CHECK(stats2.passes == 2);
  }
}

TEST_CASE("sorted consecutive input: one pass, zero swaps") {
  for (const std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{333},
                              std::size_t{4096}}) {
    auto wl = gen_consecutive_sorted<std::uint32_t>(n, 1000);
    auto stats = sort_readonly(wl.values);
    CHECK(stats.passes == 1);
    CHECK(stats.swaps == 0);
  }
}

TEST_CASE("worst-case singleton schedule: k = n, no swaps") {
  for (const std::size_t n : {std::size_t{1}, std::size_t{4}, std::size_t{16},
                              std::size_t{64}}) {
    auto wl = gen_worst_singleton<std::uint32_t>(n, SortVariant::readonly);
    auto stats = sort_readonly(wl.values);
    CHECK(stats.passes == n);
    CHECK(stats.swaps == 0);
    CHECK(std::is_sorted(wl.values.begin(), wl.values.end()));
  }
}

TEST_CASE("the settled prefix is final after every pass") {
  detail::Rng rng(0x5eed0004);
  auto wl = gen_uniform_distinct<std::uint16_t>(128, 4.0, RangeUnit::key, rng.next(), 50);
  auto expected = comparison_oracle_sort<std::uint16_t>(wl.values);

  // drive the pass loop manually through the public phase functions
  std::vector<std::uint16_t> keys = wl.values;
  std::uint16_t lo = *std::min_element(keys.begin(), keys.end());
  std::uint16_t hi = *std::max_element(keys.begin(), keys.end());
  SortStats stats;
  PassState<std::uint16_t> st;
  st.delta = lo;
  std::size_t offset = 0;
  while (true) {
    std::span<std::uint16_t> region(keys.data() + offset, keys.size() - offset);
    st.delta_next = hi;
    implicit_practice(region, st, stats);
    implicit_store(region, st, stats);
    offset += st.practiced;
    for (std::size_t i = 0; i < offset; ++i) REQUIRE(keys[i] == expected[i]);
    if (st.deferred == 0) break;
    st.delta = st.delta_next;
  }
  CHECK(offset == keys.size());
}

TEST_CASE("zero_start mode sorts correctly and may spend one extra pass") {
  detail::Rng rng(0x5eed0005);
  for (int rep = 0; rep < 30; ++rep) {
    auto wl = gen_uniform_distinct<std::uint16_t>(60, 2.0, RangeUnit::key, rng.next(),
                                                  std::uint16_t(1000 + rng.below(500)));
    auto values = wl.values;
    SortOptions opts;
    opts.delta_mode = DeltaMode::zero_start;
    auto stats = sort_readonly(values, opts);
    CHECK(values == comparison_oracle_sort<std::uint16_t>(wl.values));
    CHECK(stats.swaps <= 2 * values.size());

    auto prescan = wl.values;
    auto base = sort_readonly(prescan);
    CHECK(stats.passes <= base.passes + 1);
  }
}

TEST_CASE("duplicate keys are detected") {
  SUBCASE("adjacent duplicates") {
    std::vector<std::uint8_t> keys{5, 5};
    CHECK_THROWS_AS(sort_readonly(keys), SortError);
  }
  SUBCASE("duplicate reported with value and position") {
    std::vector<std::uint32_t> keys{7, 3, 9, 3, 12};
    try {
      sort_readonly(keys);
      FAIL("expected duplicate_key");
    } catch (const SortError& e) {
      CHECK(e.kind() == ErrorKind::duplicate_key);
      CHECK(e.value() == 3);
    }
  }
  SUBCASE("duplicates far beyond the first interval") {
    std::vector<std::uint16_t> keys{1, 5000, 2, 5000, 3};
    CHECK_THROWS_AS(sort_readonly(keys), SortError);
  }
}

TEST_CASE("distinct regions sort concurrently") {
  std::vector<std::vector<std::uint32_t>> regions;
  for (std::uint64_t seed = 1; seed <= 4; ++seed)
    regions.push_back(gen_uniform_distinct<std::uint32_t>(500, 2.0, RangeUnit::key, seed).values);
  auto expected = regions;
  for (auto& r : expected) std::sort(r.begin(), r.end());

  std::vector<std::thread> threads;
  for (auto& r : regions)
    threads.emplace_back([&r] { sort_readonly(r); });
  for (auto& t : threads) t.join();
  CHECK(regions == expected);
}
