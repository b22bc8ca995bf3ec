#include "fishlab/parallel.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <stdexcept>

using namespace fishlab;

TEST(Parallel, ResultsInIndexOrder) {
  const auto out = ordered_parallel_map(1000, [](std::size_t i) { return i * i; });
  ASSERT_EQ(out.size(), 1000u);
  for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], i * i);
}

TEST(Parallel, EmptyRange) {
  EXPECT_TRUE(ordered_parallel_map(0, [](std::size_t i) { return i; }).empty());
}

TEST(Parallel, ConcatKeepsOrder) {
  const auto out = ordered_parallel_concat(4, [](std::size_t i) {
    return std::vector<int>(i, static_cast<int>(i));
  });
  EXPECT_EQ(out, (std::vector<int>{1, 2, 2, 3, 3, 3}));
}

TEST(Parallel, RethrowsTaskFailure) {
  EXPECT_THROW(ordered_parallel_map(64,
                                    [](std::size_t i) -> int {
                                      if (i == 17) throw std::runtime_error("boom");
                                      return 0;
                                    }),
               std::runtime_error);
}

TEST(Parallel, ThreadCap) {
  ::setenv("FISHLAB_THREADS", "1", 1);
  EXPECT_EQ(worker_count(), 1u);
  const auto out = ordered_parallel_map(10, [](std::size_t i) { return static_cast<int>(i); });
  EXPECT_EQ(out.back(), 9);
  ::setenv("FISHLAB_THREADS", "3", 1);
  EXPECT_LE(worker_count(), 3u);
  EXPECT_GE(worker_count(), 1u);
  ::unsetenv("FISHLAB_THREADS");
}

TEST(Parallel, SameResultWithManyThreads) {
  auto task = [](std::size_t i) { return std::vector<std::size_t>{i, i * 7 % 13}; };
  const auto serial = ordered_parallel_concat(200, task, 1);
  for (std::size_t threads : {2u, 4u, 16u}) EXPECT_EQ(ordered_parallel_concat(200, task, threads), serial);
}

TEST(Parallel, ThreadedFailureIsRethrown) {
  EXPECT_THROW(ordered_parallel_map(
                   100,
                   [](std::size_t i) -> int {
                     if (i % 10 == 3) throw std::runtime_error("boom");
                     return 0;
                   },
                   4),
               std::runtime_error);
}
