#include <gtest/gtest.h>

#include <iostream>

#include "ocp/corpus.hpp"

namespace {

class Acceptance : public ::testing::TestWithParam<int> {};

TEST_P(Acceptance, Criterion) {
  const auto result = ocp::run_criterion(GetParam());
  std::cout << ocp::criterion_line(result) << std::endl;
  EXPECT_TRUE(result.passed) << result.detail;
}

INSTANTIATE_TEST_SUITE_P(All, Acceptance, ::testing::Range(1, ocp::criterion_count() + 1),
                         [](const auto& info) {
                           return "C" + std::to_string(info.param);
                         });

}  // namespace
