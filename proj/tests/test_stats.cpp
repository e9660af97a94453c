// Copyright 2026 The fairdial Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <cmath>
#include <cstdint>
#include <vector>

#include <doctest.h>

#include "fairdial/error.hpp"
#include "fairdial/stats.hpp"

namespace fairdial {
namespace {

using stats::Tail;

// Reference values from scipy.stats.ttest_ind (equal_var=True).
TEST_CASE("t-test matches scipy") {
  const std::vector<double> a = {2.1, 3.4, 1.9, 5.6, 4.4, 3.3};
  const std::vector<double> b = {4.2, 5.1, 6.3, 3.9, 5.8};
  const auto two = stats::StudentTTest(a, b, Tail::kTwoSided);
  CHECK(two.t == doctest::Approx(-2.1358513081981014).epsilon(1e-12));
  CHECK(two.df == 9);
  CHECK(two.p == doctest::Approx(0.06143430373132795).epsilon(1e-10));
  CHECK(stats::StudentTTest(a, b, Tail::kLess).p ==
        doctest::Approx(0.030717151865663976).epsilon(1e-10));
  CHECK(stats::StudentTTest(a, b, Tail::kGreater).p ==
        doctest::Approx(0.969282848134336).epsilon(1e-10));

  const std::vector<double> c = {0, 0, 1, 0, 1, 0, 0, 0};
  const std::vector<double> d = {1, 1, 0, 1, 1, 1, 0, 1};
  const auto r = stats::StudentTTest(c, d, Tail::kLess);
  CHECK(r.t == doctest::Approx(-2.160246899469287).epsilon(1e-12));
  CHECK(r.p == doctest::Approx(0.024290144443511966).epsilon(1e-10));
}

TEST_CASE("t-test edge cases") {
  const std::vector<double> one = {1.0};
  const std::vector<double> two = {1.0, 2.0};
  const std::vector<double> flat = {3.0, 3.0, 3.0};
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return static_cast<ErrorCode>(0);
  };
  CHECK(code([&] { stats::StudentTTest(one, two, Tail::kLess); }) == ErrorCode::kInput);
  CHECK(code([&] { stats::StudentTTest(flat, flat, Tail::kLess); }) == ErrorCode::kDegenerate);
  // Tails are complementary.
  const std::vector<double> x = {1, 2, 3, 4}, y = {2, 3, 5, 7, 1};
  const double lo = stats::StudentTTest(x, y, Tail::kLess).p;
  const double hi = stats::StudentTTest(x, y, Tail::kGreater).p;
  CHECK(lo + hi == doctest::Approx(1.0));
  CHECK(stats::StudentTTest(x, y, Tail::kTwoSided).p == doctest::Approx(2 * std::min(lo, hi)));
}

TEST_CASE("moments and intervals") {
  const std::vector<double> x = {1, 2, 3, 4, 5};
  CHECK(stats::Mean(x) == 3);
  CHECK(stats::Variance(x) == 2.5);
  CHECK(stats::StandardError(x) == doctest::Approx(std::sqrt(0.5)));
  const auto iv = stats::NormalInterval(x);
  // z(0.995) = 2.5758293035489004
  CHECK(iv.lo == doctest::Approx(3 - 2.5758293035489004 * std::sqrt(0.5)));
  CHECK(iv.hi == doctest::Approx(3 + 2.5758293035489004 * std::sqrt(0.5)));
  const std::vector<double> same = {2, 2, 2};
  CHECK(stats::NormalInterval(same).lo == 2);
}

TEST_CASE("exceedance curve") {
  const std::vector<std::int64_t> s = {0, 3, 3, 7, 10};
  const std::vector<std::int64_t> z = {0, 1, 3, 6, 7, 10, 11};
  const auto e = stats::ExceedanceCurve(s, z);
  const std::vector<double> expect = {0.8, 0.8, 0.4, 0.4, 0.2, 0.0, 0.0};
  REQUIRE(e.size() == expect.size());
  for (std::size_t i = 0; i < e.size(); ++i) CHECK(e[i] == doctest::Approx(expect[i]));
}

}  // namespace
}  // namespace fairdial
