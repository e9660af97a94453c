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
#ifndef FAIRDIAL_STATS_HPP_
#define FAIRDIAL_STATS_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace fairdial::stats {

// Alternative hypothesis on mean(a) - mean(b).
enum class Tail { kTwoSided, kLess, kGreater };

struct TTestResult {
  double t = 0;
  double df = 0;
  double p = 1;
};

// Two-sample Student's t-test with pooled variance. Throws Error(kInput) if
// a sample has fewer than 2 values and Error(kDegenerate) if the pooled
// variance is zero.
TTestResult StudentTTest(std::span<const double> a, std::span<const double> b, Tail tail);

double Mean(std::span<const double> x);
// Unbiased (n - 1) sample variance.
double Variance(std::span<const double> x);
double StandardError(std::span<const double> x);

struct Interval {
  double lo = 0;
  double hi = 0;
};

// mean +- z * stderr with the normal quantile for `level`.
Interval NormalInterval(std::span<const double> x, double level = 0.99);

// Fraction of samples strictly greater than each threshold.
std::vector<double> ExceedanceCurve(std::span<const std::int64_t> samples,
                                    std::span<const std::int64_t> thresholds);

}  // namespace fairdial::stats

#endif  // FAIRDIAL_STATS_HPP_
