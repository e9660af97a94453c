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
#include "fairdial/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>

#include "fairdial/error.hpp"

namespace fairdial::stats {

double Mean(std::span<const double> x) {
  if (x.empty()) Fail(ErrorCode::kInput, "mean of an empty sample");
  return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

double Variance(std::span<const double> x) {
  if (x.size() < 2) Fail(ErrorCode::kInput, "variance needs at least 2 values");
  const double m = Mean(x);
  double ss = 0;
  for (double v : x) ss += (v - m) * (v - m);
  return ss / static_cast<double>(x.size() - 1);
}

double StandardError(std::span<const double> x) {
  return std::sqrt(Variance(x) / static_cast<double>(x.size()));
}

TTestResult StudentTTest(std::span<const double> a, std::span<const double> b, Tail tail) {
  if (a.size() < 2 || b.size() < 2) {
    Fail(ErrorCode::kInput, "t-test needs at least 2 values per sample");
  }
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double df = na + nb - 2;
  const double pooled = ((na - 1) * Variance(a) + (nb - 1) * Variance(b)) / df;
  const double se = std::sqrt(pooled * (1 / na + 1 / nb));
  if (!(se > 0) || !std::isfinite(se)) {
    Fail(ErrorCode::kDegenerate, "t-test with zero pooled variance");
  }
  TTestResult r;
  r.df = df;
  r.t = (Mean(a) - Mean(b)) / se;
  const boost::math::students_t dist(df);
  switch (tail) {
    case Tail::kTwoSided:
      r.p = 2 * boost::math::cdf(boost::math::complement(dist, std::fabs(r.t)));
      break;
    case Tail::kLess:
      r.p = boost::math::cdf(dist, r.t);
      break;
    case Tail::kGreater:
      r.p = boost::math::cdf(boost::math::complement(dist, r.t));
      break;
  }
  r.p = std::clamp(r.p, 0.0, 1.0);
  return r;
}

Interval NormalInterval(std::span<const double> x, double level) {
  const double m = Mean(x);
  if (x.size() < 2) return {m, m};
  const boost::math::normal unit;
  const double z = boost::math::quantile(unit, 0.5 + level / 2);
  const double h = z * StandardError(x);
  return {m - h, m + h};
}

std::vector<double> ExceedanceCurve(std::span<const std::int64_t> samples,
                                    std::span<const std::int64_t> thresholds) {
  std::vector<std::int64_t> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> out;
  out.reserve(thresholds.size());
  for (std::int64_t z : thresholds) {
    const auto above = sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), z);
    out.push_back(sorted.empty() ? 0.0
                                 : static_cast<double>(above) /
                                       static_cast<double>(sorted.size()));
  }
  return out;
}

}  // namespace fairdial::stats
