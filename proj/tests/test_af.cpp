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
#include <algorithm>
#include <string>
#include <vector>

#include <doctest.h>

#include "fairdial/af.hpp"
#include "fairdial/error.hpp"
#include "fairdial/rng.hpp"
#include "test_util.hpp"

namespace fairdial {
namespace {

using af::Extension;
using af::Framework;
using af::SolverPath;

std::vector<Extension> Sorted(std::vector<Extension> v) {
  std::sort(v.begin(), v.end());
  return v;
}

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return static_cast<ErrorCode>(0);
}

TEST_CASE("preferred extensions of small fixed frameworks") {
  // Values worked out by hand.
  struct Case {
    std::size_t n;
    std::vector<af::Attack> attacks;
    std::vector<Extension> expected;
  };
  const std::vector<Case> cases = {
      {0, {}, {{}}},
      {1, {}, {{0}}},
      {1, {{0, 0}}, {{}}},
      {2, {{0, 1}, {1, 0}}, {{0}, {1}}},
      {3, {{0, 1}, {1, 2}}, {{0, 2}}},
      {3, {{0, 1}, {1, 2}, {2, 0}}, {{}}},
      {4, {{0, 1}, {1, 0}, {1, 2}, {2, 3}}, {{0, 2}, {1, 3}}},
      {3, {{0, 1}, {1, 0}, {0, 2}, {1, 2}, {2, 2}}, {{0}, {1}}},
  };
  for (const auto& c : cases) {
    const Framework af(c.n, c.attacks);
    CHECK(Sorted(af::PreferredExtensions(af)) == c.expected);
    CHECK(Sorted(af::PreferredExtensions(af, SolverPath::kExhaustive)) == c.expected);
  }
}

TEST_CASE("preferred extensions are ordered by size then lexicographically") {
  const Framework af(4, {{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 2}});
  // {0,2}, {0,3}, {1,3}
  const auto ext = af::PreferredExtensions(af);
  REQUIRE(ext.size() == 3);
  CHECK(ext[0] == Extension{0, 2});
  CHECK(ext[1] == Extension{0, 3});
  CHECK(ext[2] == Extension{1, 3});
}

TEST_CASE("sceptical acceptance") {
  const Framework chain(3, {{0, 1}, {1, 2}});
  CHECK(af::IsScepticallyAccepted(0, chain));
  CHECK_FALSE(af::IsScepticallyAccepted(1, chain));
  CHECK(af::IsScepticallyAccepted(2, chain));
  const Framework pair(2, {{0, 1}, {1, 0}});
  CHECK_FALSE(af::IsScepticallyAccepted(0, pair));
  // Floating reinstatement: c is defended in every extension.
  const Framework floating(4, {{0, 1}, {1, 0}, {0, 2}, {1, 2}, {2, 3}});
  CHECK(af::IsScepticallyAccepted(3, floating));
  CHECK(af::GroundedExtension(floating).empty());
}

TEST_CASE("labelling and exhaustive paths agree with a bitmask oracle") {
  Rng rng(20261014);
  for (int i = 0; i < 400; ++i) {
    const Framework af = testing::RandomFramework(rng, 9, rng.Uniform(0.05, 0.45));
    const auto oracle = testing::BrutePreferred(af);
    CHECK(Sorted(af::PreferredExtensions(af)) == oracle);
    CHECK(Sorted(af::PreferredExtensions(af, SolverPath::kExhaustive)) == oracle);
  }
}

TEST_CASE("structural properties of preferred extensions") {
  Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    const Framework af = testing::RandomFramework(rng, 14, rng.Uniform(0.05, 0.3));
    const auto ext = af::PreferredExtensions(af);
    const auto grounded = af::GroundedExtension(af);
    CHECK(af::IsAdmissible(grounded, af));
    REQUIRE_FALSE(ext.empty());
    for (const auto& e : ext) {
      CHECK(af::IsAdmissible(e, af));
      CHECK(std::includes(e.begin(), e.end(), grounded.begin(), grounded.end()));
      for (const auto& f : ext) {
        if (&e != &f) CHECK_FALSE(std::includes(f.begin(), f.end(), e.begin(), e.end()));
      }
    }
    for (af::ArgumentId x = 0; x < af.size(); ++x) {
      const bool in_all = std::all_of(ext.begin(), ext.end(), [&](const Extension& e) {
        return std::binary_search(e.begin(), e.end(), x);
      });
      CHECK(af::IsScepticallyAccepted(x, af) == in_all);
    }
  }
}

TEST_CASE("conflict-freeness and admissibility") {
  const Framework af(3, {{0, 1}, {1, 2}});
  const std::vector<af::ArgumentId> a{0, 1}, b{2}, c{0, 2};
  CHECK_FALSE(af::IsConflictFree(a, af));
  CHECK(af::IsConflictFree(b, af));
  CHECK_FALSE(af::IsAdmissible(b, af));
  CHECK(af::IsAdmissible(c, af));
}

TEST_CASE("framework construction errors") {
  CHECK(CodeOf([] { Framework(2, {{0, 2}}); }) == ErrorCode::kInput);
  CHECK(CodeOf([] { Framework(2, {{0, 1}, {0, 1}}); }) == ErrorCode::kInput);
  const Framework big(af::kExhaustiveLimit + 1, {});
  CHECK(CodeOf([&] { af::PreferredExtensions(big, SolverPath::kExhaustive); }) ==
        ErrorCode::kCapacity);
  CHECK(af::PreferredExtensions(big).size() == 1);
}

TEST_CASE("trivial-graph text round trip") {
  const std::string text = "# demo\n3\n0 1\n1 2   # tail\n\n2 0\n";
  const Framework af = af::ParseFramework(text);
  CHECK(af.size() == 3);
  CHECK(af.attacks().size() == 3);
  CHECK(af::ParseFramework(af::EmitFramework(af)) == af);

  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const Framework r = testing::RandomFramework(rng, 12, 0.2);
    CHECK(af::ParseFramework(af::EmitFramework(r)) == r);
  }
}

TEST_CASE("trivial-graph parse errors") {
  for (const char* bad : {"", "# only comment\n", "x\n", "2 3\n", "2\n0\n", "2\n0 2\n",
                          "2\n0 1\n0 1\n", "2\n-1 0\n", "2\n0 1 1\n"}) {
    CAPTURE(bad);
    const ErrorCode code = CodeOf([&] { af::ParseFramework(bad); });
    CHECK((code == ErrorCode::kParse || code == ErrorCode::kInput));
  }
}

}  // namespace
}  // namespace fairdial
