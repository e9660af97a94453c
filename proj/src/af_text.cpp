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
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fairdial/af.hpp"
#include "fairdial/error.hpp"

namespace fairdial::af {
namespace {

[[noreturn]] void ParseError(std::size_t line, const std::string& what) {
  Fail(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t ParseCount(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

Framework ParseFramework(std::string_view text) {
  std::size_t line_no = 0;
  bool have_count = false;
  std::uint64_t n = 0;
  std::vector<Attack> attacks;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto toks = Tokens(line);
    if (toks.empty()) continue;
    if (!have_count) {
      if (toks.size() != 1) ParseError(line_no, "expected the argument count alone");
      n = ParseCount(toks[0], line_no);
      if (n > UINT32_MAX) ParseError(line_no, "argument count too large");
      have_count = true;
      continue;
    }
    if (toks.size() != 2) ParseError(line_no, "expected '<attacker> <target>'");
    const std::uint64_t a = ParseCount(toks[0], line_no);
    const std::uint64_t b = ParseCount(toks[1], line_no);
    if (a >= n || b >= n) {
      ParseError(line_no, "argument id out of range [0," + std::to_string(n) + ")");
    }
    attacks.push_back({static_cast<ArgumentId>(a), static_cast<ArgumentId>(b)});
  }
  if (!have_count) ParseError(line_no == 0 ? 1 : line_no, "missing argument count");
  try {
    return Framework(static_cast<std::size_t>(n), std::move(attacks));
  } catch (const Error& e) {
    Fail(ErrorCode::kParse, e.what());
  }
}

std::string EmitFramework(const Framework& af) {
  std::string out = std::to_string(af.size()) + "\n";
  for (const Attack& at : af.attacks()) {
    out += std::to_string(at.attacker);
    out += ' ';
    out += std::to_string(at.target);
    out += '\n';
  }
  return out;
}

}  // namespace fairdial::af
