// Copyright 2026 The chordalm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "chordalm/error.hpp"
#include "chordalm/gfq.hpp"
#include "chordalm/matroid.hpp"
#include "chordalm/peo.hpp"

// Matroid files:
//
//   matroid q=<q> r=<r> n=<n>
//   <label> <digits>            (n lines)
//
// <digits> has exactly r characters in 0..q-1, most significant coordinate
// first. '#' starts a comment running to the end of the line; blank lines are
// ignored.

namespace chordalm {

namespace detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != '#' && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

inline std::size_t parse_header_field(const Token& t, std::string_view key, std::size_t line_no) {
  std::string prefix = std::string(key) + "=";
  if (t.text.rfind(prefix, 0) != 0) throw ParseError(line_no, t.column, "expected " + prefix + "<value>");
  std::string value = t.text.substr(prefix.size());
  if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      value.size() > 6) {
    throw ParseError(line_no, t.column + prefix.size(), "expected a non-negative integer");
  }
  return static_cast<std::size_t>(std::stoul(value));
}

}  // namespace detail

inline RepMatroid parse_matroid(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t q = 0, r = 0, n = 0;
  std::vector<Vec> pts;
  std::vector<std::string> labels;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = detail::tokenize(line);
    if (tokens.empty()) continue;
    if (!have_header) {
      if (tokens[0].text != "matroid") throw ParseError(line_no, tokens[0].column, "expected 'matroid' header");
      if (tokens.size() != 4) throw ParseError(line_no, 1, "header needs q=, r= and n= fields");
      q = detail::parse_header_field(tokens[1], "q", line_no);
      r = detail::parse_header_field(tokens[2], "r", line_no);
      n = detail::parse_header_field(tokens[3], "n", line_no);
      if (!is_supported_order(static_cast<int>(q))) {
        throw ParseError(line_no, tokens[1].column, "unsupported field order " + std::to_string(q));
      }
      have_header = true;
      continue;
    }
    if (pts.size() == n) throw ParseError(line_no, tokens[0].column, "more than n points");
    if (tokens.size() != 2) throw ParseError(line_no, tokens[0].column, "expected '<label> <digits>'");
    const detail::Token& digits = tokens[1];
    if (digits.text.size() != r) {
      throw ParseError(line_no, digits.column, "expected " + std::to_string(r) + " digits");
    }
    Vec p(r);
    for (std::size_t i = 0; i < r; ++i) {
      char c = digits.text[i];
      if (c < '0' || c >= static_cast<char>('0' + q)) {
        throw ParseError(line_no, digits.column + i, std::string("digit '") + c + "' outside the field");
      }
      p[i] = static_cast<Elem>(c - '0');
    }
    labels.push_back(tokens[0].text);
    pts.push_back(std::move(p));
  }
  if (!have_header) throw ParseError(line_no + 1, 1, "missing 'matroid' header");
  if (pts.size() != n) {
    throw ParseError(line_no + 1, 1, "expected " + std::to_string(n) + " points, found " + std::to_string(pts.size()));
  }
  return RepMatroid(gf(static_cast<int>(q)), r, std::move(pts), std::move(labels));
}

inline std::string format_matroid(const RepMatroid& m) {
  std::string out = "matroid q=" + std::to_string(m.q()) + " r=" + std::to_string(m.ambient_rank()) +
                    " n=" + std::to_string(m.size()) + "\n";
  for (std::size_t i = 0; i < m.size(); ++i) out += m.label(i) + " " + to_digits(m.point(i)) + "\n";
  return out;
}

/// Points sorted by digit string and labelled by their digits.
inline RepMatroid canonical_labelling(const RepMatroid& m) {
  std::vector<Vec> pts = m.points();
  std::sort(pts.begin(), pts.end());
  return RepMatroid(m.field(), m.ambient_rank(), std::move(pts));
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline RepMatroid read_matroid(const std::string& path) { return parse_matroid(read_text_file(path)); }

inline void write_matroid(const RepMatroid& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << format_matroid(m);
}

/// Certificates: one cocircuit per line, labels separated by spaces.
inline std::string format_certificate(const PeoCertificate& cert) {
  std::string out;
  for (const auto& c : cert.cocircuits) {
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + c[i];
    out += "\n";
  }
  return out;
}

inline PeoCertificate parse_certificate(std::string_view text) {
  PeoCertificate cert;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto tokens = detail::tokenize(line);
    if (tokens.empty()) continue;
    std::vector<std::string> step;
    for (auto& t : tokens) step.push_back(std::move(t.text));
    cert.cocircuits.push_back(std::move(step));
  }
  return cert;
}

}  // namespace chordalm
