// Copyright 2026 The Authors.
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

#include "fairsub/fraction.h"

#include <cctype>
#include <cstdlib>

namespace fairsub {

namespace {

bool AllDigits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

int64_t ParseInt(const std::string& s) {
  if (!AllDigits(s) || s.size() > 18) {
    throw std::invalid_argument("ParseFraction: bad integer literal '" + s + "'");
  }
  return std::strtoll(s.c_str(), nullptr, 10);
}

}  // namespace

Fraction ParseFraction(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) throw std::invalid_argument("ParseFraction: empty literal");

  Fraction result;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    int64_t num = ParseInt(s.substr(0, slash));
    int64_t den = ParseInt(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("ParseFraction: zero denominator");
    result = Fraction(num, den);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = dot == 0 ? "0" : s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (frac.empty()) frac = "0";
    if (frac.size() > 15) {
      throw std::invalid_argument("ParseFraction: too many decimal digits in '" + text + "'");
    }
    int64_t scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    result = Fraction(ParseInt(whole)) + Fraction(ParseInt(frac), scale);
  } else {
    result = Fraction(ParseInt(s));
  }
  return negative ? -result : result;
}

std::string FormatFraction(const Fraction& f) {
  if (f.denominator() == 1) return std::to_string(f.numerator());
  return std::to_string(f.numerator()) + "/" + std::to_string(f.denominator());
}

}  // namespace fairsub
