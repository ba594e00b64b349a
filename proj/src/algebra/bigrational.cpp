// Copyright 2026 The hzknots Authors
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

#include "hzknots/algebra/bigrational.hpp"

#include <stdexcept>

namespace hzknots {

std::string to_string(const BigRational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

BigRational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in rational: '" + std::string(text) + "'");
  BigRational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace hzknots
