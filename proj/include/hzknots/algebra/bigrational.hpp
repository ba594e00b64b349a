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

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hzknots {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Renders `p/q`, or just `p` when the denominator is 1.
std::string to_string(const BigRational& value);

/// Parses `p` or `p/q` (optional leading '-'); throws std::invalid_argument.
BigRational parse_rational(std::string_view text);

}  // namespace hzknots
