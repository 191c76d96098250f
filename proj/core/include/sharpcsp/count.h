// Copyright 2026 The sharpcsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sharpcsp {

/// Exact, arbitrary-precision count of satisfying assignments.
using Count = boost::multiprecision::cpp_int;

inline std::string to_string(const Count& c) { return c.str(); }

inline Count pow2(std::size_t e) {
  Count c = 1;
  c <<= e;
  return c;
}

}  // namespace sharpcsp
