// Copyright 2026 The cqec Authors
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

#include "cqec/integer.hpp"

namespace cqec {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (std::int64_t d = 3; d <= p / d; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t value) {
    constexpr std::int64_t kMaxFactorable = 100'000'000'000'000;  // 1e14
    if (value < 1) throw std::domain_error("prime_factors: non-positive value");
    if (value > kMaxFactorable) {
        throw std::domain_error("prime_factors: " + std::to_string(value) +
                                " is too large to factor by trial division");
    }
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d <= value / d; ++d) {
        if (value % d == 0) {
            out.push_back(d);
            while (value % d == 0) value /= d;
        }
    }
    if (value > 1) out.push_back(value);
    return out;
}

bool is_square_free(std::int64_t value) {
    for (std::int64_t p : prime_factors(value)) {
        if ((value / p) % p == 0) return false;
    }
    return true;
}

}  // namespace cqec
