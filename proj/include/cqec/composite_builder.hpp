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

#pragma once

// Composite local dimensions from prime-dimension ingredients.

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "cqec/integer.hpp"
#include "cqec/ldi.hpp"
#include "cqec/stabilizer_code.hpp"

namespace cqec {

/// A code over Z_p destined for one prime factor of a composite Q.
struct PrimeComponent {
    std::int64_t p;
    StabilizerCode code;  // over Finite(p)

    /// Accepts a code over Finite(p) as is, or an integer (LDI) code which is
    /// instantiated at p. Throws for any other modulus or a non-prime p.
    static PrimeComponent from(const StabilizerCode& code, std::int64_t p);

    Eigen::Index n() const { return code.n(); }
};

/// Each component's generators times Q / p_i, reduced mod Q. Requires a
/// square-free Q and distinct primes dividing it.
std::vector<IntMatrix> pick_and_mix_scale(const std::vector<PrimeComponent>& components, std::int64_t q);

/// Vertical stack of the scaled generator sets. The claimed distance is the
/// least claimed component distance when every component claims one.
StabilizerCode mix_codes(const std::vector<PrimeComponent>& components, std::int64_t q);

/// Pads generators with identity outside registers [offset, offset + n0).
StabilizerCode block_embed(const StabilizerCode& code, Eigen::Index total_n, Eigen::Index offset);

/// `copies` disjoint block embeddings side by side.
StabilizerCode tile_blocks(const StabilizerCode& code, Eigen::Index copies);

/// Appends commuting logical operators to the generators, shrinking K by
/// the product of their additive orders. Throws std::invalid_argument if a
/// vector fails to commute with the generators (or an earlier appended
/// vector) or already lies in the group.
StabilizerCode gauge_fix_to_integer_k(const StabilizerCode& code, const std::vector<PauliVec>& logicals);

namespace codes {

/// XZZXI and its cyclic shifts, mod 2, d = 3.
StabilizerCode five_qubit();
/// X Z Z^-1 X^-1 I and cyclic shifts mod p, d = 3. For p <= 5 the distance
/// is confirmed by exhaustive search before returning.
StabilizerCode five_qudit(std::int64_t p);
/// Binary Steane code, d = 3.
StabilizerCode steane();
/// to_ldi(steane()).
LdiCode steane_ldi();
/// n - 1 adjacent-pair checks Z_i Z_{i+1}^-1 (or the X analogue) mod p.
StabilizerCode repetition_z(std::int64_t p, Eigen::Index n);
StabilizerCode repetition_x(std::int64_t p, Eigen::Index n);

using KnownCode = std::variant<StabilizerCode, LdiCode>;

/// Looks a code up by name: five_qubit, five_qudit:P, steane, steane_ldi,
/// repetition_z:P:N, repetition_x:P:N. Throws std::invalid_argument for
/// unknown names or bad parameters.
KnownCode known_code(std::string_view name);

}  // namespace codes

}  // namespace cqec
