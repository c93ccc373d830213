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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cqec/integer.hpp"
#include "cqec/ring_symplectic.hpp"

namespace cqec {

/// Generator matrix of a stabilizer group on n registers: row i is the
/// symplectic vector of generator i. Finite moduli store entries in [0, Q);
/// unbounded codes keep arbitrary integers.
///
/// Construction only checks shape. Commutation and independence are the
/// business of validate(), so invalid codes can still be built and reported.
class StabilizerCode {
   public:
    StabilizerCode(Eigen::Index n, Modulus modulus, IntMatrix generators,
                   std::optional<std::int64_t> origin_prime = std::nullopt,
                   std::optional<std::int64_t> claimed_distance = std::nullopt);

    /// Builds from Pauli vectors, which must all share length 2n.
    static StabilizerCode from_paulis(const std::vector<PauliVec>& generators, Modulus modulus);

    Eigen::Index n() const { return n_; }
    const Modulus& modulus() const { return modulus_; }
    const IntMatrix& generators() const { return generators_; }
    Eigen::Index num_generators() const { return generators_.rows(); }
    PauliVec generator(Eigen::Index i) const { return PauliVec(generators_.row(i), modulus_); }

    const std::optional<std::int64_t>& origin_prime() const { return origin_prime_; }
    const std::optional<std::int64_t>& claimed_distance() const { return claimed_distance_; }

    StabilizerCode with_claimed_distance(std::optional<std::int64_t> d) const;
    StabilizerCode with_origin_prime(std::optional<std::int64_t> q) const;

    /// Generator rows reduced into [0, Q).
    IntMatrix generators_mod(std::int64_t q) const;

    friend bool operator==(const StabilizerCode& a, const StabilizerCode& b);

   private:
    Eigen::Index n_;
    Modulus modulus_;
    IntMatrix generators_;
    std::optional<std::int64_t> origin_prime_;
    std::optional<std::int64_t> claimed_distance_;
};

struct CommutationViolation {
    Eigen::Index first;
    Eigen::Index second;
    Integer product;
};

struct ValidationReport {
    std::vector<CommutationViolation> violations;
    /// Generators found to lie in the span of the others.
    std::vector<Eigen::Index> dependent;

    bool valid() const { return violations.empty() && dependent.empty(); }
    std::string summary() const;
};

/// Pairwise commutation (exact over Z for unbounded codes, mod Q otherwise)
/// and independence: rank over GF(p) for prime moduli, integer rank for
/// unbounded codes, and a row-by-row span test for composite moduli.
ValidationReport validate(const StabilizerCode& code);

/// Thrown by operations that require a valid code.
class InvalidCodeError : public std::invalid_argument {
   public:
    explicit InvalidCodeError(const ValidationReport& report);
    const ValidationReport& report() const { return report_; }

   private:
    ValidationReport report_;
};

void require_valid(const StabilizerCode& code);

/// Component i is symplectic_product(generator_i, e), exact for an
/// unbounded `over` and reduced into [0, Q) otherwise. Generator and error
/// entries are read as stored integers.
IntVector syndrome(const StabilizerCode& code, const PauliVec& e, Modulus over);

class CanonicalizationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A prime-field code rearranged into the shape [I_r X2 | Z1 Z2].
///
/// The canonical frame is reached by exchanging X and Z on the registers in
/// `hadamard_swaps` (indexed by original register; (x, z) -> (z, -x)) and then
/// permuting registers so canonical position k holds original register
/// `register_permutation[k]`.
struct CanonicalForm {
    StabilizerCode code;
    Eigen::Index rank;
    std::vector<Eigen::Index> register_permutation;
    std::vector<bool> hadamard_swaps;

    /// Maps rows written in the canonical frame back to the original
    /// registers and orientation. Exact over Z; the symplectic form of any
    /// pair of rows is unchanged.
    IntMatrix to_original_frame(const IntMatrix& canonical_rows) const;
};

/// Symplectic Gaussian elimination over GF(p). Pivots on the leftmost
/// register with an X entry, falling back to a Z entry (and an X<->Z
/// exchange) when no X entry is left.
/// Throws std::invalid_argument for non-prime moduli or invalid codes and
/// CanonicalizationError if no pivot exists.
CanonicalForm canonical_form(const StabilizerCode& code);

}  // namespace cqec
