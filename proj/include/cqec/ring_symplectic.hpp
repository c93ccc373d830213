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

// Pauli operators in the symplectic (X powers | Z powers) representation,
// either reduced mod a finite local dimension Q or carried over the integers.

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "cqec/integer.hpp"

namespace cqec {

/// Either a finite ring Z_Q (Q >= 2) or the integers.
class Modulus {
   public:
    static Modulus finite(std::int64_t q);
    static Modulus unbounded() { return Modulus(0); }

    bool is_finite() const { return q_ != 0; }
    bool is_unbounded() const { return q_ == 0; }
    /// Q for a finite modulus; throws for the integers.
    std::int64_t value() const;

    std::string to_string() const;

    friend bool operator==(const Modulus&, const Modulus&) = default;

   private:
    explicit Modulus(std::int64_t q) : q_(q) {}
    std::int64_t q_;
};

enum class LiftPolicy {
    NonNegative,  // entries as stored, in [0, Q)
    Symmetric,    // entries in (-Q/2, Q/2]
};

/// A 2n-entry vector: X powers in [0, n), Z powers in [n, 2n).
/// Entries under a finite modulus are always stored reduced into [0, Q).
class PauliVec {
   public:
    PauliVec(IntVector entries, Modulus modulus);
    PauliVec(std::initializer_list<long> entries, Modulus modulus);

    static PauliVec zero(Eigen::Index n, Modulus modulus);

    Eigen::Index n() const { return entries_.size() / 2; }
    const IntVector& entries() const { return entries_; }
    const Modulus& modulus() const { return modulus_; }

    const Integer& x(Eigen::Index register_index) const { return entries_(register_index); }
    const Integer& z(Eigen::Index register_index) const { return entries_(n() + register_index); }

    PauliVec operator+(const PauliVec& other) const;
    PauliVec operator*(const Integer& scalar) const;

    friend bool operator==(const PauliVec& a, const PauliVec& b) {
        return a.modulus_ == b.modulus_ && a.entries_ == b.entries_;
    }

   private:
    IntVector entries_;
    Modulus modulus_;
};

std::ostream& operator<<(std::ostream& out, const PauliVec& v);

/// Integer symplectic form sum_k [z(b)_k x(a)_k - x(b)_k z(a)_k] on raw rows.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar symplectic_form(const Eigen::MatrixBase<DerivedA>& a,
                                          const Eigen::MatrixBase<DerivedB>& b) {
    using Scalar = typename DerivedA::Scalar;
    if (a.size() != b.size() || a.size() % 2 != 0) {
        throw std::invalid_argument("symplectic_form: length mismatch");
    }
    const Eigen::Index n = a.size() / 2;
    Scalar acc(0);
    for (Eigen::Index k = 0; k < n; ++k) {
        acc += b(n + k) * a(k) - b(k) * a(n + k);
    }
    return acc;
}

/// Symplectic product of two Pauli vectors. Reduced into [0, Q) when both
/// carry Finite(Q); exact when both are over the integers.
/// Throws on length or modulus mismatch.
Integer symplectic_product(const PauliVec& a, const PauliVec& b);

/// The same form evaluated over the integers on the stored entries,
/// whatever the moduli.
Integer symplectic_product_over_integers(const PauliVec& a, const PauliVec& b);

/// Smallest t >= 1 with t * v == 0 mod Q.
std::int64_t additive_order(const IntVector& v, std::int64_t q);
std::int64_t additive_order(const PauliVec& v, std::int64_t q);

/// Number of registers with a nonzero X or Z power.
Eigen::Index pauli_weight(const PauliVec& v);

/// Moves a vector between the Z_Q and the integer views.
/// Finite -> Unbounded applies `policy`; anything -> Finite(Q) reduces into [0, Q).
PauliVec lift_and_reduce(const PauliVec& v, Modulus target,
                         LiftPolicy policy = LiftPolicy::NonNegative);

/// Symmetric representative of `a` mod `q`, in (-q/2, q/2].
Integer symmetric_residue(const Integer& a, std::int64_t q);

}  // namespace cqec
