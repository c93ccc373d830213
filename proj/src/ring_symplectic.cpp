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

#include "cqec/ring_symplectic.hpp"

#include <numeric>
#include <ostream>

namespace cqec {

Modulus Modulus::finite(std::int64_t q) {
    if (q < 2) throw std::invalid_argument("finite modulus must be >= 2, got " + std::to_string(q));
    return Modulus(q);
}

std::int64_t Modulus::value() const {
    if (!is_finite()) throw std::logic_error("unbounded modulus has no finite value");
    return q_;
}

std::string Modulus::to_string() const { return is_finite() ? std::to_string(q_) : "Z"; }

namespace {

IntVector reduce_entries(IntVector entries, const Modulus& modulus) {
    if (modulus.is_finite()) {
        const Integer q(static_cast<long>(modulus.value()));
        for (Eigen::Index i = 0; i < entries.size(); ++i) entries(i) = mod_floor(entries(i), q);
    }
    return entries;
}

}  // namespace

PauliVec::PauliVec(IntVector entries, Modulus modulus)
    : entries_(reduce_entries(std::move(entries), modulus)), modulus_(modulus) {
    if (entries_.size() % 2 != 0) {
        throw std::invalid_argument("PauliVec needs an even number of entries, got " +
                                    std::to_string(entries_.size()));
    }
}

PauliVec::PauliVec(std::initializer_list<long> entries, Modulus modulus)
    : PauliVec(
          [&] {
              IntVector v(static_cast<Eigen::Index>(entries.size()));
              Eigen::Index i = 0;
              for (long e : entries) v(i++) = e;
              return v;
          }(),
          modulus) {}

PauliVec PauliVec::zero(Eigen::Index n, Modulus modulus) {
    return PauliVec(IntVector::Zero(2 * n), modulus);
}

PauliVec PauliVec::operator+(const PauliVec& other) const {
    if (entries_.size() != other.entries_.size()) throw std::invalid_argument("PauliVec +: length mismatch");
    if (!(modulus_ == other.modulus_)) throw std::invalid_argument("PauliVec +: modulus mismatch");
    return PauliVec(IntVector(entries_ + other.entries_), modulus_);
}

PauliVec PauliVec::operator*(const Integer& scalar) const {
    return PauliVec(IntVector(entries_ * scalar), modulus_);
}

std::ostream& operator<<(std::ostream& out, const PauliVec& v) {
    out << '(';
    for (Eigen::Index i = 0; i < v.entries().size(); ++i) {
        if (i == v.n()) {
            out << " |";
        } else if (i > 0) {
            out << ',';
        }
        if (i == v.n()) out << ' ';
        out << v.entries()(i);
    }
    return out << ") mod " << v.modulus().to_string();
}

Integer symplectic_product_over_integers(const PauliVec& a, const PauliVec& b) {
    if (a.entries().size() != b.entries().size()) {
        throw std::invalid_argument("symplectic_product: length mismatch");
    }
    return symplectic_form(a.entries(), b.entries());
}

Integer symplectic_product(const PauliVec& a, const PauliVec& b) {
    if (a.entries().size() != b.entries().size()) {
        throw std::invalid_argument("symplectic_product: length mismatch");
    }
    if (!(a.modulus() == b.modulus())) {
        throw std::invalid_argument("symplectic_product: modulus mismatch (" + a.modulus().to_string() +
                                    " vs " + b.modulus().to_string() + ")");
    }
    Integer value = symplectic_form(a.entries(), b.entries());
    if (a.modulus().is_finite()) value = mod_floor(value, Integer(static_cast<long>(a.modulus().value())));
    return value;
}

std::int64_t additive_order(const IntVector& v, std::int64_t q) {
    if (q < 2) throw std::invalid_argument("additive_order: Q must be >= 2");
    const Integer big_q(static_cast<long>(q));
    Integer g = big_q;
    for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
    return to_int64(big_q / g);
}

std::int64_t additive_order(const PauliVec& v, std::int64_t q) { return additive_order(v.entries(), q); }

Eigen::Index pauli_weight(const PauliVec& v) {
    Eigen::Index weight = 0;
    for (Eigen::Index k = 0; k < v.n(); ++k) {
        if (v.x(k) != 0 || v.z(k) != 0) ++weight;
    }
    return weight;
}

Integer symmetric_residue(const Integer& a, std::int64_t q) {
    const Integer big_q(static_cast<long>(q));
    Integer r = mod_floor(a, big_q);
    if (2 * r > big_q) r -= big_q;
    return r;
}

PauliVec lift_and_reduce(const PauliVec& v, Modulus target, LiftPolicy policy) {
    if (target.is_finite()) return PauliVec(v.entries(), target);
    if (v.modulus().is_unbounded() || policy == LiftPolicy::NonNegative) {
        return PauliVec(v.entries(), target);
    }
    IntVector lifted = v.entries();
    for (Eigen::Index i = 0; i < lifted.size(); ++i) {
        lifted(i) = symmetric_residue(lifted(i), v.modulus().value());
    }
    return PauliVec(std::move(lifted), target);
}

}  // namespace cqec
