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

#include "cqec/composite_builder.hpp"

#include <array>
#include <charconv>
#include <set>
#include <string>

#include "cqec/analysis.hpp"
#include "cqec/linalg_zn.hpp"

namespace cqec {

PrimeComponent PrimeComponent::from(const StabilizerCode& code, std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("component prime " + std::to_string(p) + " is not prime");
    if (code.modulus().is_unbounded()) {
        return {p, instantiate(LdiCode(code, code.origin_prime().value_or(p)), p)};
    }
    if (code.modulus().value() != p) {
        throw std::invalid_argument("component code is mod " + code.modulus().to_string() + ", expected mod " +
                                    std::to_string(p));
    }
    return {p, code};
}

std::vector<IntMatrix> pick_and_mix_scale(const std::vector<PrimeComponent>& components, std::int64_t q) {
    if (q < 2 || !is_square_free(q)) throw std::invalid_argument("pick_and_mix: Q = " + std::to_string(q) + " is not square-free");
    std::set<std::int64_t> seen;
    std::vector<IntMatrix> out;
    const Integer big_q(static_cast<long>(q));
    for (const PrimeComponent& c : components) {
        if (!is_prime(c.p)) throw std::invalid_argument("pick_and_mix: " + std::to_string(c.p) + " is not prime");
        if (q % c.p != 0) {
            throw std::invalid_argument("pick_and_mix: " + std::to_string(c.p) + " does not divide Q = " + std::to_string(q));
        }
        if (!seen.insert(c.p).second) throw std::invalid_argument("pick_and_mix: duplicate prime " + std::to_string(c.p));
        const Integer factor(static_cast<long>(q / c.p));
        IntMatrix scaled = c.code.generators_mod(c.p) * factor;
        out.push_back(scaled.unaryExpr([&big_q](const Integer& v) { return mod_floor(v, big_q); }));
    }
    return out;
}

StabilizerCode mix_codes(const std::vector<PrimeComponent>& components, std::int64_t q) {
    if (components.empty()) throw std::invalid_argument("mix_codes: no components");
    const Eigen::Index n = components.front().n();
    std::optional<std::int64_t> distance;
    bool all_claimed = true;
    for (const PrimeComponent& c : components) {
        if (c.n() != n) {
            throw std::invalid_argument("mix_codes: component lengths differ (" + std::to_string(n) + " vs " +
                                        std::to_string(c.n()) + ")");
        }
        require_valid(c.code);
        if (c.code.claimed_distance()) {
            distance = distance ? std::min(*distance, *c.code.claimed_distance()) : *c.code.claimed_distance();
        } else {
            all_claimed = false;
        }
    }
    const std::vector<IntMatrix> scaled = pick_and_mix_scale(components, q);
    Eigen::Index total_rows = 0;
    for (const IntMatrix& m : scaled) total_rows += m.rows();
    IntMatrix stacked(total_rows, 2 * n);
    Eigen::Index at = 0;
    for (const IntMatrix& m : scaled) {
        stacked.middleRows(at, m.rows()) = m;
        at += m.rows();
    }
    return StabilizerCode(n, Modulus::finite(q), std::move(stacked), std::nullopt,
                          all_claimed ? distance : std::nullopt);
}

StabilizerCode block_embed(const StabilizerCode& code, Eigen::Index total_n, Eigen::Index offset) {
    const Eigen::Index n0 = code.n();
    if (offset < 0 || offset + n0 > total_n) {
        throw std::invalid_argument("block_embed: block of " + std::to_string(n0) + " registers at offset " +
                                    std::to_string(offset) + " does not fit in " + std::to_string(total_n));
    }
    IntMatrix padded = IntMatrix::Zero(code.num_generators(), 2 * total_n);
    padded.middleCols(offset, n0) = code.generators().leftCols(n0);
    padded.middleCols(total_n + offset, n0) = code.generators().rightCols(n0);
    return StabilizerCode(total_n, code.modulus(), std::move(padded), code.origin_prime(), code.claimed_distance());
}

StabilizerCode tile_blocks(const StabilizerCode& code, Eigen::Index copies) {
    if (copies < 1) throw std::invalid_argument("tile_blocks: need at least one copy");
    const Eigen::Index total_n = code.n() * copies;
    IntMatrix rows(code.num_generators() * copies, 2 * total_n);
    for (Eigen::Index c = 0; c < copies; ++c) {
        rows.middleRows(c * code.num_generators(), code.num_generators()) =
            block_embed(code, total_n, c * code.n()).generators();
    }
    return StabilizerCode(total_n, code.modulus(), std::move(rows), code.origin_prime(), code.claimed_distance());
}

StabilizerCode gauge_fix_to_integer_k(const StabilizerCode& code, const std::vector<PauliVec>& logicals) {
    if (!code.modulus().is_finite()) throw std::invalid_argument("gauge_fix: code must have a finite modulus");
    const std::int64_t q = code.modulus().value();
    const Integer big_q(static_cast<long>(q));
    IntMatrix rows = code.generators();
    for (std::size_t l = 0; l < logicals.size(); ++l) {
        const PauliVec& v = logicals[l];
        if (v.n() != code.n()) throw std::invalid_argument("gauge_fix: logical has the wrong length");
        const IntVector entries = PauliVec(v.entries(), code.modulus()).entries();
        for (Eigen::Index i = 0; i < rows.rows(); ++i) {
            if (mod_floor(symplectic_form(rows.row(i), entries), big_q) != 0) {
                throw std::invalid_argument("gauge_fix: logical " + std::to_string(l + 1) +
                                            " does not commute with generator " + std::to_string(i + 1));
            }
        }
        if (membership(entries, rows, q)) {
            throw std::invalid_argument("gauge_fix: logical " + std::to_string(l + 1) +
                                        " is already in the stabilizer group");
        }
        rows.conservativeResize(rows.rows() + 1, Eigen::NoChange);
        rows.row(rows.rows() - 1) = entries;
    }
    return StabilizerCode(code.n(), code.modulus(), std::move(rows), code.origin_prime(), code.claimed_distance());
}

namespace codes {

namespace {

// Cyclic shifts of a single length-5 generator, first four kept.
StabilizerCode cyclic_five(const std::array<long, 5>& x, const std::array<long, 5>& z, std::int64_t p) {
    IntMatrix rows(4, 10);
    for (int s = 0; s < 4; ++s) {
        for (int k = 0; k < 5; ++k) {
            rows(s, (k + s) % 5) = x[static_cast<std::size_t>(k)];
            rows(s, 5 + (k + s) % 5) = z[static_cast<std::size_t>(k)];
        }
    }
    return StabilizerCode(5, Modulus::finite(p), std::move(rows), p, 3);
}

}  // namespace

StabilizerCode five_qubit() { return cyclic_five({1, 0, 0, 1, 0}, {0, 1, 1, 0, 0}, 2); }

StabilizerCode five_qudit(std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("five_qudit: " + std::to_string(p) + " is not prime");
    StabilizerCode code = cyclic_five({1, 0, 0, -1, 0}, {0, 1, -1, 0, 0}, p);
    require_valid(code);
    if (p <= 5) {
        const DistanceResult d = brute_force_distance(code, p, 3);
        if (d.distance != 3) throw std::logic_error("five_qudit: exhaustive search did not confirm d = 3");
    }
    return code;
}

StabilizerCode steane() {
    // Hamming [7,4] parity checks as X and Z stabilizers.
    const long h[3][7] = {{1, 0, 0, 1, 0, 1, 1}, {0, 1, 0, 1, 1, 0, 1}, {0, 0, 1, 0, 1, 1, 1}};
    IntMatrix rows = IntMatrix::Zero(6, 14);
    for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < 7; ++k) {
            rows(i, k) = h[i][k];
            rows(3 + i, 7 + k) = h[i][k];
        }
    }
    return StabilizerCode(7, Modulus::finite(2), std::move(rows), 2, 3);
}

LdiCode steane_ldi() { return to_ldi(steane()); }

namespace {

StabilizerCode repetition(std::int64_t p, Eigen::Index n, bool z_type) {
    if (!is_prime(p)) throw std::invalid_argument("repetition: " + std::to_string(p) + " is not prime");
    if (n < 2) throw std::invalid_argument("repetition: need n >= 2");
    IntMatrix rows = IntMatrix::Zero(n - 1, 2 * n);
    const Eigen::Index base = z_type ? n : 0;
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        rows(i, base + i) = 1;
        rows(i, base + i + 1) = -1;
    }
    return StabilizerCode(n, Modulus::finite(p), std::move(rows), p);
}

std::vector<std::int64_t> parse_params(std::string_view text) {
    std::vector<std::int64_t> out;
    while (!text.empty()) {
        const std::size_t colon = text.find(':');
        const std::string_view part = text.substr(0, colon);
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc() || ptr != part.data() + part.size()) {
            throw std::invalid_argument("known_code: bad parameter '" + std::string(part) + "'");
        }
        out.push_back(value);
        if (colon == std::string_view::npos) break;
        text.remove_prefix(colon + 1);
    }
    return out;
}

}  // namespace

StabilizerCode repetition_z(std::int64_t p, Eigen::Index n) { return repetition(p, n, true); }
StabilizerCode repetition_x(std::int64_t p, Eigen::Index n) { return repetition(p, n, false); }

KnownCode known_code(std::string_view name) {
    const std::size_t colon = name.find(':');
    const std::string_view base = name.substr(0, colon);
    const std::vector<std::int64_t> params =
        colon == std::string_view::npos ? std::vector<std::int64_t>{} : parse_params(name.substr(colon + 1));
    auto expect = [&](std::size_t count) {
        if (params.size() != count) {
            throw std::invalid_argument("known_code: " + std::string(base) + " takes " + std::to_string(count) +
                                        " parameter(s)");
        }
    };
    if (base == "five_qubit") {
        expect(0);
        return five_qubit();
    }
    if (base == "five_qudit") {
        expect(1);
        return five_qudit(params[0]);
    }
    if (base == "steane") {
        expect(0);
        return steane();
    }
    if (base == "steane_ldi") {
        expect(0);
        return steane_ldi();
    }
    if (base == "repetition_z" || base == "repetition_x") {
        expect(2);
        return repetition(params[0], static_cast<Eigen::Index>(params[1]), base == "repetition_z");
    }
    throw std::invalid_argument("known_code: unknown code '" + std::string(name) + "'");
}

}  // namespace codes

}  // namespace cqec
