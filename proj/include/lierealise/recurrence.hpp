#pragma once

#include <optional>
#include <vector>

#include <lierealise/rational.hpp>

namespace lierealise {

// Shortest recurrence s_k = c_1 s_{k-1} + ... + c_L s_{k-L}, valid for all
// k >= L within the given terms (Berlekamp-Massey over the rationals).
struct LinearRecurrence {
    std::vector<Rational> coefficients; // c_1..c_L
    std::size_t length() const { return coefficients.size(); }
};

LinearRecurrence berlekamp_massey(const std::vector<Rational> &s);

// z^L - c_1 z^{L-1} - ... - c_L, highest degree first.
std::vector<Rational> characteristic_polynomial(const LinearRecurrence &r);

struct RationalRoot {
    Rational value;
    unsigned multiplicity;
};

// All roots when every root is rational; nullopt otherwise. Coefficients are
// given highest degree first.
std::optional<std::vector<RationalRoot>> rational_roots(const std::vector<Rational> &poly);

} // namespace lierealise
