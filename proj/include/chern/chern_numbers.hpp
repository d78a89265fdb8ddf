#pragma once

#include <map>
#include <string>

#include "chern/rational.hpp"

namespace chern {

// Pairings <c_lambda, [M]> of weight-n Chern monomials against the
// fundamental class, keyed by canonical monomial strings ("c1^2*c3").
// A missing key is an error, never a silent zero: generators fill every
// weight-n monomial, including genuinely zero pairings.
struct ChernNumbers {
    int n = 0;
    bool c1_zero = false;
    std::map<std::string, Integer> pairings;

    const Integer& get(const std::string& key) const {
        auto it = pairings.find(key);
        if (it == pairings.end())
            throw SchemaError("Chern pairing '" + key + "' missing from data");
        return it->second;
    }

    Integer euler() const { return get("c" + std::to_string(n)); }
};

}  // namespace chern
