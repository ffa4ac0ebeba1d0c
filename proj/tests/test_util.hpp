/*
   Copyright 2026 The nullcone Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// Shared generators for randomized tests.

#include <random>
#include <string>
#include <vector>

#include "nullcone/nullcone.hpp"

namespace nullcone::testing {

inline RingPtr<PrimeField> small_ring(std::uint64_t p, std::size_t nvars,
                                      MonomialOrder order = MonomialOrder::grevlex()) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
    return make_ring(names, PrimeField(p), order);
}

template <CoefficientField F>
Polynomial<F> random_poly(const RingPtr<F>& ring, std::mt19937_64& rng, int terms, unsigned max_exp) {
    std::uniform_int_distribution<int> coeff(-20, 20);
    std::uniform_int_distribution<unsigned> exp(0, max_exp);
    std::vector<typename Polynomial<F>::Term> out;
    for (int k = 0; k < terms; ++k) {
        Monomial m;
        for (std::size_t i = 0; i < ring->nvars(); ++i) m.set(i, exp(rng));
        out.push_back({m, ring->field().from_int(coeff(rng))});
    }
    return Polynomial<F>::from_terms(ring, std::move(out));
}

// Uniform field element; PrimeField only.
inline PrimeField::Elem random_elem(const PrimeField& f, std::mt19937_64& rng) {
    return std::uniform_int_distribution<PrimeField::Elem>(0, f.modulus() - 1)(rng);
}

}  // namespace nullcone::testing
