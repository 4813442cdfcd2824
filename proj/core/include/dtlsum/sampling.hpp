/*
   Copyright 2026 The dtlsum Authors

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

#ifndef DTLSUM_SAMPLING_HPP
#define DTLSUM_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "dtlsum/cyclo.hpp"

namespace dtlsum {

/// Seeded source of random field elements.
///
/// Draws use plain modular reduction of mt19937_64 output rather than the
/// standard distributions, whose output is implementation-defined; the same
/// seed gives the same points with every standard library.
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(rng_() % span);
    }

    /// a + b w with numerators in [-9, 9] and denominators in [1, 6].
    /// May return zero; callers reject as needed.
    Cyclo cyclo() {
        Rational a(uniform(-9, 9), uniform(1, 6));
        Rational b(uniform(-9, 9), uniform(1, 6));
        return Cyclo(a, b);
    }

    Cyclo nonzero_cyclo() {
        for (;;) {
            Cyclo c = cyclo();
            if (!c.is_zero()) return c;
        }
    }

  private:
    std::mt19937_64 rng_;
};

}  // namespace dtlsum

#endif  // DTLSUM_SAMPLING_HPP
