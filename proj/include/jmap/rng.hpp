#pragma once

#include "jmap/rational.hpp"

#include <cstdint>

namespace jmap {

/// splitmix64 stream; identical output on every platform, unlike the
/// standard library distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi].
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool coin() { return next() & 1; }

    /// Small rational with numerator in [-num_bound, num_bound] and
    /// denominator in [1, den_bound].
    Rational rational(long long num_bound, long long den_bound = 1) {
        return Rational(range(-num_bound, num_bound), range(1, den_bound));
    }

    Rational nonzero_rational(long long num_bound, long long den_bound = 1) {
        for (;;) {
            Rational r = rational(num_bound, den_bound);
            if (!r.is_zero()) return r;
        }
    }

    double real(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(next() >> 11) * 0x1.0p-53);
    }

private:
    std::uint64_t state_;
};

}  // namespace jmap
