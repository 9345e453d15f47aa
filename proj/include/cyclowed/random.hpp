#pragma once

// Seeded generators for exact random test data.

#include <cstdint>
#include <random>
#include <vector>

#include "cyclowed/cyclotomic.hpp"

namespace cyclowed {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi)
    {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    Integer integer(std::int64_t bound) { return Integer(static_cast<long>(uniform(-bound, bound))); }

    Rational rational(std::int64_t num_bound, std::int64_t den_bound)
    {
        return make_rational(integer(num_bound), Integer(static_cast<long>(uniform(1, den_bound))));
    }

    CycElement cyc_integral(std::int64_t m, std::int64_t bound)
    {
        std::vector<Integer> c(static_cast<std::size_t>(euler_phi(m)));
        for (auto& x : c)
            x = integer(bound);
        return CycElement::from_integers(m, c);
    }

    CycElement cyc_rational(std::int64_t m, std::int64_t num_bound, std::int64_t den_bound)
    {
        std::vector<Rational> c(static_cast<std::size_t>(euler_phi(m)));
        for (auto& x : c)
            x = rational(num_bound, den_bound);
        return CycElement::from_coeffs(m, c);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace cyclowed
