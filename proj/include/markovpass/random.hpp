#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "markovpass/bits.hpp"

namespace markovpass {

/// Source of uniform random bytes. Not thread-safe; give each thread its own.
class RandomSource {
public:
    virtual ~RandomSource() = default;

    /// Throws Error(RngFailure) if the source cannot deliver.
    virtual void fill(std::span<std::uint8_t> out) = 0;

    /// Uniform integer in [0, bound). bound must be at least 1.
    /// Rejection sampling, so there is no modulo bias.
    virtual std::uint64_t uniform(std::uint64_t bound);

    /// n independent uniform bits.
    BitString bits(std::size_t n);
};

/// Kernel CSPRNG via getrandom(2). The default for every real password.
class SystemRandom final : public RandomSource {
public:
    void fill(std::span<std::uint8_t> out) override;
};

/// mt19937_64 with a fixed seed. Reproducible on every platform and
/// therefore NOT suitable for real passwords; exists for tests and for the
/// CLI's explicitly named test-seed flag.
class SeededTestRandom final : public RandomSource {
public:
    explicit SeededTestRandom(std::uint64_t seed) : engine_(seed) {}
    void fill(std::span<std::uint8_t> out) override;

private:
    std::mt19937_64 engine_;
};

}  // namespace markovpass
