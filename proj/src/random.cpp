#include "markovpass/random.hpp"

#include <sys/random.h>

#include <array>
#include <cerrno>
#include <cstring>
#include <vector>

#include "markovpass/error.hpp"

namespace markovpass {

std::uint64_t RandomSource::uniform(std::uint64_t bound) {
    if (bound == 0) throw Error(ErrorCode::InvalidArgument, "uniform() needs a positive bound");
    // Values below `threshold` would make some residues more likely.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::array<std::uint8_t, 8> buf{};
        fill(buf);
        std::uint64_t x = 0;
        for (auto b : buf) x = (x << 8) | b;
        if (x >= threshold) return x % bound;
    }
}

BitString RandomSource::bits(std::size_t n) {
    std::vector<std::uint8_t> bytes((n + 7) / 8);
    fill(bytes);
    BitString out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back((bytes[i / 8] >> (7 - i % 8)) & 1U);
    return out;
}

void SystemRandom::fill(std::span<std::uint8_t> out) {
    std::size_t done = 0;
    while (done < out.size()) {
        const ssize_t got = getrandom(out.data() + done, out.size() - done, 0);
        if (got < 0) {
            if (errno == EINTR) continue;
            throw Error(ErrorCode::RngFailure, std::string("getrandom failed: ") + std::strerror(errno));
        }
        done += static_cast<std::size_t>(got);
    }
}

void SeededTestRandom::fill(std::span<std::uint8_t> out) {
    std::size_t i = 0;
    while (i < out.size()) {
        std::uint64_t word = engine_();
        for (int b = 0; b < 8 && i < out.size(); ++b, ++i) {
            out[i] = static_cast<std::uint8_t>(word >> 56);
            word <<= 8;
        }
    }
}

}  // namespace markovpass
