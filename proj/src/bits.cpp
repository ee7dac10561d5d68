#include "markovpass/bits.hpp"

#include "markovpass/error.hpp"

namespace markovpass {

BitString BitString::parse(std::string_view text) {
    BitString out;
    out.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') throw Error(ErrorCode::InvalidArgument, "bit strings may only contain 0 and 1");
        out.push_back(c == '1');
    }
    return out;
}

BitString BitString::from_integer(std::uint64_t value, std::size_t width) {
    BitString out;
    out.reserve(width);
    for (std::size_t i = width; i-- > 0;) out.push_back(i < 64 && ((value >> i) & 1U));
    return out;
}

std::string BitString::to_string() const {
    std::string out;
    out.reserve(bits_.size());
    for (auto b : bits_) out.push_back(b ? '1' : '0');
    return out;
}

}  // namespace markovpass
