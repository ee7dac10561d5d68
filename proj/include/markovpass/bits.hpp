#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace markovpass {

/// Finite bit sequence. Renders as ASCII '0'/'1', first bit first.
class BitString {
public:
    BitString() = default;

    /// Throws InvalidArgument on any character other than '0' or '1'.
    static BitString parse(std::string_view text);

    /// The low `width` bits of `value`, most significant first.
    static BitString from_integer(std::uint64_t value, std::size_t width);

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    bool operator[](std::size_t i) const { return bits_[i] != 0; }

    void push_back(bool bit) { bits_.push_back(bit ? 1 : 0); }
    void append(const BitString& other) { bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end()); }
    void reserve(std::size_t n) { bits_.reserve(n); }

    std::string to_string() const;

    bool operator==(const BitString&) const = default;
    auto operator<=>(const BitString&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// A finite bit string read as if followed by infinitely many zeros.
///
/// Reads past the end return 0 and leave the cursor at size(), so
/// consumed() never exceeds the number of real bits.
class BitStream {
public:
    explicit BitStream(BitString bits) : bits_(std::move(bits)) {}

    bool next() {
        if (cursor_ < bits_.size()) return bits_[cursor_++];
        return false;
    }

    std::size_t size() const noexcept { return bits_.size(); }
    std::size_t consumed() const noexcept { return cursor_; }
    bool exhausted() const noexcept { return cursor_ >= bits_.size(); }

private:
    BitString bits_;
    std::size_t cursor_ = 0;
};

}  // namespace markovpass
