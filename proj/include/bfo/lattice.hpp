#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bfo {

enum class LatticeErrorKind { empty, even_length, invalid_character, even_power };

class LatticeError : public std::invalid_argument {
public:
    LatticeError(LatticeErrorKind kind, const std::string& what)
        : std::invalid_argument(what), kind_(kind) {}

    LatticeErrorKind kind() const noexcept { return kind_; }

private:
    LatticeErrorKind kind_;
};

// A cyclic binary configuration of odd length. Cells are bit-packed with
// cell 0 in the least significant bit of the first word, so for n <= 64 the
// packed word is the integer the exhaustive sweep counts through.
class Configuration {
public:
    static constexpr std::size_t word_bits = 64;

    static Configuration parse(std::string_view text);
    static Configuration uniform(std::size_t n, bool value);
    static Configuration from_word(std::uint64_t bits, std::size_t n);

    std::size_t size() const noexcept { return length_; }

    bool cell(std::size_t i) const noexcept {
        return (words_[i / word_bits] >> (i % word_bits)) & 1u;
    }

    // Index taken modulo n; negative indices wrap.
    bool operator[](std::ptrdiff_t i) const noexcept {
        const auto n = static_cast<std::ptrdiff_t>(length_);
        const auto r = i % n;
        return cell(static_cast<std::size_t>(r < 0 ? r + n : r));
    }

    void set(std::size_t i, bool value) noexcept {
        const std::uint64_t mask = std::uint64_t{1} << (i % word_bits);
        if (value)
            words_[i / word_bits] |= mask;
        else
            words_[i / word_bits] &= ~mask;
    }

    // Packed cells; only valid for n <= 64.
    std::uint64_t word() const;
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    std::size_t popcount() const noexcept;
    std::string str() const;

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    Configuration(std::size_t n) : length_(n), words_((n + word_bits - 1) / word_bits, 0) {}

    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

inline bool parity(const Configuration& x) { return x.popcount() & 1u; }

bool is_homogeneous(const Configuration& x);

// Cell i of the result is cell (i + k) mod n of x.
Configuration rotate(const Configuration& x, std::ptrdiff_t k);

// x repeated k times; k must be odd so the result stays in the odd-length family.
Configuration concat_power(const Configuration& x, std::size_t k);

// Rotation of a packed n-cell word with the same convention as rotate().
constexpr std::uint64_t rotate_word(std::uint64_t bits, unsigned n, unsigned k) noexcept {
    k %= n;
    if (k == 0) return bits;
    const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return ((bits >> k) | (bits << (n - k))) & mask;
}

// Smallest packed word among all rotations; the necklace representative.
constexpr std::uint64_t canonical_rotation(std::uint64_t bits, unsigned n) noexcept {
    std::uint64_t best = bits;
    for (unsigned k = 1; k < n; ++k) {
        const std::uint64_t r = rotate_word(bits, n, k);
        if (r < best) best = r;
    }
    return best;
}

} // namespace bfo

template <>
struct std::hash<bfo::Configuration> {
    std::size_t operator()(const bfo::Configuration& x) const noexcept {
        std::size_t h = std::hash<std::size_t>{}(x.size());
        for (auto w : x.words())
            h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};
