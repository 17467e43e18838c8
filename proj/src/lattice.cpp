#include "bfo/lattice.hpp"

#include <bit>

namespace bfo {

Configuration Configuration::parse(std::string_view text) {
    if (text.empty())
        throw LatticeError(LatticeErrorKind::empty, "configuration is empty");
    Configuration x(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c != '0' && c != '1')
            throw LatticeError(LatticeErrorKind::invalid_character,
                               "invalid character '" + std::string(1, c) + "' at position " +
                                   std::to_string(i));
        x.set(i, c == '1');
    }
    if (text.size() % 2 == 0)
        throw LatticeError(LatticeErrorKind::even_length,
                           "configuration length " + std::to_string(text.size()) + " is even");
    return x;
}

Configuration Configuration::uniform(std::size_t n, bool value) {
    if (n == 0) throw LatticeError(LatticeErrorKind::empty, "configuration is empty");
    if (n % 2 == 0)
        throw LatticeError(LatticeErrorKind::even_length,
                           "configuration length " + std::to_string(n) + " is even");
    Configuration x(n);
    if (value)
        for (std::size_t i = 0; i < n; ++i) x.set(i, true);
    return x;
}

Configuration Configuration::from_word(std::uint64_t bits, std::size_t n) {
    if (n == 0) throw LatticeError(LatticeErrorKind::empty, "configuration is empty");
    if (n % 2 == 0)
        throw LatticeError(LatticeErrorKind::even_length,
                           "configuration length " + std::to_string(n) + " is even");
    if (n > word_bits) throw std::out_of_range("from_word: length exceeds 64 cells");
    Configuration x(n);
    x.words_[0] = n == word_bits ? bits : bits & ((std::uint64_t{1} << n) - 1);
    return x;
}

std::uint64_t Configuration::word() const {
    if (length_ > word_bits) throw std::out_of_range("word: configuration longer than 64 cells");
    return words_[0];
}

std::size_t Configuration::popcount() const noexcept {
    std::size_t count = 0;
    for (auto w : words_) count += static_cast<std::size_t>(std::popcount(w));
    return count;
}

std::string Configuration::str() const {
    std::string out(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
        if (cell(i)) out[i] = '1';
    return out;
}

bool is_homogeneous(const Configuration& x) {
    const auto ones = x.popcount();
    return ones == 0 || ones == x.size();
}

Configuration rotate(const Configuration& x, std::ptrdiff_t k) {
    Configuration out = x;
    const auto n = x.size();
    for (std::size_t i = 0; i < n; ++i)
        out.set(i, x[static_cast<std::ptrdiff_t>(i) + k]);
    return out;
}

Configuration concat_power(const Configuration& x, std::size_t k) {
    if (k % 2 == 0)
        throw LatticeError(LatticeErrorKind::even_power,
                           "power " + std::to_string(k) + " would give an even length");
    const auto n = x.size();
    auto out = Configuration::uniform(n * k, false);
    for (std::size_t i = 0; i < n * k; ++i) out.set(i, x.cell(i % n));
    return out;
}

} // namespace bfo
