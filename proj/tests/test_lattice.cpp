#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bfo/lattice.hpp"

using namespace bfo;

namespace {

Configuration random_config(std::mt19937_64& rng, std::size_t max_len = 101) {
    std::uniform_int_distribution<std::size_t> half(0, max_len / 2);
    const std::size_t n = 2 * half(rng) + 1;
    std::string s(n, '0');
    for (auto& c : s) c = (rng() & 1u) ? '1' : '0';
    return Configuration::parse(s);
}

LatticeErrorKind parse_error(std::string_view text) {
    try {
        Configuration::parse(text);
    } catch (const LatticeError& e) {
        return e.kind();
    }
    FAIL("parse accepted " << text);
    return LatticeErrorKind::empty;
}

} // namespace

TEST_CASE("parse and render") {
    const auto x = Configuration::parse("0001110101001");
    CHECK(x.size() == 13);
    CHECK(x.str() == "0001110101001");
    CHECK_FALSE(x.cell(0));
    CHECK(x.cell(3));
    CHECK(x[-1] == x.cell(12));
    CHECK(x[13] == x.cell(0));
    CHECK(x[-14] == x.cell(12));

    CHECK(Configuration::parse("1").size() == 1);
    CHECK(parse_error("01") == LatticeErrorKind::even_length);
    CHECK(parse_error("") == LatticeErrorKind::empty);
    CHECK(parse_error("01a") == LatticeErrorKind::invalid_character);
}

TEST_CASE("configurations longer than one word") {
    std::string s(131, '0');
    s[0] = s[64] = s[130] = '1';
    const auto x = Configuration::parse(s);
    CHECK(x.str() == s);
    CHECK(x.popcount() == 3);
    CHECK(x.words().size() == 3);
    CHECK_THROWS_AS(x.word(), std::out_of_range);
}

TEST_CASE("packed word uses cell 0 as the least significant bit") {
    const auto x = Configuration::parse("10000");
    CHECK(x.word() == 1);
    CHECK(Configuration::from_word(0b00110, 5).str() == "01100");
    CHECK(Configuration::from_word(0xff, 3).str() == "111");
    CHECK_THROWS_AS(Configuration::from_word(0, 4), LatticeError);
}

TEST_CASE("parity") {
    CHECK(parity(Configuration::parse("0001110101001")) == 0);
    CHECK(parity(Configuration::parse("0000010111001011111")) == 0);
    CHECK(parity(Configuration::parse("111")) == 1);
}

TEST_CASE("homogeneity") {
    CHECK(is_homogeneous(Configuration::parse("00000")));
    CHECK(is_homogeneous(Configuration::parse("11111")));
    CHECK_FALSE(is_homogeneous(Configuration::parse("0001110101001")));
    CHECK(is_homogeneous(Configuration::uniform(65, true)));
}

TEST_CASE("rotation") {
    const auto x = Configuration::parse("0001110101001");
    CHECK(rotate(Configuration::parse("00111"), 2).str() == "11100");
    CHECK(rotate(x, 13) == x);
    CHECK(rotate(x, 1).str() == "0011101010010");
    CHECK(rotate(x, -1).str() == "1000111010100");
    CHECK(rotate_word(x.word(), 13, 1) == rotate(x, 1).word());
}

TEST_CASE("concat power") {
    const auto x = Configuration::parse("101");
    CHECK(concat_power(x, 3).str() == "101101101");
    CHECK(concat_power(x, 1) == x);
    try {
        concat_power(x, 2);
        FAIL("even power accepted");
    } catch (const LatticeError& e) {
        CHECK(e.kind() == LatticeErrorKind::even_power);
    }
}

TEST_CASE("canonical rotation is the least rotation") {
    for (std::uint64_t code = 0; code < (1u << 9); ++code) {
        const auto canon = canonical_rotation(code, 9);
        bool seen = false;
        for (unsigned k = 0; k < 9; ++k) {
            CHECK(canon <= rotate_word(code, 9, k));
            seen = seen || canon == rotate_word(code, 9, k);
        }
        CHECK(seen);
    }
}

TEST_CASE("property: rotation, powers and rendering") {
    std::mt19937_64 rng(20261015);
    for (int trial = 0; trial < 300; ++trial) {
        const auto x = random_config(rng);
        const auto n = static_cast<std::ptrdiff_t>(x.size());
        const auto a = static_cast<std::ptrdiff_t>(rng() % 200) - 100;
        const auto b = static_cast<std::ptrdiff_t>(rng() % 200) - 100;

        CHECK(Configuration::parse(x.str()) == x);
        CHECK(rotate(x, 0) == x);
        CHECK(rotate(rotate(x, a), b) == rotate(x, a + b));
        CHECK(rotate(x, a + n) == rotate(x, a));
        CHECK(parity(rotate(x, a)) == parity(x));
        for (std::size_t k : {1u, 3u, 5u}) {
            const auto p = concat_power(x, k);
            CHECK(p.size() == k * x.size());
            CHECK(parity(p) == parity(x));
        }
        CHECK(std::hash<Configuration>{}(x) == std::hash<Configuration>{}(Configuration::parse(x.str())));
    }
}
