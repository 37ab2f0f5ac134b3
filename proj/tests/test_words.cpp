#include <doctest.h>

#include <adicamata/words.hpp>

using namespace adicamata;

TEST_CASE("thue-morse substitution basics") {
    Substitution s = thue_morse();
    CHECK(s.constant_length());
    CHECK(s.image_length() == 2);
    CHECK(s.image('0') == "01");
    CHECK(s.image('1') == "10");
    CHECK(apply_substitution(s, "0110") == "01101001");
}

TEST_CASE("one-letter doubling") {
    Substitution s = one_letter_doubling();
    CHECK(s.alphabet.size() == 1);
    CHECK(s.constant_length());
    CHECK(s.image_length() == 2);
}

TEST_CASE("fixed point prefixes nest") {
    Substitution s = thue_morse();
    CHECK(fixed_point_prefix(s, '0', 0) == "0");
    CHECK(fixed_point_prefix(s, '0', 4) == "0110100110010110");
    for (int n = 0; n < 6; ++n) {
        std::string a = fixed_point_prefix(s, '0', n);
        std::string b = fixed_point_prefix(s, '0', n + 1);
        CHECK(b.substr(0, a.size()) == a);
    }
}

TEST_CASE("collared alphabet") {
    CollaredSubstitution c = collar(thue_morse());
    REQUIRE(c.sub.alphabet.size() == 6);
    // letters sorted a..f correspond to the legal 3-blocks
    const char* blocks[] = {"100", "010", "110", "001", "101", "011"};
    for (int i = 0; i < 6; ++i) {
        CollaredLetter t = c.triples[i];
        CHECK(t.left == blocks[i][0]);
        CHECK(t.bit == blocks[i][1]);
        CHECK(t.right == blocks[i][2]);
        CHECK(c.letter_of(t) == c.sub.alphabet[i]);
    }
    CHECK(c.sub.image('a') == "db");
    CHECK(c.sub.image('b') == "ca");
    CHECK(c.sub.image('c') == "ba");
    CHECK(c.sub.image('d') == "ef");
    CHECK(c.sub.image('e') == "df");
    CHECK(c.sub.image('f') == "ce");
}

TEST_CASE("legal subwords") {
    Substitution s = thue_morse();
    auto five = legal_subwords(s, 5);
    CHECK(five.size() == 12);
    std::string big = fixed_point_prefix(s, '0', 10);
    for (const auto& w : five) CHECK(big.find(w) != std::string::npos);
    auto three = legal_subwords(s, 3);
    CHECK(three.count("000") == 0);
    CHECK(three.count("111") == 0);
}

TEST_CASE("overlap freeness") {
    CHECK(is_overlap_free(""));
    CHECK(is_overlap_free("0"));
    CHECK(is_overlap_free("00"));
    CHECK(!is_overlap_free("000"));
    CHECK(!is_overlap_free("01010"));
    CHECK(!is_overlap_free("0110110"));
    CHECK(is_overlap_free("0110"));
    CHECK(is_overlap_free("00100"));
    CHECK(is_overlap_free(fixed_point_prefix(thue_morse(), '0', 12)));
}

TEST_CASE("factor split parity") {
    CHECK(factor_split(WordWindow{0, "0110"}) == SplitParity::even);
    CHECK(factor_split(WordWindow{0, "1101"}) == SplitParity::odd);
    CHECK(factor_split(WordWindow{0, "01"}) == SplitParity::indeterminate);
    // shifting a window by two keeps its parity
    for (long long k : {-4, -2, 2, 6})
        CHECK(factor_split(WordWindow{k, "0110"}) == SplitParity::even);
}
