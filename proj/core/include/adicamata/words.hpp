#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace adicamata {

// Letter-to-word substitution over a finite alphabet of single-char letters.
struct Substitution {
    std::vector<char> alphabet;
    std::map<char, std::string> images;

    bool has_letter(char c) const { return images.count(c) != 0; }
    const std::string& image(char c) const;
    bool constant_length() const;
    // image length when constant_length(), else 0
    std::size_t image_length() const;
};

// The Thue-Morse substitution 0 -> 01, 1 -> 10.
Substitution thue_morse();

// The one-letter substitution * -> ** (drives the odometer diagram).
Substitution one_letter_doubling();

// A letter together with its legal left/right neighbor bits.
struct CollaredLetter {
    char left, bit, right;
    bool operator<(const CollaredLetter& o) const;
    bool operator==(const CollaredLetter& o) const;
};

// Collared substitution: alphabet letters name legal 3-blocks of the base
// substitution; triples[i] is the 3-block named by sub.alphabet[i].
struct CollaredSubstitution {
    Substitution sub;
    std::vector<CollaredLetter> triples;

    char letter_of(const CollaredLetter& t) const;
    const CollaredLetter& triple_of(char letter) const;
};

std::string apply_substitution(const Substitution& s, const std::string& w);

// n-th iterate of s on a prolongable seed letter; nested prefixes of the
// fixed point.
std::string fixed_point_prefix(const Substitution& s, char seed, int n);

// Collaring of a constant-length-2 binary substitution: alphabet = legal
// 3-blocks, image of a 3-block = the two collared letters covering the
// image of its middle letter.
CollaredSubstitution collar(const Substitution& s);

// All length-len factors of the iterated fixed point, stabilized over two
// consecutive iterations.
std::set<std::string> legal_subwords(const Substitution& s, int len);

// True iff w contains no factor of the form pqpqp with p nonempty
// (equivalently no factor of length 2k+1 with period k).
bool is_overlap_free(const std::string& w);

// A finite binary window placed at an absolute position in Z.
struct WordWindow {
    long long offset = 0;
    std::string letters;
};

enum class SplitParity { even = 0, odd = 1, indeterminate = 2 };

// Which alignment parity (block starts at even or odd absolute positions)
// splits the window into legal 01/10 blocks; indeterminate when both fit.
SplitParity factor_split(const WordWindow& w);

}  // namespace adicamata
