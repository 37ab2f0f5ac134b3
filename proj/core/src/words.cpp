#include "adicamata/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace adicamata {

const std::string& Substitution::image(char c) const {
    auto it = images.find(c);
    if (it == images.end())
        throw std::invalid_argument(std::string("unknown letter '") + c + "'");
    return it->second;
}

bool Substitution::constant_length() const {
    std::size_t len = 0;
    bool first = true;
    for (char c : alphabet) {
        std::size_t n = image(c).size();
        if (first) {
            len = n;
            first = false;
        } else if (n != len) {
            return false;
        }
    }
    return true;
}

std::size_t Substitution::image_length() const {
    if (!constant_length() || alphabet.empty()) return 0;
    return image(alphabet.front()).size();
}

Substitution thue_morse() {
    Substitution s;
    s.alphabet = {'0', '1'};
    s.images['0'] = "01";
    s.images['1'] = "10";
    return s;
}

Substitution one_letter_doubling() {
    Substitution s;
    s.alphabet = {'*'};
    s.images['*'] = "**";
    return s;
}

bool CollaredLetter::operator<(const CollaredLetter& o) const {
    // ordered by (right, bit, left); on Thue-Morse this yields the
    // conventional letter names a..f
    if (right != o.right) return right < o.right;
    if (bit != o.bit) return bit < o.bit;
    return left < o.left;
}

bool CollaredLetter::operator==(const CollaredLetter& o) const {
    return left == o.left && bit == o.bit && right == o.right;
}

char CollaredSubstitution::letter_of(const CollaredLetter& t) const {
    for (std::size_t i = 0; i < triples.size(); ++i)
        if (triples[i] == t) return sub.alphabet[i];
    throw std::invalid_argument("not a legal collared letter");
}

const CollaredLetter& CollaredSubstitution::triple_of(char letter) const {
    for (std::size_t i = 0; i < triples.size(); ++i)
        if (sub.alphabet[i] == letter) return triples[i];
    throw std::invalid_argument(std::string("unknown collared letter '") + letter + "'");
}

std::string apply_substitution(const Substitution& s, const std::string& w) {
    std::string out;
    for (char c : w) out += s.image(c);
    return out;
}

std::string fixed_point_prefix(const Substitution& s, char seed, int n) {
    const std::string& im = s.image(seed);
    if (im.empty() || im.front() != seed)
        throw std::invalid_argument("seed letter is not prolongable");
    std::string w(1, seed);
    for (int i = 0; i < n; ++i) w = apply_substitution(s, w);
    return w;
}

std::set<std::string> legal_subwords(const Substitution& s, int len) {
    if (len < 1) throw std::invalid_argument("len must be >= 1");
    char seed = 0;
    for (char c : s.alphabet) {
        const std::string& im = s.image(c);
        if (!im.empty() && im.front() == c) {
            seed = c;
            break;
        }
    }
    if (seed == 0) throw std::invalid_argument("no prolongable letter");
    auto factors = [len](const std::string& w) {
        std::set<std::string> f;
        if ((int)w.size() >= len)
            for (std::size_t i = 0; i + len <= w.size(); ++i)
                f.insert(w.substr(i, len));
        return f;
    };
    std::string w(1, seed);
    std::set<std::string> prev = factors(w);
    for (int iter = 0; iter < 64; ++iter) {
        w = apply_substitution(s, w);
        std::set<std::string> cur = factors(w);
        if ((int)w.size() >= 2 * len && cur == prev) return cur;
        prev = std::move(cur);
    }
    throw std::runtime_error("legal_subwords did not stabilize");
}

CollaredSubstitution collar(const Substitution& s) {
    if (!s.constant_length() || s.image_length() != 2)
        throw std::invalid_argument("collar requires a constant-length-2 substitution");
    std::set<std::string> blocks = legal_subwords(s, 3);
    std::vector<CollaredLetter> triples;
    for (const std::string& b : blocks) triples.push_back({b[0], b[1], b[2]});
    std::sort(triples.begin(), triples.end());

    CollaredSubstitution cs;
    cs.triples = triples;
    for (std::size_t i = 0; i < triples.size(); ++i)
        cs.sub.alphabet.push_back(static_cast<char>('a' + i));

    for (std::size_t i = 0; i < triples.size(); ++i) {
        const CollaredLetter& t = triples[i];
        std::string xyz{t.left, t.bit, t.right};
        std::string img = apply_substitution(s, xyz);
        // the image of the middle letter occupies positions 2,3 of img;
        // collar each of its letters by its neighbors inside img
        CollaredLetter c0{img[1], img[2], img[3]};
        CollaredLetter c1{img[2], img[3], img[4]};
        std::string im;
        im += cs.letter_of(c0);
        im += cs.letter_of(c1);
        cs.sub.images[cs.sub.alphabet[i]] = im;
    }
    return cs;
}

bool is_overlap_free(const std::string& w) {
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 1; i + 2 * p < n; ++p) {
            bool overlap = true;
            for (std::size_t k = 0; k <= p; ++k)
                if (w[i + k] != w[i + k + p]) {
                    overlap = false;
                    break;
                }
            if (overlap) return false;
        }
    return true;
}

SplitParity factor_split(const WordWindow& w) {
    // an alignment is refuted only by a complete illegal block, so short
    // windows are indeterminate (both alignments vacuously possible)
    auto feasible = [&](int parity) {
        for (std::size_t i = 0; i + 1 < w.letters.size(); ++i) {
            long long pos = w.offset + (long long)i;
            long long m = ((pos % 2) + 2) % 2;
            if (m != parity) continue;
            char a = w.letters[i], b = w.letters[i + 1];
            if (!((a == '0' && b == '1') || (a == '1' && b == '0'))) return false;
        }
        return true;
    };
    bool even = feasible(0), odd = feasible(1);
    if (even && odd) return SplitParity::indeterminate;
    if (even) return SplitParity::even;
    if (odd) return SplitParity::odd;
    throw std::invalid_argument("window admits no legal block alignment");
}

}  // namespace adicamata
