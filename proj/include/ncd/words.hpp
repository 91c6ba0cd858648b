// Copyright 2026 The ncdomain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NCD_WORDS_HPP
#define NCD_WORDS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace ncd {

using Letter = std::uint8_t;

/// An element of the unital free semigroup on n generators.
///
/// Letters are 1-based (g_1 ... g_n); the empty word is the unit g_0. A word
/// does not know its alphabet size, so range checks happen where n is known
/// (basis construction, domain validation).
class Word {
public:
    Word() = default;
    Word(std::initializer_list<int> letters);
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    static Word generator(int i) { return Word{i}; }

    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    Letter operator[](std::size_t pos) const { return letters_[pos]; }

    // Substring [pos, pos + len).
    Word slice(std::size_t pos, std::size_t len) const;

    bool within_alphabet(int n) const noexcept;

    std::string to_string() const;  // "g0", "g1g2", ...

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& a, const Word& b) {
        // graded order: shorter first, then lexicographic
        if (a.length() != b.length()) return a.length() <=> b.length();
        return a.letters_ <=> b.letters_;
    }

private:
    std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

Word concat(const Word& u, const Word& v);
Word reverse(const Word& u);

/// Outcome of comparing two words in the right-divisibility order.
struct Comparability {
    enum class Kind { GeqR, LtR, Incomparable };
    Kind kind = Kind::Incomparable;
    // GeqR: omega = quotient * gamma.  LtR: gamma = quotient * omega, quotient nonempty.
    Word quotient;

    bool comparable() const noexcept { return kind != Kind::Incomparable; }
};

Comparability compare_right(const Word& omega, const Word& gamma);

/// All ordered splittings alpha = gamma_1 ... gamma_j with nonempty parts.
/// Throws std::invalid_argument unless 1 <= j <= |alpha|.
std::vector<std::vector<Word>> factorizations(const Word& alpha, std::size_t j);

/// Visits every composition of alpha (all j at once) without materializing the list.
void for_each_composition(const Word& alpha,
                          const std::function<void(const std::vector<Word>&)>& visit);

/// Number of words of length <= max_len over n letters.
std::size_t word_count(int n, int max_len);

/// All words of length <= max_len, graded lexicographic. The position of a
/// word in this list is its canonical basis index.
std::vector<Word> enumerate_words(int n, int max_len);

/// Canonical index of a word in the graded lexicographic order (no length bound).
std::size_t word_index(const Word& w, int n);

/// Inverse of word_index.
Word word_at(std::size_t index, int n);

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace ncd

#endif  // NCD_WORDS_HPP
