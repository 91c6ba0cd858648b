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

#include "ncd/words.hpp"

#include <sstream>
#include <stdexcept>

namespace ncd {

Word::Word(std::initializer_list<int> letters) {
    letters_.reserve(letters.size());
    for (int l : letters) {
        if (l < 1 || l > 255) throw std::invalid_argument("letter out of range");
        letters_.push_back(static_cast<Letter>(l));
    }
}

Word Word::slice(std::size_t pos, std::size_t len) const {
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

bool Word::within_alphabet(int n) const noexcept {
    for (Letter l : letters_)
        if (l < 1 || l > n) return false;
    return true;
}

std::string Word::to_string() const {
    if (letters_.empty()) return "g0";
    std::ostringstream os;
    for (Letter l : letters_) os << 'g' << static_cast<int>(l);
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.to_string(); }

Word concat(const Word& u, const Word& v) {
    std::vector<Letter> out;
    out.reserve(u.length() + v.length());
    out.insert(out.end(), u.letters().begin(), u.letters().end());
    out.insert(out.end(), v.letters().begin(), v.letters().end());
    return Word(std::move(out));
}

Word reverse(const Word& u) {
    return Word(std::vector<Letter>(u.letters().rbegin(), u.letters().rend()));
}

namespace {

bool ends_with(const Word& w, const Word& suffix) {
    if (suffix.length() > w.length()) return false;
    const std::size_t off = w.length() - suffix.length();
    for (std::size_t i = 0; i < suffix.length(); ++i)
        if (w[off + i] != suffix[i]) return false;
    return true;
}

}  // namespace

Comparability compare_right(const Word& omega, const Word& gamma) {
    if (ends_with(omega, gamma))
        return {Comparability::Kind::GeqR, omega.slice(0, omega.length() - gamma.length())};
    if (ends_with(gamma, omega))
        return {Comparability::Kind::LtR, gamma.slice(0, gamma.length() - omega.length())};
    return {};
}

std::vector<std::vector<Word>> factorizations(const Word& alpha, std::size_t j) {
    const std::size_t len = alpha.length();
    if (j < 1 || j > len) throw std::invalid_argument("factorizations: part count out of range");
    std::vector<std::vector<Word>> out;
    // choose j-1 cut points among the len-1 gaps
    std::vector<std::size_t> cuts(j - 1);
    for (std::size_t i = 0; i + 1 < j; ++i) cuts[i] = i + 1;
    while (true) {
        std::vector<Word> parts;
        parts.reserve(j);
        std::size_t start = 0;
        for (std::size_t c : cuts) {
            parts.push_back(alpha.slice(start, c - start));
            start = c;
        }
        parts.push_back(alpha.slice(start, len - start));
        out.push_back(std::move(parts));

        // next combination in lexicographic order
        std::size_t k = cuts.size();
        while (k > 0 && cuts[k - 1] == len - (cuts.size() - k) - 1) --k;
        if (k == 0) break;
        ++cuts[k - 1];
        for (std::size_t i = k; i < cuts.size(); ++i) cuts[i] = cuts[i - 1] + 1;
    }
    return out;
}

namespace {

void compose_from(const Word& alpha, std::size_t start, std::vector<Word>& parts,
                  const std::function<void(const std::vector<Word>&)>& visit) {
    if (start == alpha.length()) {
        visit(parts);
        return;
    }
    for (std::size_t end = start + 1; end <= alpha.length(); ++end) {
        parts.push_back(alpha.slice(start, end - start));
        compose_from(alpha, end, parts, visit);
        parts.pop_back();
    }
}

}  // namespace

void for_each_composition(const Word& alpha,
                          const std::function<void(const std::vector<Word>&)>& visit) {
    if (alpha.empty()) return;
    std::vector<Word> parts;
    compose_from(alpha, 0, parts, visit);
}

std::size_t word_count(int n, int max_len) {
    if (n < 1 || max_len < 0) throw std::invalid_argument("word_count: need n >= 1, max_len >= 0");
    std::size_t total = 0, level = 1;
    for (int k = 0; k <= max_len; ++k) {
        total += level;
        level *= static_cast<std::size_t>(n);
    }
    return total;
}

std::vector<Word> enumerate_words(int n, int max_len) {
    const std::size_t count = word_count(n, max_len);
    std::vector<Word> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(word_at(i, n));
    return out;
}

std::size_t word_index(const Word& w, int n) {
    const auto base = static_cast<std::size_t>(n);
    std::size_t offset = 0, level = 1;
    for (std::size_t k = 0; k < w.length(); ++k) {
        offset += level;
        level *= base;
    }
    std::size_t value = 0;
    for (Letter l : w.letters()) value = value * base + (l - 1u);
    return offset + value;
}

Word word_at(std::size_t index, int n) {
    const auto base = static_cast<std::size_t>(n);
    std::size_t len = 0, level = 1;
    while (index >= level) {
        index -= level;
        level *= base;
        ++len;
    }
    std::vector<Letter> letters(len);
    for (std::size_t k = len; k-- > 0;) {
        letters[k] = static_cast<Letter>(index % base + 1);
        index /= base;
    }
    return Word(std::move(letters));
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Letter l : w.letters()) {
        h ^= l;
        h *= 1099511628211ull;
    }
    return h ^ w.length();
}

}  // namespace ncd
