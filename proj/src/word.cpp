// word.cpp
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

#include "strfun/word.hpp"

#include <algorithm>
#include <set>

#include "strfun/error.hpp"

namespace strfun {

Word Word::operator+(const Word& suffix) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() + suffix.size());
  out.insert(out.end(), letters_.begin(), letters_.end());
  out.insert(out.end(), suffix.begin(), suffix.end());
  return Word(std::move(out));
}

Word Word::append(Letter a) const {
  std::vector<Letter> out = letters_;
  out.push_back(a);
  return Word(std::move(out));
}

Word Word::prepend(Letter a) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() + 1);
  out.push_back(a);
  out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(std::move(out));
}

Word Word::prefix(std::size_t len) const {
  len = std::min(len, letters_.size());
  return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(len)));
}

Word Word::suffix_from(std::size_t pos) const {
  pos = std::min(pos, letters_.size());
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos), letters_.end()));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.letters_ <=> b.letters_;
}

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw Error(Errc::kInvalidAlphabet, "alphabet must contain at least one symbol");
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) throw Error(Errc::kInvalidAlphabet, "empty symbol label");
    if (!seen.insert(s).second) throw Error(Errc::kInvalidAlphabet, "duplicate symbol '" + s + "'");
  }
  for (const auto& a : symbols_) {
    for (const auto& b : symbols_) {
      if (&a != &b && b.size() > a.size() && b.compare(0, a.size(), a) == 0) prefix_free_ = false;
    }
  }
}

Alphabet Alphabet::of_size(std::size_t k) {
  static constexpr std::string_view kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";
  if (k == 0 || k > kDigits.size()) {
    throw Error(Errc::kInvalidAlphabet, "alphabet size must be in [1, 36]");
  }
  std::vector<std::string> symbols;
  for (std::size_t i = 0; i < k; ++i) symbols.emplace_back(1, kDigits[i]);
  return Alphabet(std::move(symbols));
}

std::optional<Letter> Alphabet::letter_of(std::string_view symbol) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] == symbol) return static_cast<Letter>(i);
  }
  return std::nullopt;
}

bool Alphabet::contains(const Word& w) const {
  return std::all_of(w.begin(), w.end(), [&](Letter a) { return a < symbols_.size(); });
}

std::string Alphabet::format(const Word& w) const {
  std::string out;
  for (Letter a : w) out += symbols_.at(a);
  return out;
}

Word Alphabet::parse(std::string_view text) const {
  if (!prefix_free_) {
    throw Error(Errc::kInvalidWord, "cannot parse words over a symbol set that is not prefix-free");
  }
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    bool matched = false;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (text.substr(pos, symbols_[i].size()) == symbols_[i]) {
        letters.push_back(static_cast<Letter>(i));
        pos += symbols_[i].size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw Error(Errc::kInvalidWord, "'" + std::string(text) + "' is not a word over the alphabet");
    }
  }
  return Word(std::move(letters));
}

std::size_t word_count(std::size_t alphabet_size, std::size_t len) {
  constexpr std::size_t kLimit = std::size_t{1} << 28;
  std::size_t count = 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (count > kLimit / std::max<std::size_t>(alphabet_size, 1)) {
      throw Error(Errc::kInvalidArgument, "word count exceeds the dense table limit");
    }
    count *= alphabet_size;
  }
  return count;
}

std::vector<Word> words_of_length(const Alphabet& alphabet, std::size_t len) {
  const std::size_t k = alphabet.size();
  const std::size_t count = word_count(k, len);
  std::vector<Word> out;
  out.reserve(count);
  std::vector<Letter> letters(len, 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    out.emplace_back(letters);
    for (std::size_t pos = len; pos-- > 0;) {
      if (++letters[pos] < k) break;
      letters[pos] = 0;
    }
  }
  return out;
}

std::vector<Word> shortlex_words(const Alphabet& alphabet, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= max_len; ++len) {
    auto layer = words_of_length(alphabet, len);
    out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
  }
  return out;
}

std::size_t lex_index(const Word& w, std::size_t alphabet_size) {
  std::size_t idx = 0;
  for (Letter a : w) idx = idx * alphabet_size + a;
  return idx;
}

}  // namespace strfun
