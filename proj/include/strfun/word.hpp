// word.hpp
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

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace strfun {

using Letter = std::uint32_t;

// A finite word over an alphabet, stored as letter indices. Ordering is
// shortlex: shorter words first, then lexicographic by letter index.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word operator+(const Word& suffix) const;
  Word append(Letter a) const;
  Word prepend(Letter a) const;
  Word prefix(std::size_t len) const;
  Word suffix_from(std::size_t pos) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

class Alphabet {
 public:
  // Symbols must be non-empty and pairwise distinct; their order defines
  // letter precedence.
  explicit Alphabet(std::vector<std::string> symbols);

  // Symbols "0", "1", ..., "9", "a", "b", ...
  static Alphabet of_size(std::size_t k);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbol(Letter a) const { return symbols_.at(a); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  std::optional<Letter> letter_of(std::string_view symbol) const;

  bool contains(const Word& w) const;

  // Words are written as the concatenation of their symbols. Parsing requires
  // the symbol set to be prefix-free, which holds for single-character symbols.
  std::string format(const Word& w) const;
  Word parse(std::string_view text) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> symbols_;
  bool prefix_free_ = true;
};

// All words of length <= max_len in shortlex order.
std::vector<Word> shortlex_words(const Alphabet& alphabet, std::size_t max_len);

// All words of length exactly len in lexicographic order.
std::vector<Word> words_of_length(const Alphabet& alphabet, std::size_t len);

// Position of w among the words of its own length (lexicographic, base-k).
std::size_t lex_index(const Word& w, std::size_t alphabet_size);

// k^len, throwing when the count does not fit comfortably in memory.
std::size_t word_count(std::size_t alphabet_size, std::size_t len);

}  // namespace strfun
