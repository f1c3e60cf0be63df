#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "braidshadow/permutation.hpp"
#include "braidshadow/word.hpp"

namespace testing_support {

using braidshadow::Alphabet;
using braidshadow::FreeWord;
using braidshadow::Letter;
using braidshadow::Permutation;

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation::Point> a(static_cast<std::size_t>(n));
  std::iota(a.begin(), a.end(), Permutation::Point{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(a);
  } while (std::next_permutation(a.begin(), a.end()));
  return out;
}

/// Unreduced random word with `len` letters over two generators.
inline FreeWord random_word(std::mt19937_64& rng, Alphabet alphabet, std::size_t len) {
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < len; ++i) {
    const int v = pick(rng);
    letters.push_back(Letter{static_cast<std::uint8_t>(v & 1),
                             static_cast<std::int8_t>(v & 2 ? -1 : 1)});
  }
  return FreeWord(alphabet, std::move(letters));
}

inline FreeWord random_word_upto(std::mt19937_64& rng, Alphabet alphabet, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  return random_word(rng, alphabet, len(rng));
}

}  // namespace testing_support
