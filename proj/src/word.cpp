#include "braidshadow/word.hpp"

#include "braidshadow/error.hpp"

namespace braidshadow {

namespace {

char letter_char(Alphabet alphabet, Letter l) {
  static constexpr char kB3[] = "ab";
  static constexpr char kF2[] = "xy";
  static constexpr char kF3[] = "uvw";
  static constexpr char kPB3[] = "xyc";
  const char* table = nullptr;
  switch (alphabet) {
    case Alphabet::B3: table = kB3; break;
    case Alphabet::F2: table = kF2; break;
    case Alphabet::F3: table = kF3; break;
    case Alphabet::PB3: table = kPB3; break;
    case Alphabet::Generic: return '?';
  }
  char ch = table[l.gen];
  return l.sign > 0 ? ch : static_cast<char>(ch - 'a' + 'A');
}

}  // namespace

FreeWord FreeWord::generator(Alphabet alphabet, std::uint8_t gen, int sign) {
  return FreeWord(alphabet, {Letter{gen, static_cast<std::int8_t>(sign > 0 ? 1 : -1)}});
}

bool FreeWord::is_reduced() const noexcept {
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i] == letters_[i - 1].inverse()) return false;
  }
  return true;
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return reduce_word(FreeWord(alphabet_, std::move(out)));
}

FreeWord FreeWord::pow(std::int64_t k) const {
  const FreeWord base = k >= 0 ? reduce_word(*this) : inverse();
  std::vector<Letter> acc;
  for (std::int64_t i = 0; i < (k >= 0 ? k : -k); ++i) append_reduced(acc, base.letters_);
  return FreeWord(alphabet_, std::move(acc));
}

std::int64_t FreeWord::exponent_sum(std::uint8_t gen) const noexcept {
  std::int64_t sum = 0;
  for (const auto& l : letters_) {
    if (l.gen == gen) sum += l.sign;
  }
  return sum;
}

void append_reduced(std::vector<Letter>& acc, Letter letter) {
  if (!acc.empty() && acc.back() == letter.inverse()) {
    acc.pop_back();
  } else {
    acc.push_back(letter);
  }
}

void append_reduced(std::vector<Letter>& acc, const std::vector<Letter>& suffix) {
  for (const auto& l : suffix) append_reduced(acc, l);
}

FreeWord reduce_word(const FreeWord& w) {
  std::vector<Letter> acc;
  acc.reserve(w.size());
  append_reduced(acc, w.letters());
  return FreeWord(w.alphabet(), std::move(acc));
}

FreeWord operator*(const FreeWord& u, const FreeWord& v) {
  if (u.alphabet() != v.alphabet()) {
    throw Error(Errc::domain_mismatch, "cannot concatenate words over different alphabets");
  }
  std::vector<Letter> acc = reduce_word(u).letters();
  append_reduced(acc, v.letters());
  return FreeWord(u.alphabet(), std::move(acc));
}

std::string to_text(const FreeWord& w) {
  std::string out;
  if (w.alphabet() == Alphabet::Generic) {
    for (const auto& l : w.letters()) {
      if (!out.empty()) out += ' ';
      out += 'g' + std::to_string(l.gen) + (l.sign > 0 ? "" : "^-1");
    }
    return out;
  }
  out.reserve(w.size());
  for (const auto& l : w.letters()) out += letter_char(w.alphabet(), l);
  return out;
}

FreeWord parse_word(Alphabet alphabet, std::string_view text) {
  char lo0 = 0;
  char lo1 = 0;
  switch (alphabet) {
    case Alphabet::B3: lo0 = 'a'; lo1 = 'b'; break;
    case Alphabet::F2: lo0 = 'x'; lo1 = 'y'; break;
    default: throw Error(Errc::parse_error, "only B3 and F2 words have a text form");
  }
  std::vector<Letter> acc;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    Letter l;
    if (ch == lo0) l = {0, 1};
    else if (ch == lo1) l = {1, 1};
    else if (ch == lo0 - 'a' + 'A') l = {0, -1};
    else if (ch == lo1 - 'a' + 'A') l = {1, -1};
    else {
      throw Error(Errc::parse_error, "unexpected character '" + std::string(1, ch) +
                                         "' at position " + std::to_string(i) + " in word");
    }
    append_reduced(acc, l);
  }
  return FreeWord(alphabet, std::move(acc));
}

bool in_commutator_subgroup(const FreeWord& w) noexcept {
  std::int64_t sums[256] = {};
  for (const auto& l : w.letters()) sums[l.gen] += l.sign;
  for (auto s : sums) {
    if (s != 0) return false;
  }
  return true;
}

}  // namespace braidshadow
