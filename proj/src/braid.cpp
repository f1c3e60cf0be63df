#include "braidshadow/braid.hpp"

#include "braidshadow/error.hpp"

namespace braidshadow {

namespace {

FreeWord f2(std::string_view text) { return parse_word(Alphabet::F2, text); }
FreeWord b3(std::string_view text) { return parse_word(Alphabet::B3, text); }

void require(const FreeWord& w, Alphabet a, const char* what) {
  if (w.alphabet() != a) throw Error(Errc::domain_mismatch, std::string(what) + ": wrong alphabet");
}

// t_s · g = W · c^j · t_{s'} with W in F2. Rows are cosets, columns the
// letters σ1, σ2, σ1⁻¹, σ2⁻¹.
struct Step {
  std::string_view f2_part;
  int c_shift;
  Coset next;
};

constexpr Step kTable[kCosetCount][4] = {
    // e
    {{"", 0, Coset::s1}, {"", 0, Coset::s2}, {"X", 0, Coset::s1}, {"Y", 0, Coset::s2}},
    // s1
    {{"x", 0, Coset::e}, {"", 0, Coset::s1s2}, {"", 0, Coset::e}, {"xy", -1, Coset::s1s2}},
    // s2
    {{"", 0, Coset::s2s1}, {"y", 0, Coset::e}, {"yx", -1, Coset::s2s1}, {"", 0, Coset::e}},
    // s1s2
    {{"", 0, Coset::delta}, {"YX", 1, Coset::s1}, {"Y", 0, Coset::delta}, {"", 0, Coset::s1}},
    // s2s1
    {{"XY", 1, Coset::s2}, {"", 0, Coset::delta}, {"", 0, Coset::s2}, {"X", 0, Coset::delta}},
    // delta
    {{"y", 0, Coset::s1s2}, {"x", 0, Coset::s2s1}, {"", 0, Coset::s1s2}, {"", 0, Coset::s2s1}},
};

Letter f2_letter(char ch) {
  switch (ch) {
    case 'x': return {0, 1};
    case 'y': return {1, 1};
    case 'X': return {0, -1};
    default: return {1, -1};
  }
}

// Images of a_1..a_3 under σ_i^{±1}, as short F3 words.
std::vector<Letter> artin_image(Letter g, std::size_t j) {
  const std::uint8_t i = g.gen;
  const std::uint8_t k = static_cast<std::uint8_t>(i + 1);
  if (j != i && j != k) return {Letter{static_cast<std::uint8_t>(j), 1}};
  if (g.sign > 0) {
    if (j == i) return {{i, 1}, {k, 1}, {i, -1}};
    return {{i, 1}};
  }
  if (j == i) return {{k, 1}};
  return {{k, -1}, {i, 1}, {k, 1}};
}

}  // namespace

FreeWord word_x() { return f2("x"); }
FreeWord word_y() { return f2("y"); }
FreeWord word_z() { return f2("YX"); }
FreeWord word_sigma1() { return b3("a"); }
FreeWord word_sigma2() { return b3("b"); }
FreeWord word_delta() { return b3("aba"); }
FreeWord word_c() { return b3("abaaba"); }

FreeWord f2_endo_apply(const FreeWord& w, const FreeWord& x_image, const FreeWord& y_image) {
  require(w, Alphabet::F2, "f2_endo_apply");
  const FreeWord images[2] = {x_image, y_image};
  const FreeWord inverses[2] = {x_image.inverse(), y_image.inverse()};
  std::vector<Letter> acc;
  for (const auto& l : w.letters()) {
    append_reduced(acc, (l.sign > 0 ? images[l.gen] : inverses[l.gen]).letters());
  }
  return FreeWord(x_image.alphabet(), std::move(acc));
}

FreeWord theta(const FreeWord& w) { return f2_endo_apply(w, word_y(), word_x()); }

FreeWord tau(const FreeWord& w) { return f2_endo_apply(w, word_y(), word_z()); }

FreeWord e_endo(std::int64_t m, const FreeWord& f, const FreeWord& w) {
  require(f, Alphabet::F2, "e_endo");
  const std::int64_t k = 2 * m + 1;
  return f2_endo_apply(w, word_x().pow(k), f.inverse() * word_y().pow(k) * f);
}

std::pair<std::int64_t, FreeWord> bullet_monoid(std::int64_t m1, const FreeWord& f1,
                                               std::int64_t m2, const FreeWord& f2w) {
  return {2 * m1 * m2 + m1 + m2, f1 * e_endo(m1, f1, f2w)};
}

FreeWord embed_f2_in_b3(const FreeWord& w) {
  return f2_endo_apply(w, b3("aa"), b3("bb"));
}

FreeWord transversal_word(Coset s) {
  static constexpr std::string_view kWords[kCosetCount] = {"", "a", "b", "ab", "ba", "aba"};
  return b3(kWords[static_cast<std::size_t>(s)]);
}

std::string_view coset_name(Coset s) {
  static constexpr std::string_view kNames[kCosetCount] = {"e",    "s1",   "s2",
                                                           "s1s2", "s2s1", "delta"};
  return kNames[static_cast<std::size_t>(s)];
}

void push_letter(B3NormalForm& nf, Letter letter) {
  if (letter.gen > 1) throw Error(Errc::domain_mismatch, "not a B3 letter");
  const std::size_t col = letter.gen + (letter.sign > 0 ? 0 : 2);
  const Step& step = kTable[static_cast<std::size_t>(nf.coset)][col];
  if (!step.f2_part.empty()) {
    std::vector<Letter> acc = nf.f2_part.letters();
    for (char ch : step.f2_part) append_reduced(acc, f2_letter(ch));
    nf.f2_part = FreeWord(Alphabet::F2, std::move(acc));
  }
  nf.c_exponent += step.c_shift;
  nf.coset = step.next;
}

B3NormalForm b3_normal_form(const FreeWord& w) {
  require(w, Alphabet::B3, "b3_normal_form");
  B3NormalForm nf;
  for (const auto& l : w.letters()) push_letter(nf, l);
  return nf;
}

FreeWord reassemble(const B3NormalForm& nf) {
  return embed_f2_in_b3(nf.f2_part) * word_c().pow(nf.c_exponent) * transversal_word(nf.coset);
}

std::array<FreeWord, 3> artin_action(const FreeWord& w) {
  require(w, Alphabet::B3, "artin_action");
  std::array<std::vector<Letter>, 3> cur;
  for (std::uint8_t j = 0; j < 3; ++j) cur[j] = {Letter{j, 1}};
  for (const auto& g : w.letters()) {
    std::array<std::vector<Letter>, 3> inv;
    for (std::size_t j = 0; j < 3; ++j) {
      inv[j] = FreeWord(Alphabet::F3, cur[j]).inverse().letters();
    }
    std::array<std::vector<Letter>, 3> next;
    for (std::size_t j = 0; j < 3; ++j) {
      for (const auto& l : artin_image(g, j)) {
        append_reduced(next[j], l.sign > 0 ? cur[l.gen] : inv[l.gen]);
      }
    }
    cur = std::move(next);
  }
  return {FreeWord(Alphabet::F3, std::move(cur[0])), FreeWord(Alphabet::F3, std::move(cur[1])),
          FreeWord(Alphabet::F3, std::move(cur[2]))};
}

bool artin_equal(const FreeWord& u, const FreeWord& v) {
  return artin_action(u) == artin_action(v);
}

}  // namespace braidshadow
