#include "braidshadow/group.hpp"

#include <deque>

#include "braidshadow/config.hpp"
#include "braidshadow/error.hpp"

namespace braidshadow {

namespace {

std::size_t common_degree(std::span<const Permutation> perms) {
  if (perms.empty()) return 0;
  const std::size_t n = perms.front().degree();
  for (const auto& p : perms) {
    if (p.degree() != n) throw Error(Errc::degree_mismatch, "generators differ in degree");
  }
  return n;
}

[[noreturn]] void throw_cap(std::size_t count) {
  throw Error(Errc::size_cap_exceeded,
              "group enumeration passed max_group_size=" +
                  std::to_string(config().max_group_size) + " (" + std::to_string(count) +
                  " elements found so far)");
}

// Letters in closure order: g0, g0^-1, g1, g1^-1, ...
struct LetterTable {
  std::vector<Letter> letters;
  std::vector<Permutation> perms;

  explicit LetterTable(std::span<const Permutation> gens) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto gi = static_cast<std::uint8_t>(i);
      letters.push_back({gi, 1});
      perms.push_back(gens[i]);
      letters.push_back({gi, -1});
      perms.push_back(gens[i].inverse());
    }
  }
};

}  // namespace

WordEvaluator::WordEvaluator(std::vector<Permutation> images)
    : degree_(common_degree(images)), images_(std::move(images)) {
  inverses_.reserve(images_.size());
  for (const auto& p : images_) inverses_.push_back(p.inverse());
}

Permutation WordEvaluator::operator()(const FreeWord& w) const {
  using Point = Permutation::Point;
  // Track the image of every point through the word without allocating
  // intermediate permutations.
  std::vector<Point> cur(degree_);
  for (std::size_t i = 0; i < degree_; ++i) cur[i] = static_cast<Point>(i);
  for (const auto& l : w.letters()) {
    if (l.gen >= images_.size()) {
      throw Error(Errc::domain_mismatch, "word letter outside the evaluation alphabet");
    }
    const Permutation& g = l.sign > 0 ? images_[l.gen] : inverses_[l.gen];
    for (auto& v : cur) v = g[v];
  }
  return Permutation(std::move(cur));
}

Permutation evaluate(const FreeWord& w, std::span<const Permutation> images) {
  return WordEvaluator(std::vector<Permutation>(images.begin(), images.end()))(w);
}

std::optional<std::size_t> GeneratedGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const FreeWord& GeneratedGroup::word_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) {
    throw Error(Errc::not_in_group, "permutation " + p.to_cycle_string() + " not in group");
  }
  return words_[it->second];
}

GeneratedGroup generate_group(std::span<const Permutation> gens, Alphabet alphabet) {
  if (gens.empty()) throw Error(Errc::domain_mismatch, "generate_group needs generators");
  GeneratedGroup g;
  g.degree_ = common_degree(gens);
  g.generators_.assign(gens.begin(), gens.end());
  g.word_images_ = g.generators_;
  g.alphabet_ = alphabet;

  const LetterTable table(gens);
  const std::size_t cap = config().max_group_size;
  g.elements_.push_back(Permutation::identity(g.degree_));
  g.words_.emplace_back(alphabet);
  g.index_.emplace(g.elements_.front(), 0);
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (std::size_t k = 0; k < table.perms.size(); ++k) {
      Permutation next = g.elements_[head] * table.perms[k];
      if (g.index_.count(next)) continue;
      if (g.elements_.size() >= cap) throw_cap(g.elements_.size());
      std::vector<Letter> letters = g.words_[head].letters();
      letters.push_back(table.letters[k]);
      g.index_.emplace(next, g.elements_.size());
      g.elements_.push_back(std::move(next));
      g.words_.emplace_back(alphabet, std::move(letters));
    }
  }
  return g;
}

std::size_t group_order(std::span<const Permutation> gens) {
  if (gens.empty()) return 1;
  const std::size_t n = common_degree(gens);
  const std::size_t cap = config().max_group_size;
  std::vector<Permutation> elements{Permutation::identity(n)};
  std::unordered_map<Permutation, std::size_t, PermutationHash> seen;
  seen.emplace(elements.front(), 0);
  // Finite groups are closed under positive products, so inverses are not needed.
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& gen : gens) {
      Permutation next = elements[head] * gen;
      if (seen.count(next)) continue;
      if (elements.size() >= cap) throw_cap(elements.size());
      seen.emplace(next, elements.size());
      elements.push_back(std::move(next));
    }
  }
  return elements.size();
}

GeneratedGroup commutator_subgroup(const GeneratedGroup& g) {
  const bool literal_gens = g.word_images() == g.generators();
  std::vector<FreeWord> gen_words;
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    gen_words.push_back(literal_gens
                            ? FreeWord::generator(g.alphabet(), static_cast<std::uint8_t>(i))
                            : g.word_of(g.generators()[i]));
  }

  std::vector<Permutation> sub_gens;
  std::vector<FreeWord> sub_words;
  auto add_gen = [&](const Permutation& p, FreeWord w) {
    if (p.is_identity()) return;
    for (const auto& q : sub_gens) {
      if (q == p) return;
    }
    sub_gens.push_back(p);
    sub_words.push_back(std::move(w));
  };
  const auto& gs = g.generators();
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      Permutation comm = gs[i] * gs[j] * gs[i].inverse() * gs[j].inverse();
      add_gen(comm, gen_words[i] * gen_words[j] * gen_words[i].inverse() * gen_words[j].inverse());
    }
  }

  GeneratedGroup h;
  // Grow the generating set until it is closed under conjugation by g's
  // generators; the subgroup it then generates is the normal closure.
  for (;;) {
    if (sub_gens.empty()) break;
    h = generate_group(sub_gens, Alphabet::Generic);
    bool grew = false;
    for (std::size_t k = 0; k < sub_gens.size() && !grew; ++k) {
      for (std::size_t i = 0; i < gs.size() && !grew; ++i) {
        Permutation conj = gs[i].inverse() * sub_gens[k] * gs[i];
        if (!h.contains(conj)) {
          add_gen(conj, gen_words[i].inverse() * sub_words[k] * gen_words[i]);
          grew = true;
        }
      }
    }
    if (!grew) break;
  }

  GeneratedGroup out;
  out.degree_ = g.degree();
  out.generators_ = sub_gens;
  out.word_images_ = g.word_images();
  out.alphabet_ = g.alphabet();
  if (sub_gens.empty()) {
    out.elements_.push_back(Permutation::identity(g.degree()));
    out.words_.emplace_back(g.alphabet());
    out.index_.emplace(out.elements_.front(), 0);
    return out;
  }
  out.elements_ = h.elements_;
  out.index_ = h.index_;
  out.words_.reserve(h.words_.size());
  for (const auto& hw : h.words_) {
    std::vector<Letter> acc;
    for (const auto& l : hw.letters()) {
      const FreeWord& piece = sub_words[l.gen];
      append_reduced(acc, l.sign > 0 ? piece.letters() : piece.inverse().letters());
    }
    out.words_.emplace_back(g.alphabet(), std::move(acc));
  }
  return out;
}

bool is_generating_set(const GeneratedGroup& g, std::span<const Permutation> elems) {
  for (const auto& e : elems) {
    if (!g.contains(e)) {
      throw Error(Errc::not_in_group, "element " + e.to_cycle_string() + " not in group");
    }
  }
  if (elems.empty()) return g.order() == 1;
  return group_order(elems) == g.order();
}

bool GenHom::is_well_defined() const {
  const std::size_t expected = domain == Domain::PB3 ? 3 : 2;
  if (images.size() != expected) return false;
  for (const auto& p : images) {
    if (p.degree() != images.front().degree()) return false;
  }
  switch (domain) {
    case Domain::B3: {
      const auto& a = images[0];
      const auto& b = images[1];
      return a * b * a == b * a * b;
    }
    case Domain::F2: return true;
    case Domain::PB3: {
      const auto& c = images[2];
      return images[0] * c == c * images[0] && images[1] * c == c * images[1];
    }
  }
  return false;
}

std::size_t paired_image_order(const GenHom& phi1, const GenHom& phi2) {
  if (phi1.domain != phi2.domain || phi1.images.size() != phi2.images.size()) {
    throw Error(Errc::domain_mismatch, "homomorphisms have different domains");
  }
  std::vector<Permutation> paired;
  paired.reserve(phi1.images.size());
  for (std::size_t i = 0; i < phi1.images.size(); ++i) {
    paired.push_back(direct_sum(phi1.images[i], phi2.images[i]));
  }
  return group_order(paired);
}

bool kernel_contained(const GenHom& phi1, const GenHom& phi2,
                      std::optional<std::size_t> image_order1) {
  const std::size_t paired = paired_image_order(phi1, phi2);
  const std::size_t order1 = image_order1 ? *image_order1 : group_order(phi1.images);
  return paired == order1;
}

}  // namespace braidshadow
