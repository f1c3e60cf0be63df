#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "braidshadow/permutation.hpp"
#include "braidshadow/word.hpp"

namespace braidshadow {

/// Evaluates words over a fixed list of generator images, caching inverses.
class WordEvaluator {
public:
  explicit WordEvaluator(std::vector<Permutation> images);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& images() const noexcept { return images_; }

  Permutation operator()(const FreeWord& w) const;

private:
  std::size_t degree_ = 0;
  std::vector<Permutation> images_;
  std::vector<Permutation> inverses_;
};

/// Product of the images along the word; empty word gives the identity.
Permutation evaluate(const FreeWord& w, std::span<const Permutation> images);

/// A finite permutation group enumerated element by element, with a word
/// representative for each element.
///
/// Words are written over `word_images()`, which for groups built by
/// generate_group() are the generators themselves. For a commutator subgroup
/// they are the generators of the ambient group, so that every word is a
/// literal product of conjugated commutators.
class GeneratedGroup {
public:
  GeneratedGroup() = default;

  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Permutation>& word_images() const noexcept { return word_images_; }
  Alphabet alphabet() const noexcept { return alphabet_; }
  std::size_t degree() const noexcept { return degree_; }

  /// Elements in breadth-first discovery order; element 0 is the identity.
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const std::vector<FreeWord>& words() const noexcept { return words_; }
  std::size_t order() const noexcept { return elements_.size(); }

  bool contains(const Permutation& p) const { return index_.count(p) != 0; }
  std::optional<std::size_t> index_of(const Permutation& p) const;
  /// Throws Errc::not_in_group.
  const FreeWord& word_of(const Permutation& p) const;

private:
  friend GeneratedGroup generate_group(std::span<const Permutation>, Alphabet);
  friend GeneratedGroup commutator_subgroup(const GeneratedGroup&);

  std::vector<Permutation> generators_;
  std::vector<Permutation> word_images_;
  Alphabet alphabet_ = Alphabet::Generic;
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<FreeWord> words_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
};

/// Breadth-first closure over the Cayley graph with letters ordered
/// g0, g0⁻¹, g1, g1⁻¹, ...; each element gets its shortlex-least word.
/// Throws Errc::size_cap_exceeded past config().max_group_size elements and
/// Errc::degree_mismatch on mixed degrees.
GeneratedGroup generate_group(std::span<const Permutation> gens,
                              Alphabet alphabet = Alphabet::Generic);

/// Order of the generated group without building a word table.
std::size_t group_order(std::span<const Permutation> gens);

/// [G, G] as the normal closure of the generator commutators. Words are over
/// G's word alphabet and are products of conjugates of commutators of
/// generator words.
GeneratedGroup commutator_subgroup(const GeneratedGroup& g);

/// True iff `elems` generate all of g. Throws Errc::not_in_group.
bool is_generating_set(const GeneratedGroup& g, std::span<const Permutation> elems);

enum class Domain : std::uint8_t { B3, F2, PB3 };

/// A homomorphism out of B3, F2 or PB3 given by generator images:
/// σ1, σ2 for B3; x, y for F2; x12, x23, c for PB3.
struct GenHom {
  Domain domain = Domain::B3;
  std::vector<Permutation> images;

  std::size_t degree() const noexcept { return images.empty() ? 0 : images.front().degree(); }
  /// Braid relation for B3, centrality of c for PB3, equal degrees throughout.
  bool is_well_defined() const;
};

/// ker φ1 ≤ ker φ2, decided by comparing |im(φ1 × φ2)| with |im φ1|.
/// `image_order1` may pass a known |im φ1|.
bool kernel_contained(const GenHom& phi1, const GenHom& phi2,
                      std::optional<std::size_t> image_order1 = std::nullopt);

/// |im(φ1 × φ2)| where the product acts on the disjoint union of the domains.
std::size_t paired_image_order(const GenHom& phi1, const GenHom& phi2);

}  // namespace braidshadow
