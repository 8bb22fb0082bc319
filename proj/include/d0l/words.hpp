#ifndef D0L_WORDS_HPP_
#define D0L_WORDS_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Alphabets, words and morphisms. A word is a std::string over the display
// characters of its alphabet; the alphabet itself is the ordered string of
// rule heads, so letter identity is just the character.

namespace d0l {

/// A non-erasing morphism over a fixed finite alphabet.
///
/// Images are indexed by position of the letter in `alphabet`. All images
/// are non-empty; erasing rules are rejected at parse time.
struct Morphism {
  std::string alphabet;             // rule heads, in declaration order
  std::vector<std::string> images;  // images[i] = image of alphabet[i]
  int max_image_len = 1;            // M
  int min_image_len = 1;
  std::optional<int> uniform_k;     // present iff all images share one length

  int index_of(char c) const {
    auto pos = alphabet.find(c);
    return pos == std::string::npos ? -1 : static_cast<int>(pos);
  }
  bool has_letter(char c) const { return index_of(c) >= 0; }

  const std::string& image(char c) const {
    int i = index_of(c);
    if (i < 0) throw std::invalid_argument(std::string("letter '") + c + "' not in alphabet");
    return images[static_cast<size_t>(i)];
  }

  /// Canonical spec string, e.g. "a->ab,b->ba". Re-parses to an equal morphism.
  std::string spec() const;

  bool operator==(const Morphism& o) const {
    return alphabet == o.alphabet && images == o.images;
  }
};

struct D0LSystem {
  Morphism morphism;
  std::string axiom;  // non-empty, letters from the alphabet
};

/// Parses a comma- or semicolon-separated rule list `c->w`.
/// The alphabet is the set of rule heads; every character used in any image
/// must have a rule. Throws std::invalid_argument naming the offending rule.
Morphism parse_morphism(std::string_view spec);

/// Builds a system from a morphism spec and an axiom. An empty axiom
/// defaults to the first declared letter.
D0LSystem make_system(std::string_view morphism_spec, std::string_view axiom = "");

/// Image of a word: concatenation of letter images in order.
std::string apply(const Morphism& m, std::string_view w);

/// phi^n(axiom). Throws std::length_error once the output would exceed
/// `max_len` (growth guard for the CLI and tests).
std::string iterate(const D0LSystem& sys, int n, size_t max_len = size_t(1) << 26);

}  // namespace d0l

#endif  // D0L_WORDS_HPP_
