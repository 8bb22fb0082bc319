#ifndef D0L_LANGUAGE_HPP_
#define D0L_LANGUAGE_HPP_

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "d0l/words.hpp"

// Bounded generation of the factor set S(L(G)) and factor/power queries.

namespace d0l {

/// All language factors of length 1..max_len, grouped by length.
///
/// Built as a closure (see factors_up_to); immutable afterwards, so
/// concurrent reads are safe.
class FactorSet {
 public:
  FactorSet(D0LSystem sys, int max_len)
      : sys_(std::move(sys)), max_len_(max_len), by_len_(static_cast<size_t>(max_len) + 1) {}

  int max_len() const { return max_len_; }
  const D0LSystem& system() const { return sys_; }

  /// Membership in S(L(G)). Throws std::out_of_range for queries longer than
  /// max_len (the set cannot answer them; regenerate with a larger cap).
  bool contains(std::string_view u) const {
    if (u.empty()) return true;
    if (static_cast<int>(u.size()) > max_len_)
      throw std::out_of_range("is_factor: query longer than factor-set cap");
    return by_len_[u.size()].count(std::string(u)) > 0;
  }

  const std::unordered_set<std::string>& of_length(int n) const {
    return by_len_.at(static_cast<size_t>(n));
  }

  /// Length-n layer in (lexicographic) canonical order.
  std::vector<std::string> sorted_layer(int n) const;

  size_t total_words() const;

 private:
  friend FactorSet factors_up_to(const D0LSystem&, int);
  D0LSystem sys_;
  int max_len_;
  std::vector<std::unordered_set<std::string>> by_len_;  // index = length
};

/// Exactly { u in S(L(G)) : 1 <= |u| <= max_len }, computed as a closure:
/// seed with the axiom's factors, then repeatedly add factors of images of
/// stored words until nothing new appears. A length-L factor of phi^{n+1}(w)
/// lies inside phi(u) for some factor u of phi^n(w) touching at most
/// floor((L-2)/min_image_len)+2 letters, so only words up to that length
/// need their image expanded.
FactorSet factors_up_to(const D0LSystem& sys, int max_len);

inline bool is_factor(const FactorSet& fs, std::string_view u) { return fs.contains(u); }

struct MaxPower {
  int value = 0;       // largest l <= cap with v^l a factor (ignored if over_cap)
  bool over_cap = false;  // v^cap is still a factor: possible unbounded repetition
};

/// Largest l <= cap with v^l in S(L(G)), or OverCap if v^cap is still a
/// factor. Grows its factor set geometrically so cheap queries stay cheap.
MaxPower max_power(const D0LSystem& sys, std::string_view v, int cap);

}  // namespace d0l

#endif  // D0L_LANGUAGE_HPP_
