#ifndef D0L_INTERPRET_HPP_
#define D0L_INTERPRET_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "d0l/language.hpp"

// Interpretations of factors, synchronizing points and the minimal
// synchronizing delay Z_min.

namespace d0l {

/// A minimal preimage cover of a word u: phi(preimage) = p . u . s with
/// |p| < |phi(preimage[0])| and |s| < |phi(preimage.back())|, and the
/// preimage itself a language factor.
///
/// `cuts` are the positions j in [0,|u|] where an image boundary of the
/// cover falls: { |phi(preimage[0..i))| - |p| : 0 <= i <= |preimage| }
/// intersected with [0,|u|]. Under the minimal cover, 0 is a cut iff p is
/// empty and |u| is a cut iff s is empty.
struct Interpretation {
  std::string p;
  std::string preimage;  // v, as letters
  std::string s;
  std::vector<int> cuts;

  bool operator==(const Interpretation& o) const {
    return p == o.p && preimage == o.preimage && s == o.s;
  }
};

/// All minimal-cover interpretations of u, canonically ordered.
/// Requires fs.max_len() >= ceil((|u| + 2M) / min_image_len); throws
/// std::out_of_range otherwise.
std::vector<Interpretation> enumerate_interpretations(const D0LSystem& sys, const FactorSet& fs,
                                                      std::string_view u);

struct SyncReport {
  std::string word;
  std::vector<Interpretation> interpretations;
  std::vector<int> sync_positions;  // intersection of all cut sets
  bool has_sync_point = false;
};

/// Synchronization report for u. With fewer than two interpretations the
/// pairwise condition holds vacuously: sync_positions is all of [0,|u|].
SyncReport sync_report(const D0LSystem& sys, const FactorSet& fs, std::string_view u);

struct ZMinResult {
  int z_min = 0;                        // length of the longest non-synchronized factor
  std::optional<std::string> witness;   // one such factor, when z_min > 0
  bool exceeded_cap = false;            // search aborted: no finite delay certified
  // Two distinct factor preimages with the same image, when the abort was
  // caused by an injectivity failure (circularity requires injectivity on
  // S(L(G)), so no finite delay exists for such systems).
  std::optional<std::pair<std::string, std::string>> collision;
  std::vector<int> level_counts;        // level_counts[n] = #non-synchronized factors of length n+1
};

/// Level-by-level search for the longest non-synchronized factor. Level 1 is
/// the non-synchronized single letters; level n+1 holds the one-letter right
/// extensions of level-n words that are factors and non-synchronized (valid
/// because the non-synchronized set is factor-closed). Reports exceeded_cap
/// when level cap+1 is non-empty, or when the morphism is found non-injective
/// on factors.
ZMinResult z_min(const D0LSystem& sys, int cap);

/// As above but reusing a caller-provided factor set with
/// fs.max_len() >= cap + 1 + 2 * max_image_len.
ZMinResult z_min(const D0LSystem& sys, int cap, const FactorSet& fs);

}  // namespace d0l

#endif  // D0L_INTERPRET_HPP_
