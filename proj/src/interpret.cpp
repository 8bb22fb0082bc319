#include "d0l/interpret.hpp"

#include <algorithm>
#include <unordered_map>

namespace d0l {

namespace {

// Smallest factor-set cap that can host every preimage of a word of length
// u_len under minimal cover: |phi(v)| <= u_len + 2M - 2 and images shrink a
// word by at most a factor of min_image_len.
int preimage_cap(const Morphism& m, int u_len) {
  return (u_len + 2 * m.max_image_len + m.min_image_len - 1) / m.min_image_len;
}

std::vector<int> boundary_cuts(const Morphism& m, const std::string& v, int offset, int u_len) {
  std::vector<int> cuts;
  int pos = -offset;
  if (pos >= 0) cuts.push_back(pos);
  for (char c : v) {
    pos += static_cast<int>(m.image(c).size());
    if (pos >= 0 && pos <= u_len) cuts.push_back(pos);
  }
  return cuts;
}

}  // namespace

std::vector<Interpretation> enumerate_interpretations(const D0LSystem& sys, const FactorSet& fs,
                                                      std::string_view u) {
  if (u.empty()) throw std::invalid_argument("enumerate_interpretations: empty word");
  const Morphism& m = sys.morphism;
  const int u_len = static_cast<int>(u.size());
  const int v_min = (u_len + m.max_image_len - 1) / m.max_image_len;
  const int v_max = (u_len + 2 * m.max_image_len - 2) / m.min_image_len;
  if (fs.max_len() < std::min(v_max, preimage_cap(m, u_len)))
    throw std::out_of_range("enumerate_interpretations: factor set too small for preimages");

  std::vector<Interpretation> out;
  for (int v_len = std::max(1, v_min); v_len <= v_max; ++v_len) {
    for (const std::string& v : fs.of_length(v_len)) {
      const std::string w = apply(m, v);
      const int w_len = static_cast<int>(w.size());
      if (w_len < u_len || w_len > u_len + 2 * m.max_image_len - 2) continue;
      const int first_len = static_cast<int>(m.image(v.front()).size());
      const int last_len = static_cast<int>(m.image(v.back()).size());
      for (size_t o = w.find(u); o != std::string::npos; o = w.find(u, o + 1)) {
        const int off = static_cast<int>(o);
        if (off >= first_len) break;                     // no longer a minimal cover
        if (w_len - off - u_len >= last_len) continue;   // right spill too long
        Interpretation it;
        it.p = w.substr(0, o);
        it.preimage = v;
        it.s = w.substr(o + u.size());
        it.cuts = boundary_cuts(m, v, off, u_len);
        out.push_back(std::move(it));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Interpretation& a, const Interpretation& b) {
    if (a.preimage != b.preimage) return a.preimage < b.preimage;
    if (a.p != b.p) return a.p < b.p;
    return a.s < b.s;
  });
  return out;
}

SyncReport sync_report(const D0LSystem& sys, const FactorSet& fs, std::string_view u) {
  SyncReport rep;
  rep.word = std::string(u);
  rep.interpretations = enumerate_interpretations(sys, fs, u);
  if (rep.interpretations.size() <= 1) {
    // Pairwise synchronization over fewer than two interpretations holds
    // vacuously at every position.
    rep.sync_positions.resize(u.size() + 1);
    for (size_t i = 0; i <= u.size(); ++i) rep.sync_positions[i] = static_cast<int>(i);
    rep.has_sync_point = true;
    return rep;
  }
  std::vector<int> common = rep.interpretations.front().cuts;
  for (size_t i = 1; i < rep.interpretations.size() && !common.empty(); ++i) {
    const auto& cuts = rep.interpretations[i].cuts;
    std::vector<int> next;
    std::set_intersection(common.begin(), common.end(), cuts.begin(), cuts.end(),
                          std::back_inserter(next));
    common = std::move(next);
  }
  rep.sync_positions = std::move(common);
  rep.has_sync_point = !rep.sync_positions.empty();
  return rep;
}

namespace {

// Two distinct stored factors with the same image witness that the morphism
// is not injective on S(L(G)); circularity presupposes that injectivity, so
// the delay search reports failure instead of a (meaningless) finite value.
std::optional<std::pair<std::string, std::string>> image_collision(const D0LSystem& sys,
                                                                   const FactorSet& fs,
                                                                   int max_preimage_len) {
  std::unordered_map<std::string, std::string> seen;
  for (int len = 1; len <= std::min(max_preimage_len, fs.max_len()); ++len)
    for (const std::string& v : fs.sorted_layer(len)) {
      auto [it, fresh] = seen.emplace(apply(sys.morphism, v), v);
      if (!fresh) return std::make_pair(it->second, v);
    }
  return std::nullopt;
}

}  // namespace

ZMinResult z_min(const D0LSystem& sys, int cap, const FactorSet& fs) {
  if (cap < 1) throw std::invalid_argument("z_min: cap must be >= 1");
  const int deepest = cap + 1;
  if (fs.max_len() < std::max(deepest, preimage_cap(sys.morphism, deepest)))
    throw std::out_of_range("z_min: factor set too small for the requested cap");

  ZMinResult res;
  res.collision = image_collision(sys, fs, preimage_cap(sys.morphism, deepest));
  if (res.collision) {
    res.exceeded_cap = true;
    return res;
  }

  std::vector<std::string> level;
  for (const std::string& letter : fs.sorted_layer(1))
    if (!sync_report(sys, fs, letter).has_sync_point) level.push_back(letter);

  int depth = 0;
  while (!level.empty()) {
    ++depth;
    res.level_counts.push_back(static_cast<int>(level.size()));
    res.z_min = depth;
    res.witness = level.front();
    if (depth == deepest) {
      res.exceeded_cap = true;
      return res;
    }
    std::vector<std::string> next;
    for (const std::string& w : level)
      for (char c : sys.morphism.alphabet) {
        std::string ext = w + c;
        if (fs.contains(ext) && !sync_report(sys, fs, ext).has_sync_point)
          next.push_back(std::move(ext));
      }
    level = std::move(next);
  }
  if (depth == 0) res.witness.reset();
  return res;
}

ZMinResult z_min(const D0LSystem& sys, int cap) {
  if (cap < 1) throw std::invalid_argument("z_min: cap must be >= 1");
  const int deepest = cap + 1;
  const int fs_len = std::max(deepest, preimage_cap(sys.morphism, deepest));
  FactorSet fs = factors_up_to(sys, fs_len);
  return z_min(sys, cap, fs);
}

}  // namespace d0l
