#include "d0l/language.hpp"

#include <algorithm>
#include <deque>
#include <memory>

namespace d0l {

std::vector<std::string> FactorSet::sorted_layer(int n) const {
  std::vector<std::string> out(by_len_.at(static_cast<size_t>(n)).begin(),
                               by_len_.at(static_cast<size_t>(n)).end());
  std::sort(out.begin(), out.end());
  return out;
}

size_t FactorSet::total_words() const {
  size_t t = 0;
  for (const auto& layer : by_len_) t += layer.size();
  return t;
}

FactorSet factors_up_to(const D0LSystem& sys, int max_len) {
  if (max_len < 1) throw std::invalid_argument("factors_up_to: max_len must be >= 1");
  FactorSet fs(sys, max_len);

  const Morphism& m = sys.morphism;
  // Only words this short can host a new length<=max_len factor in their image.
  const int touch =
      max_len <= 1 ? 1 : std::min(max_len, (max_len - 2) / m.min_image_len + 2);

  std::deque<std::string> work;  // short words whose image is still unexpanded
  auto add_factors_of = [&](const std::string& w) {
    const int wl = static_cast<int>(w.size());
    for (int len = 1; len <= std::min(wl, max_len); ++len)
      for (int pos = 0; pos + len <= wl; ++pos) {
        std::string f = w.substr(static_cast<size_t>(pos), static_cast<size_t>(len));
        if (fs.by_len_[static_cast<size_t>(len)].insert(std::move(f)).second && len <= touch)
          work.push_back(w.substr(static_cast<size_t>(pos), static_cast<size_t>(len)));
      }
  };

  add_factors_of(sys.axiom);
  while (!work.empty()) {
    std::string u = std::move(work.front());
    work.pop_front();
    add_factors_of(apply(m, u));
  }
  return fs;
}

MaxPower max_power(const D0LSystem& sys, std::string_view v, int cap) {
  if (v.empty()) throw std::invalid_argument("max_power: v must be non-empty");
  if (cap < 1) throw std::invalid_argument("max_power: cap must be >= 1");

  const int step = static_cast<int>(v.size());
  std::string power;
  int have_len = 0;
  std::unique_ptr<FactorSet> fs;

  MaxPower out;
  for (int l = 1; l <= cap; ++l) {
    power += v;
    const int need = step * l;
    if (need > have_len) {
      have_len = std::min(step * cap, std::max(need, have_len * 2));
      fs = std::make_unique<FactorSet>(factors_up_to(sys, have_len));
    }
    if (!fs->contains(power)) return out;
    out.value = l;
  }
  out.over_cap = true;
  return out;
}

}  // namespace d0l
