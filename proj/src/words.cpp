#include "d0l/words.hpp"

#include <algorithm>
#include <cctype>

namespace d0l {

std::string Morphism::spec() const {
  std::string out;
  for (size_t i = 0; i < alphabet.size(); ++i) {
    if (i) out += ',';
    out += alphabet[i];
    out += "->";
    out += images[i];
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Morphism parse_morphism(std::string_view spec) {
  Morphism m;
  spec = trim(spec);
  if (spec.empty()) throw std::invalid_argument("empty morphism spec");

  size_t start = 0;
  while (start <= spec.size()) {
    size_t end = spec.find_first_of(",;", start);
    if (end == std::string_view::npos) end = spec.size();
    std::string_view rule = trim(spec.substr(start, end - start));
    if (rule.empty()) throw std::invalid_argument("empty rule in morphism spec");

    size_t arrow = rule.find("->");
    if (arrow == std::string_view::npos)
      throw std::invalid_argument("malformed rule (expected `c->w`): " + std::string(rule));
    std::string_view head = trim(rule.substr(0, arrow));
    std::string_view body = trim(rule.substr(arrow + 2));
    if (head.size() != 1)
      throw std::invalid_argument("rule head must be a single letter: " + std::string(rule));
    if (!std::isprint(static_cast<unsigned char>(head[0])))
      throw std::invalid_argument("rule head must be printable");
    if (body.empty())
      throw std::invalid_argument(std::string("erasing image for letter '") + head[0] +
                                  "' (non-erasing morphisms only)");
    if (m.has_letter(head[0]))
      throw std::invalid_argument(std::string("duplicate rule for letter '") + head[0] + "'");
    m.alphabet += head[0];
    m.images.emplace_back(body);

    if (end == spec.size()) break;
    start = end + 1;
  }

  for (size_t i = 0; i < m.images.size(); ++i)
    for (char c : m.images[i])
      if (!m.has_letter(c))
        throw std::invalid_argument(std::string("image of '") + m.alphabet[i] +
                                    "' uses undeclared letter '" + c + "'");

  m.max_image_len = 0;
  m.min_image_len = static_cast<int>(m.images.front().size());
  for (const auto& img : m.images) {
    m.max_image_len = std::max(m.max_image_len, static_cast<int>(img.size()));
    m.min_image_len = std::min(m.min_image_len, static_cast<int>(img.size()));
  }
  if (m.max_image_len == m.min_image_len) m.uniform_k = m.max_image_len;
  return m;
}

D0LSystem make_system(std::string_view morphism_spec, std::string_view axiom) {
  D0LSystem sys;
  sys.morphism = parse_morphism(morphism_spec);
  sys.axiom = axiom.empty() ? std::string(1, sys.morphism.alphabet.front()) : std::string(axiom);
  for (char c : sys.axiom)
    if (!sys.morphism.has_letter(c))
      throw std::invalid_argument(std::string("axiom letter '") + c + "' not in alphabet");
  return sys;
}

std::string apply(const Morphism& m, std::string_view w) {
  size_t total = 0;
  for (char c : w) total += m.image(c).size();
  std::string out;
  out.reserve(total);
  for (char c : w) out += m.image(c);
  return out;
}

std::string iterate(const D0LSystem& sys, int n, size_t max_len) {
  if (n < 0) throw std::invalid_argument("iterate: n must be >= 0");
  std::string w = sys.axiom;
  for (int step = 0; step < n; ++step) {
    size_t next = 0;
    for (char c : w) next += sys.morphism.image(c).size();
    if (next > max_len)
      throw std::length_error("iterate: output exceeds configured length cap");
    w = apply(sys.morphism, w);
  }
  return w;
}

}  // namespace d0l
