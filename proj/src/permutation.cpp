#include "conjforge/permutation.hpp"

#include <algorithm>
#include <charconv>

namespace conjforge {

Permutation Permutation::identity(unsigned n) {
  std::vector<unsigned> images(n);
  for (unsigned i = 0; i < n; ++i) images[i] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<unsigned> images) {
  const unsigned n = static_cast<unsigned>(images.size());
  std::vector<bool> seen(n, false);
  for (unsigned v : images) {
    if (v >= n || seen[v])
      throw std::invalid_argument("image list is not a permutation");
    seen[v] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(unsigned n, unsigned i, unsigned j) {
  if (i >= n || j >= n || i == j)
    throw std::invalid_argument("invalid transposition");
  Permutation out = identity(n);
  std::swap(out.images_[i], out.images_[j]);
  return out;
}

std::optional<Permutation> Permutation::parse_one_line(const std::string& text) {
  std::vector<unsigned> images;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    unsigned value = 0;
    auto [ptr, ec] =
        std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size() || value == 0)
      return std::nullopt;
    images.push_back(value - 1);  // 1-based on the wire
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (images.empty()) return std::nullopt;
  const unsigned n = static_cast<unsigned>(images.size());
  std::vector<bool> seen(n, false);
  for (unsigned v : images) {
    if (v >= n || seen[v]) return std::nullopt;
    seen[v] = true;
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<unsigned> inv(images_.size());
  for (unsigned i = 0; i < degree(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

std::string Permutation::to_one_line() const {
  std::string out;
  for (unsigned i = 0; i < degree(); ++i) {
    if (i) out += ',';
    out += std::to_string(images_[i] + 1);
  }
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatchError("composing permutations of degrees " +
                              std::to_string(a.degree()) + " and " +
                              std::to_string(b.degree()));
  std::vector<unsigned> images(a.degree());
  for (unsigned i = 0; i < a.degree(); ++i) images[i] = a(b(i));
  return Permutation::from_images(std::move(images));
}

}  // namespace conjforge
