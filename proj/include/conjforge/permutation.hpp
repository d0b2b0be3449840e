#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "conjforge/errors.hpp"

namespace conjforge {

/// Permutation of {0, .., n-1}. Serialized one-line notation is 1-based
/// ("2,1,3"); everything in memory is 0-based.
class Permutation {
 public:
  static Permutation identity(unsigned n);
  static Permutation from_images(std::vector<unsigned> images);
  static Permutation transposition(unsigned n, unsigned i, unsigned j);
  static std::optional<Permutation> parse_one_line(const std::string& text);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  unsigned operator()(unsigned i) const { return images_[i]; }
  const std::vector<unsigned>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::string to_one_line() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<unsigned> images)
      : images_(std::move(images)) {}
  std::vector<unsigned> images_;
};

// (a o b)(i) = a(b(i)); degrees must match.
Permutation compose(const Permutation& a, const Permutation& b);

}  // namespace conjforge
