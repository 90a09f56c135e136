#ifndef GALOIS_PERMUTATION_HPP
#define GALOIS_PERMUTATION_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace galois {

/// Bijection of {0, ..., n-1}; printed 1-based in cycle notation.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidInput unless `image` is a bijection.
  explicit Permutation(std::vector<std::uint8_t> image);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return img_.size(); }
  std::size_t operator()(std::size_t k) const { return img_[k]; }
  const std::vector<std::uint8_t>& image() const { return img_; }

  bool is_identity() const;
  bool is_even() const;
  std::size_t order() const;
  Permutation inverse() const;

  /// (a * b)(k) = a(b(k)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  /// "(1 2)(3 4)", identity "()".
  std::string cycles() const;
  /// Inverse of cycles(); 1-based points, n the degree.  Throws InvalidInput.
  static Permutation parse_cycles(const std::string& text, std::size_t n);

 private:
  std::vector<std::uint8_t> img_;
};

/// All n! permutations in lexicographic order of their image lists; the
/// identity comes first.
std::vector<Permutation> all_permutations(std::size_t n);

/// Position of p in all_permutations(p.size()).
std::size_t lex_rank(const Permutation& p);

/// Group generated by `gens` (the identity of degree n if gens is empty),
/// sorted lexicographically.
std::vector<Permutation> generated_group(const std::vector<Permutation>& gens, std::size_t n);

/// True if `elements` contains the identity and is closed under composition.
bool is_closed_group(const std::vector<Permutation>& elements);

/// Every subgroup of the finite group `group`, sorted by order and then by
/// the lexicographic list of elements.
std::vector<std::vector<Permutation>> all_subgroups(const std::vector<Permutation>& group);

/// Orbits of the group on {0..n-1}, each sorted, ordered by least point.
std::vector<std::vector<std::size_t>> orbits(const std::vector<Permutation>& group, std::size_t n);

}  // namespace galois

#endif  // GALOIS_PERMUTATION_HPP
