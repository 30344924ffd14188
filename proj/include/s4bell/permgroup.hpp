#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace s4bell {

/// Permutation in one-line notation: images()[i] is the image of point i+1.
/// Values are 1-based and must form a bijection of {1,...,degree}.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point - 1]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Parses a one-line string such as "(2314)" (parentheses optional).
/// Exactly four digits; throws std::invalid_argument on malformed input,
/// repeated digits, or digits outside 1..4.
Permutation parse_one_line(std::string_view text);

/// "(2314)" form, the serialization used everywhere.
std::string to_string(const Permutation& p);

/// Product with the left factor applied first: compose(p, q)(x) = q(p(x)).
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

/// Smallest n >= 1 with p^n = identity.
int order(const Permutation& p);

/// The permutation of the given degree exchanging i and j.
Permutation transposition(int degree, int i, int j);

/// Coset coordinate (alpha, l): the unique factorization p = g_alpha * g^l
/// with g_alpha a coset representative and g the order-3 generator.
struct CosetCoord {
  int alpha = 0;  // 1..8
  int l = 0;      // 0..2
  friend bool operator==(const CosetCoord&, const CosetCoord&) = default;
  friend auto operator<=>(const CosetCoord&, const CosetCoord&) = default;
};

std::string to_string(CosetCoord c);  // "(2,2)"

inline int flat_index(CosetCoord c) { return (c.alpha - 1) * 3 + c.l; }
inline CosetCoord coord_from_flat(int i) { return CosetCoord{i / 3 + 1, i % 3}; }

enum class ConjugacyClass { I, II, III, IV, V };
std::string_view to_string(ConjugacyClass c);

/// S4 with the coset structure G/H, H = <g> of order 3, g = (2314).
///
/// Construction enumerates all 24 elements (lexicographic one-line order),
/// installs the fixed coset representatives, checks that (alpha, l) ->
/// g_alpha * g^l is a bijection onto the group, checks that H is closed,
/// and computes conjugacy classes by conjugation closure.
class GroupTable {
 public:
  static constexpr int kOrder = 24;
  static constexpr int kCosets = 8;        // k = |G| / m
  static constexpr int kSubgroupOrder = 3; // m

  static GroupTable build();

  const std::vector<Permutation>& elements() const { return elements_; }

  /// Index of p in elements() (lexicographic rank). Throws for degree != 4.
  int index_of(const Permutation& p) const;

  const Permutation& generator() const { return generator_; }
  const std::array<Permutation, kCosets>& coset_reps() const { return coset_reps_; }

  /// The unique (alpha, l) with p = g_alpha * g^l.
  CosetCoord coset_factorize(const Permutation& p) const;

  const Permutation& element(CosetCoord c) const;

  ConjugacyClass conjugacy_class(const Permutation& p) const;

  /// Sizes indexed by ConjugacyClass; equals {8, 6, 6, 3, 1}.
  const std::array<int, 5>& class_sizes() const { return class_sizes_; }

 private:
  GroupTable() = default;

  std::vector<Permutation> elements_;
  Permutation generator_;
  std::array<Permutation, kCosets> coset_reps_;
  std::array<CosetCoord, kOrder> coords_by_index_{};
  std::array<int, kCosets * kSubgroupOrder> element_by_coord_{};
  std::array<ConjugacyClass, kOrder> class_by_index_{};
  std::array<int, 5> class_sizes_{};
};

}  // namespace s4bell
