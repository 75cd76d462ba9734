#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permsing/characteristic.hpp"

namespace permsing {

/// A bijection of {1..n}. Images are stored 0-based.
class Permutation {
 public:
  /// Identity of S_n.
  explicit Permutation(int n);
  /// `images` are 1-based: images[i-1] is the image of i. Throws InvalidInput
  /// if they do not form a bijection of {1..n}.
  static Permutation from_images(std::span<const int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  /// Image of the 1-based point `i`, 1-based.
  int operator()(int i) const { return images_[i - 1] + 1; }
  /// 1-based image list.
  std::vector<int> images() const;

  bool is_identity() const;
  /// Cycle lengths including fixed points, sorted descending.
  std::vector<int> cycle_type() const;
  int cycle_count() const;
  bool is_transposition() const;
  /// +1 or -1.
  int sign() const;
  int order() const;

  Permutation inverse() const;
  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  /// Relabels points through sigma: returns sigma * this * sigma^-1.
  Permutation conjugated_by(const Permutation& sigma) const;

  /// Disjoint-cycle form, e.g. "(1 2 3)(4 5)"; identity prints as "()".
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> zero_based) : images_(std::move(zero_based)) {}
  std::vector<int> images_;
};

/// Parses a product of disjoint cycles such as "(1 2 3)(4 5)" or "(1,2)".
/// Empty or blank text is the identity.
Permutation parse_permutation(std::string_view text, int n);

/// Splits on ';' and parses each generator.
std::vector<Permutation> parse_generators(std::string_view text, int n);

/// Finite subgroup of S_n stored as its sorted element list.
class PermutationGroup {
 public:
  int degree() const { return n_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const Permutation& g) const;

  /// Relabeling sigma G sigma^-1.
  PermutationGroup conjugated_by(const Permutation& sigma) const;

  friend PermutationGroup group_closure(std::span<const Permutation> generators, int n);

 private:
  PermutationGroup(int n, std::vector<Permutation> elements, std::vector<Permutation> generators)
      : n_(n), elements_(std::move(elements)), generators_(std::move(generators)) {}

  int n_;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
};

/// Smallest subgroup of S_n containing `generators` (breadth-first closure).
PermutationGroup group_closure(std::span<const Permutation> generators, int n);

/// Named presets: "Sn", "An", "cyclic:k", "klein4", "trivial". S and A use the
/// supplied degree; cyclic:k is generated by (1 2 ... k); klein4 needs n >= 4.
PermutationGroup named_group(std::string_view name, int n);

/// Dimension of the fixed subspace of the permutation matrix, which is the
/// number of cycles (fixed points included) in every characteristic.
int fixed_space_dimension(const Permutation& g);

/// True iff the fixed subspace has codimension one. Rejects the identity.
bool is_pseudo_reflection(const Permutation& g);

std::vector<Permutation> transpositions(const PermutationGroup& group);

/// Conjugacy orbits of transpositions in G, i.e. irreducible components of
/// the branch divisor.
int branch_components(const PermutationGroup& group);

bool is_even_group(const PermutationGroup& group);

struct GorensteinReport {
  /// K_X has Cartier index dividing this (1 or 2).
  int kx_index_divides = 2;
  /// Multiplicity of B along each branch component: 1/2 or 1 expressed as
  /// (numerator, denominator); absent when B = 0.
  struct Coefficient {
    int num;
    int den;
    friend bool operator==(const Coefficient&, const Coefficient&) = default;
  };
  std::optional<Coefficient> boundary_coefficient;
  std::optional<int> b_cartier_index_divides;
  int branch_component_count = 0;

  friend bool operator==(const GorensteinReport&, const GorensteinReport&) = default;
};

GorensteinReport gorenstein_report(const PermutationGroup& group, Characteristic p);

}  // namespace permsing
