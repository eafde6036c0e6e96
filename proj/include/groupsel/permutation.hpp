#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "groupsel/matrix.hpp"
#include "groupsel/tolerances.hpp"

namespace groupsel {

// Permutation of {0, ..., M-1} stored as its image vector: sigma maps i to
// images[i].  Composition reads left to right, (a * b)(i) = b(a(i)), so that
// perm_matrix(a * b) = perm_matrix(a) * perm_matrix(b).
class Permutation {
public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  static Permutation transposition(int degree, int a, int b);
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);
  // i -> i+1 (mod degree)
  static Permutation cyclic(int degree);
  // i -> degree-1-i
  static Permutation reflection(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  int order() const;
  int fixed_points() const;
  std::string cycle_notation() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

private:
  std::vector<int> images_;
};

// P[i][sigma(i)] = 1, acting on vectors by (P x)_i = x_{sigma(i)}.
ComplexMatrix perm_matrix(const Permutation& p);

// Finite permutation group held as its sorted element list plus a reduced
// generating set.  Constructible only through factories that guarantee the
// identity is present and the set is closed under composition.
class PermutationGroup {
public:
  static PermutationGroup trivial(int degree);
  static PermutationGroup closure(int degree, std::vector<Permutation> generators,
                                  std::size_t cap = kClosureCap);
  static PermutationGroup from_elements(int degree, std::vector<Permutation> elements);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  bool contains(const Permutation& p) const;
  bool same_group(const PermutationGroup& other) const;
  bool subgroup_of(const PermutationGroup& other) const;

private:
  PermutationGroup(int degree, std::vector<Permutation> elements,
                   std::vector<Permutation> generators);

  int degree_;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
};

// All sigma with |P_sigma R - R P_sigma|_F <= tol * |R|_F, found by scanning
// the full symmetric group; the degree must not exceed kBruteforceMaxDegree.
PermutationGroup aut_bruteforce(const HermitianMatrix& r, double tol = 1e-8);

// (1/|G|) sum_g P_g X P_g^T, the orthogonal projection onto the commutant.
ComplexMatrix reynolds_project(const PermutationGroup& group, const ComplexMatrix& x);

// True when |[P_g, X]|_F <= tol * |X|_F for every generator g.
bool in_commutant(const PermutationGroup& group, const ComplexMatrix& x, double tol);

enum class PairMode {
  Ordered,          // orbits of (i, j) under g: (i, j) -> (g(i), g(j))
  TransposeMerged,  // additionally glue (i, j) with (j, i)
};

// Partition of the M x M index pairs into group orbits.  Block ids are
// consecutive from zero in row-major order of first appearance.
struct OrbitPairPartition {
  int degree = 0;
  int block_count = 0;
  std::vector<int> block;  // size degree^2, row-major

  int block_of(int i, int j) const { return block[static_cast<std::size_t>(i) * degree + j]; }
};

OrbitPairPartition orbit_pairs(const PermutationGroup& group, PairMode mode = PairMode::Ordered);

// Largest subgroup of S_M whose elements map every block of the partition
// into itself; exhaustive over S_M, so degree <= kBruteforceMaxDegree.
PermutationGroup max_orbit_preserving_group(const OrbitPairPartition& partition);

struct GroupClassification {
  bool identifiable = false;
  PermutationGroup hmax;
};

// A group is identifiable exactly when no strictly larger subgroup of S_M
// preserves its pair-orbit partition.
GroupClassification classify_identifiability(const PermutationGroup& gstar,
                                             PairMode mode = PairMode::Ordered);

}  // namespace groupsel
