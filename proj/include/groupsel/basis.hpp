#pragma once

#include <optional>
#include <string>
#include <vector>

#include "groupsel/matrix.hpp"
#include "groupsel/permutation.hpp"

namespace groupsel {

enum class SparsityHint { Permutation, PermutationDifference, Dense };

// One generalized-permutation summand: entry (i, images[i]) = weights[i],
// all other entries zero.  A structured basis element is a short sum of
// these, which keeps products with a dense matrix at O(M^2).
struct MonomialTerm {
  std::vector<int> images;
  std::vector<cplx> weights;
};

ComplexMatrix materialize(const std::vector<MonomialTerm>& terms, int dim);

// result += scale * (T X) where T is the term's matrix.
void add_term_left_product(ComplexMatrix& result, const MonomialTerm& term,
                           const ComplexMatrix& x, cplx scale);
// result += scale * (X T).
void add_term_right_product(ComplexMatrix& result, const ComplexMatrix& x,
                            const MonomialTerm& term, cplx scale);
// <T, X> = sum_i conj(weights[i]) * X(i, images[i]).
cplx term_inner(const MonomialTerm& term, const ComplexMatrix& x);

struct BasisElement {
  std::string label;
  ComplexMatrix dense;
  SparsityHint hint = SparsityHint::Dense;
  std::vector<MonomialTerm> terms;           // empty when only dense data exists
  std::optional<Permutation> permutation;    // set when hint == Permutation

  bool structured() const { return !terms.empty(); }
};

// Ordered, immutable list of candidate generators sharing one dimension.
// Linear independence is not checked here; the Gram matrix check is lazy.
class GeneratorBasis {
public:
  GeneratorBasis(int dim, std::vector<BasisElement> elements);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const BasisElement& operator[](int k) const { return elements_[k]; }
  const std::vector<BasisElement>& elements() const { return elements_; }
  bool all_structured() const;

private:
  int dim_;
  std::vector<BasisElement> elements_;
};

// Permutation matrix of the M-cycle i -> i+1 (mod M).
ComplexMatrix cyclic_shift(int m);

// Anti-identity J with ones on the anti-diagonal.
ComplexMatrix reflection(int m);

// The five generic permutation generators: cyclic shift, reflection,
// transposition (0 1), half block swap, and 3-cycle (0 1 2).  Members that
// are undefined at this M or duplicate an earlier member are dropped, with
// a note appended to *warnings when provided.
GeneratorBasis standard_catalog(int m, std::vector<std::string>* warnings = nullptr);

// Elements P_sigma - I, labeled by cycle notation.
GeneratorBasis perm_diff_basis(const std::vector<Permutation>& perms);

// B(psi) = U(psi) P U(psi)^* with U(psi) = diag(e^{-i pi psi n^2}).
ComplexMatrix chirp_generator(int m, double psi);

// Single-element basis {B(psi)} for the 1-D sweep.
GeneratorBasis chirp_basis(int m, double psi);

// G_ij = <B_i, B_j>; throws NumericalError naming the near-null coefficient
// vector when the result is not positive definite.
HermitianMatrix gram(const GeneratorBasis& basis);

}  // namespace groupsel
