#include "groupsel/basis.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "groupsel/errors.hpp"
#include "groupsel/tolerances.hpp"

namespace groupsel {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

MonomialTerm unit_term(const Permutation& p, cplx weight = 1.0) {
  return {p.images(), std::vector<cplx>(p.degree(), weight)};
}

BasisElement permutation_element(std::string label, const Permutation& p) {
  BasisElement e;
  e.label = std::move(label);
  e.dense = perm_matrix(p);
  e.hint = SparsityHint::Permutation;
  e.terms = {unit_term(p)};
  e.permutation = p;
  return e;
}

}  // namespace

ComplexMatrix materialize(const std::vector<MonomialTerm>& terms, int dim) {
  ComplexMatrix out(dim, dim);
  for (const MonomialTerm& t : terms) {
    require(static_cast<int>(t.images.size()) == dim && t.weights.size() == t.images.size(),
            "monomial term size mismatch");
    for (int i = 0; i < dim; ++i) out(i, t.images[i]) += t.weights[i];
  }
  return out;
}

void add_term_left_product(ComplexMatrix& result, const MonomialTerm& term,
                           const ComplexMatrix& x, cplx scale) {
  const int n = x.rows();
  for (int i = 0; i < n; ++i) {
    const cplx w = scale * term.weights[i];
    const int src = term.images[i];
    for (int j = 0; j < x.cols(); ++j) result(i, j) += w * x(src, j);
  }
}

void add_term_right_product(ComplexMatrix& result, const ComplexMatrix& x,
                            const MonomialTerm& term, cplx scale) {
  const int n = x.cols();
  for (int k = 0; k < n; ++k) {
    const cplx w = scale * term.weights[k];
    const int dst = term.images[k];
    for (int i = 0; i < x.rows(); ++i) result(i, dst) += x(i, k) * w;
  }
}

cplx term_inner(const MonomialTerm& term, const ComplexMatrix& x) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < term.images.size(); ++i)
    s += std::conj(term.weights[i]) * x(static_cast<int>(i), term.images[i]);
  return s;
}

GeneratorBasis::GeneratorBasis(int dim, std::vector<BasisElement> elements)
    : dim_(dim), elements_(std::move(elements)) {
  require(dim_ >= 1, "basis dimension must be positive");
  require(!elements_.empty(), "basis needs at least one element");
  for (const BasisElement& e : elements_) {
    require(!e.label.empty(), "basis element needs a label");
    require(e.dense.rows() == dim_ && e.dense.cols() == dim_,
            "basis element dimension mismatch");
    require(e.dense.all_finite(), "basis element has non-finite entries");
    require(e.dense.frobenius_norm() > 0.0, "basis element is the zero matrix");
    if (e.structured()) {
      const ComplexMatrix built = materialize(e.terms, dim_);
      if ((built - e.dense).max_abs() > 1e-12 * std::max(1.0, e.dense.max_abs()))
        throw ValidationError("structured terms do not match the dense element");
    }
  }
}

bool GeneratorBasis::all_structured() const {
  for (const BasisElement& e : elements_)
    if (!e.structured()) return false;
  return true;
}

ComplexMatrix cyclic_shift(int m) { return perm_matrix(Permutation::cyclic(m)); }

ComplexMatrix reflection(int m) { return perm_matrix(Permutation::reflection(m)); }

GeneratorBasis standard_catalog(int m, std::vector<std::string>* warnings) {
  require(m >= 2, "the standard catalog needs M >= 2");
  auto warn = [&](const std::string& msg) {
    if (warnings) warnings->push_back(msg);
  };
  std::vector<std::pair<std::string, std::optional<Permutation>>> candidates;
  candidates.emplace_back("cyclic-shift", Permutation::cyclic(m));
  candidates.emplace_back("reflection", Permutation::reflection(m));
  candidates.emplace_back("transposition", Permutation::transposition(m, 0, 1));
  if (m % 2 == 0) {
    std::vector<int> img(m);
    for (int i = 0; i < m; ++i) img[i] = (i + m / 2) % m;
    candidates.emplace_back("block-swap", Permutation(std::move(img)));
  } else {
    candidates.emplace_back("block-swap", std::nullopt);
    warn("block-swap dropped: undefined for odd M");
  }
  if (m >= 3) {
    candidates.emplace_back("3-cycle", Permutation::from_cycles(m, {{0, 1, 2}}));
  } else {
    candidates.emplace_back("3-cycle", std::nullopt);
    warn("3-cycle dropped: needs M >= 3");
  }

  std::vector<BasisElement> elements;
  std::vector<Permutation> taken;
  for (auto& [label, perm] : candidates) {
    if (!perm) continue;
    bool duplicate = false;
    for (const Permutation& p : taken)
      if (p == *perm) {
        warn(label + " dropped: duplicates an earlier catalog member at this M");
        duplicate = true;
        break;
      }
    if (duplicate) continue;
    taken.push_back(*perm);
    elements.push_back(permutation_element(label, *perm));
  }
  return {m, std::move(elements)};
}

GeneratorBasis perm_diff_basis(const std::vector<Permutation>& perms) {
  require(!perms.empty(), "the permutation-difference basis needs at least one permutation");
  const int m = perms.front().degree();
  std::vector<BasisElement> elements;
  for (const Permutation& p : perms) {
    require(p.degree() == m, "permutation degree mismatch in basis");
    require(!p.is_identity(), "identity permutation yields the zero element");
    BasisElement e;
    e.label = "P" + p.cycle_notation() + "-I";
    e.dense = perm_matrix(p) - ComplexMatrix::identity(m);
    e.hint = SparsityHint::PermutationDifference;
    e.terms = {unit_term(p), unit_term(Permutation::identity(m), -1.0)};
    elements.push_back(std::move(e));
  }
  return {m, std::move(elements)};
}

ComplexMatrix chirp_generator(int m, double psi) {
  require(m >= 1, "chirp generator dimension must be positive");
  ComplexMatrix b(m, m);
  for (int n = 0; n < m; ++n) {
    const int succ = (n + 1) % m;
    const double phase = -std::numbers::pi * psi *
                         (static_cast<double>(n) * n - static_cast<double>(succ) * succ);
    b(n, succ) = std::polar(1.0, phase);
  }
  return b;
}

GeneratorBasis chirp_basis(int m, double psi) {
  ComplexMatrix b = chirp_generator(m, psi);
  const Permutation shift = Permutation::cyclic(m);
  MonomialTerm term;
  term.images = shift.images();
  term.weights.resize(m);
  for (int n = 0; n < m; ++n) term.weights[n] = b(n, shift(n));
  std::ostringstream label;
  label << "chirp(psi=" << psi << ")";
  BasisElement e;
  e.label = label.str();
  e.dense = std::move(b);
  e.hint = SparsityHint::Permutation;
  e.terms = {std::move(term)};
  return {m, {std::move(e)}};
}

HermitianMatrix gram(const GeneratorBasis& basis) {
  const int d = basis.size();
  ComplexMatrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      const cplx v = frobenius_inner(basis[i].dense, basis[j].dense);
      g(i, j) = i == j ? cplx(v.real(), 0.0) : v;
      if (i != j) g(j, i) = std::conj(v);
    }
  }
  HermitianMatrix out(std::move(g));
  const EigenDecomposition eig = hermitian_eig(out);
  if (eig.eigenvalues.front() <= 0.0) {
    std::ostringstream msg;
    msg << "Gram matrix is not positive definite (lambda_min = " << eig.eigenvalues.front()
        << "); near-null coefficients:";
    for (int k = 0; k < d; ++k) {
      const cplx c = eig.eigenvectors(k, 0);
      msg << ' ' << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << 'i';
    }
    throw NumericalError(msg.str());
  }
  return out;
}

}  // namespace groupsel
