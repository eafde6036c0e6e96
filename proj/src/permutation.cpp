#include "groupsel/permutation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "groupsel/errors.hpp"

namespace groupsel {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

std::vector<int> range(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  require(!images_.empty(), "permutation degree must be positive");
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    require(v >= 0 && v < degree(), "permutation image out of range");
    require(!seen[v], "permutation images must be distinct");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int degree) {
  require(degree >= 1, "permutation degree must be positive");
  return Permutation(range(degree));
}

Permutation Permutation::transposition(int degree, int a, int b) {
  require(degree >= 1 && a >= 0 && b >= 0 && a < degree && b < degree && a != b,
          "transposition indices must be distinct and in range");
  std::vector<int> img = range(degree);
  std::swap(img[a], img[b]);
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  require(degree >= 1, "permutation degree must be positive");
  std::vector<int> img = range(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      const int from = cyc[k];
      const int to = cyc[(k + 1) % cyc.size()];
      require(from >= 0 && from < degree && !used[from], "cycles must be disjoint and in range");
      used[from] = true;
      img[from] = to;
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::cyclic(int degree) {
  require(degree >= 1, "permutation degree must be positive");
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = (i + 1) % degree;
  return Permutation(std::move(img));
}

Permutation Permutation::reflection(int degree) {
  require(degree >= 1, "permutation degree must be positive");
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = degree - 1 - i;
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (int i = 0; i < degree(); ++i) img[images_[i]] = i;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

int Permutation::order() const {
  int result = 1;
  std::vector<bool> visited(images_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (visited[i]) continue;
    int len = 0;
    for (int j = i; !visited[j]; j = images_[j]) {
      visited[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

int Permutation::fixed_points() const {
  int n = 0;
  for (int i = 0; i < degree(); ++i) n += images_[i] == i;
  return n;
}

std::string Permutation::cycle_notation() const {
  std::ostringstream out;
  std::vector<bool> visited(images_.size(), false);
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (visited[i] || images_[i] == i) continue;
    any = true;
    out << '(';
    bool first = true;
    for (int j = i; !visited[j]; j = images_[j]) {
      visited[j] = true;
      out << (first ? "" : " ") << j;
      first = false;
    }
    out << ')';
  }
  return any ? out.str() : "id";
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  require(a.degree() == b.degree(), "composed permutations must share a degree");
  std::vector<int> img(a.degree());
  for (int i = 0; i < a.degree(); ++i) img[i] = b(a(i));
  return Permutation(std::move(img));
}

ComplexMatrix perm_matrix(const Permutation& p) {
  ComplexMatrix m(p.degree(), p.degree());
  for (int i = 0; i < p.degree(); ++i) m(i, p(i)) = 1.0;
  return m;
}

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> elements,
                                   std::vector<Permutation> generators)
    : degree_(degree), elements_(std::move(elements)), generators_(std::move(generators)) {}

PermutationGroup PermutationGroup::trivial(int degree) {
  return {degree, {Permutation::identity(degree)}, {}};
}

PermutationGroup PermutationGroup::closure(int degree, std::vector<Permutation> generators,
                                           std::size_t cap) {
  for (const Permutation& g : generators)
    require(g.degree() == degree, "generator degree mismatch");
  std::set<Permutation> seen;
  std::vector<Permutation> frontier;
  seen.insert(Permutation::identity(degree));
  frontier.push_back(Permutation::identity(degree));
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& f : frontier) {
      for (const Permutation& g : generators) {
        Permutation p = f * g;
        if (seen.insert(p).second) {
          if (seen.size() > cap) throw ValidationError("group closure exceeds the size cap");
          next.push_back(std::move(p));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Permutation> keep;
  for (const Permutation& g : generators)
    if (!g.is_identity() && (keep.empty() || std::find(keep.begin(), keep.end(), g) == keep.end()))
      keep.push_back(g);
  return {degree, {seen.begin(), seen.end()}, std::move(keep)};
}

PermutationGroup PermutationGroup::from_elements(int degree, std::vector<Permutation> elements) {
  require(!elements.empty(), "a group needs at least the identity");
  for (const Permutation& e : elements)
    require(e.degree() == degree, "element degree mismatch");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  require(std::binary_search(elements.begin(), elements.end(), Permutation::identity(degree)),
          "element set lacks the identity");
  std::vector<Permutation> gens;
  PermutationGroup current = trivial(degree);
  for (const Permutation& e : elements) {
    if (current.contains(e)) continue;
    gens.push_back(e);
    try {
      current = closure(degree, gens, elements.size());
    } catch (const ValidationError&) {
      throw ValidationError("element set is not closed under composition");
    }
  }
  if (current.order() != elements.size())
    throw ValidationError("element set is not closed under composition");
  return {degree, std::move(elements), std::move(gens)};
}

bool PermutationGroup::contains(const Permutation& p) const {
  return p.degree() == degree_ && std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermutationGroup::same_group(const PermutationGroup& other) const {
  return degree_ == other.degree_ && elements_ == other.elements_;
}

bool PermutationGroup::subgroup_of(const PermutationGroup& other) const {
  if (degree_ != other.degree_ || order() > other.order()) return false;
  for (const Permutation& e : elements_)
    if (!other.contains(e)) return false;
  return true;
}

PermutationGroup aut_bruteforce(const HermitianMatrix& r, double tol) {
  const int m = r.dim();
  require(m <= kBruteforceMaxDegree, "exhaustive automorphism search is capped at degree 8");
  const double scale = r.frobenius_norm();
  std::vector<Permutation> found;
  std::vector<int> img(m);
  std::iota(img.begin(), img.end(), 0);
  do {
    double s = 0.0;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) s += std::norm(r(img[a], img[b]) - r(a, b));
    if (std::sqrt(s) <= tol * scale) found.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return PermutationGroup::from_elements(m, std::move(found));
}

ComplexMatrix reynolds_project(const PermutationGroup& group, const ComplexMatrix& x) {
  const int m = group.degree();
  require(x.rows() == m && x.cols() == m, "projection argument must match the group degree");
  ComplexMatrix out(m, m);
  for (const Permutation& g : group.elements())
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) out(a, b) += x(g(a), g(b));
  out *= cplx(1.0 / static_cast<double>(group.order()), 0.0);
  return out;
}

bool in_commutant(const PermutationGroup& group, const ComplexMatrix& x, double tol) {
  const int m = group.degree();
  require(x.rows() == m && x.cols() == m, "commutant argument must match the group degree");
  const double scale = std::max(1.0, x.frobenius_norm());
  auto commutes = [&](const Permutation& g) {
    const Permutation ginv = g.inverse();
    double s = 0.0;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) s += std::norm(x(g(i), j) - x(i, ginv(j)));
    return std::sqrt(s) <= tol * scale;
  };
  const auto& gens = group.generators();
  if (gens.empty()) return true;
  for (const Permutation& g : gens)
    if (!commutes(g)) return false;
  return true;
}

namespace {

class UnionFind {
public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<int> parent_;
};

}  // namespace

OrbitPairPartition orbit_pairs(const PermutationGroup& group, PairMode mode) {
  const int m = group.degree();
  UnionFind uf(m * m);
  for (const Permutation& g : group.generators())
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) uf.unite(i * m + j, g(i) * m + g(j));
  if (mode == PairMode::TransposeMerged)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) uf.unite(i * m + j, j * m + i);
  OrbitPairPartition part;
  part.degree = m;
  part.block.assign(static_cast<std::size_t>(m) * m, -1);
  std::vector<int> root_to_block(m * m, -1);
  for (int k = 0; k < m * m; ++k) {
    const int root = uf.find(k);
    if (root_to_block[root] < 0) root_to_block[root] = part.block_count++;
    part.block[k] = root_to_block[root];
  }
  return part;
}

PermutationGroup max_orbit_preserving_group(const OrbitPairPartition& partition) {
  const int m = partition.degree;
  require(m >= 1 && m <= kBruteforceMaxDegree,
          "exhaustive orbit-preservation search is capped at degree 8");
  require(partition.block.size() == static_cast<std::size_t>(m) * m,
          "partition block table has the wrong size");
  std::vector<Permutation> found;
  std::vector<int> img(m);
  std::iota(img.begin(), img.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      for (int j = 0; j < m; ++j)
        if (partition.block_of(img[i], img[j]) != partition.block_of(i, j)) {
          ok = false;
          break;
        }
    if (ok) found.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return PermutationGroup::from_elements(m, std::move(found));
}

GroupClassification classify_identifiability(const PermutationGroup& gstar, PairMode mode) {
  PermutationGroup hmax = max_orbit_preserving_group(orbit_pairs(gstar, mode));
  const bool identifiable = hmax.order() == gstar.order();
  return {identifiable, std::move(hmax)};
}

}  // namespace groupsel
