#include "bmwb/matroid.hpp"

#include "bmwb/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <string>

namespace bmwb {

bool Basis::contains(ElementId e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

namespace {

// Small union-find over vertex ids, fresh per query.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  // Returns false if both endpoints were already connected.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::vector<ElementId> sorted_unique(std::vector<ElementId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

}  // namespace

void Matroid::check_ids(std::span<const ElementId> set) const {
  for (ElementId e : set) {
    if (e < 0 || e >= ground_size())
      throw InputError("element id " + std::to_string(e) + " out of range");
  }
}

Circuit Matroid::fundamental_circuit(const Basis& b, ElementId f,
                                     long long* tests) const {
  if (b.contains(f)) throw InputError("fundamental_circuit: element is in the basis");
  std::vector<ElementId> current = b.elements;
  current.insert(std::lower_bound(current.begin(), current.end(), f), f);

  // Remove basis elements one at a time, keeping the set dependent; what
  // remains is the unique circuit in b + f.
  for (ElementId e : b.elements) {
    std::vector<ElementId> candidate;
    candidate.reserve(current.size() - 1);
    for (ElementId x : current) {
      if (x != e) candidate.push_back(x);
    }
    if (tests) ++*tests;
    if (!is_independent(candidate)) current = std::move(candidate);
  }
  return Circuit{std::move(current)};
}

GraphicMatroid::GraphicMatroid(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 1) throw InputError("graphic matroid needs at least one vertex");
  for (const auto& [u, v] : edges_) {
    if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_)
      throw InputError("edge endpoint out of range");
  }
  UnionFind uf(vertex_count_);
  int components = vertex_count_;
  for (const auto& [u, v] : edges_) {
    if (uf.unite(u, v)) --components;
  }
  if (components != 1)
    throw InputError("graphic matroid requires a connected graph");
}

bool GraphicMatroid::is_independent(std::span<const ElementId> set) const {
  check_ids(set);
  UnionFind uf(vertex_count_);
  for (ElementId e : set) {
    if (!uf.unite(edges_[e].first, edges_[e].second)) return false;
  }
  return true;
}

Circuit GraphicMatroid::fundamental_circuit(const Basis& b, ElementId f,
                                            long long* /*tests*/) const {
  if (b.contains(f)) throw InputError("fundamental_circuit: element is in the basis");
  check_ids(b.elements);
  check_ids(std::span<const ElementId>(&f, 1));

  // The circuit is the tree path between f's endpoints plus f itself.
  std::vector<std::vector<std::pair<int, ElementId>>> adjacency(vertex_count_);
  for (ElementId e : b.elements) {
    adjacency[edges_[e].first].push_back({edges_[e].second, e});
    adjacency[edges_[e].second].push_back({edges_[e].first, e});
  }
  const int source = edges_[f].first;
  const int target = edges_[f].second;

  std::vector<int> parent_vertex(vertex_count_, -1);
  std::vector<ElementId> parent_edge(vertex_count_, -1);
  std::queue<int> frontier;
  frontier.push(source);
  parent_vertex[source] = source;
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    if (v == target) break;
    for (const auto& [w, e] : adjacency[v]) {
      if (parent_vertex[w] == -1) {
        parent_vertex[w] = v;
        parent_edge[w] = e;
        frontier.push(w);
      }
    }
  }
  if (parent_vertex[target] == -1)
    throw InputError("fundamental_circuit: basis does not span the new edge");

  std::vector<ElementId> circuit{f};
  for (int v = target; v != source; v = parent_vertex[v]) {
    circuit.push_back(parent_edge[v]);
  }
  std::sort(circuit.begin(), circuit.end());
  return Circuit{std::move(circuit)};
}

UniformMatroid::UniformMatroid(int ground_size, int rank_bound)
    : m_(ground_size), r_(rank_bound) {
  if (m_ < 0 || r_ < 0 || r_ > m_)
    throw InputError("uniform matroid requires 0 <= rank <= m");
}

bool UniformMatroid::is_independent(std::span<const ElementId> set) const {
  check_ids(set);
  return static_cast<int>(set.size()) <= r_;
}

Circuit UniformMatroid::fundamental_circuit(const Basis& b, ElementId f,
                                            long long* /*tests*/) const {
  if (b.contains(f)) throw InputError("fundamental_circuit: element is in the basis");
  // Any r + 1 elements form a circuit, so the circuit in b + f is b + f.
  std::vector<ElementId> circuit = b.elements;
  circuit.insert(std::lower_bound(circuit.begin(), circuit.end(), f), f);
  return Circuit{std::move(circuit)};
}

PartitionMatroid::PartitionMatroid(std::vector<int> block_of_element,
                                   std::vector<int> capacities)
    : block_of_(std::move(block_of_element)), capacities_(std::move(capacities)) {
  block_sizes_.assign(capacities_.size(), 0);
  for (int block : block_of_) {
    if (block < 0 || block >= static_cast<int>(capacities_.size()))
      throw InputError("partition block index out of range");
    ++block_sizes_[block];
  }
  for (int cap : capacities_) {
    if (cap < 0) throw InputError("partition capacity must be nonnegative");
  }
  rank_ = 0;
  for (std::size_t i = 0; i < capacities_.size(); ++i) {
    rank_ += std::min(capacities_[i], block_sizes_[i]);
  }
}

bool PartitionMatroid::is_independent(std::span<const ElementId> set) const {
  check_ids(set);
  std::vector<int> counts(capacities_.size(), 0);
  for (ElementId e : set) {
    if (++counts[block_of_[e]] > capacities_[block_of_[e]]) return false;
  }
  return true;
}

Circuit PartitionMatroid::fundamental_circuit(const Basis& b, ElementId f,
                                              long long* /*tests*/) const {
  if (b.contains(f)) throw InputError("fundamental_circuit: element is in the basis");
  // The circuit is f together with the basis elements of f's block, which is
  // the only block over capacity in b + f.
  const int block = block_of_[f];
  std::vector<ElementId> circuit{f};
  for (ElementId e : b.elements) {
    if (block_of_[e] == block) circuit.push_back(e);
  }
  if (static_cast<int>(circuit.size()) <= capacities_[block])
    throw InputError("fundamental_circuit: basis does not span the element");
  std::sort(circuit.begin(), circuit.end());
  return Circuit{std::move(circuit)};
}

MinorView::MinorView(MatroidPtr base, std::vector<ElementId> deleted,
                     std::vector<ElementId> contracted)
    : base_(std::move(base)),
      deleted_(sorted_unique(std::move(deleted))),
      contracted_(sorted_unique(std::move(contracted))) {
  // Flatten a view-over-view into one layer.
  if (auto inner = std::dynamic_pointer_cast<const MinorView>(base_)) {
    std::vector<ElementId> all_deleted = deleted_;
    all_deleted.insert(all_deleted.end(), inner->deleted_.begin(), inner->deleted_.end());
    std::vector<ElementId> all_contracted = contracted_;
    all_contracted.insert(all_contracted.end(), inner->contracted_.begin(),
                          inner->contracted_.end());
    deleted_ = sorted_unique(std::move(all_deleted));
    contracted_ = sorted_unique(std::move(all_contracted));
    base_ = inner->base_;
  }

  check_ids(deleted_);
  check_ids(contracted_);
  for (ElementId e : contracted_) {
    if (std::binary_search(deleted_.begin(), deleted_.end(), e))
      throw InputError("deleted and contracted sets must be disjoint");
  }
  if (!base_->is_independent(contracted_))
    throw InputError("contracted set must be independent in the base instance");

  // Rank via a greedy scan over the remaining elements.
  std::vector<ElementId> current;
  for (ElementId e = 0; e < ground_size(); ++e) {
    if (is_removed(e)) continue;
    current.insert(std::lower_bound(current.begin(), current.end(), e), e);
    if (!is_independent(current)) {
      current.erase(std::lower_bound(current.begin(), current.end(), e));
    }
  }
  rank_ = static_cast<int>(current.size());
}

bool MinorView::is_removed(ElementId e) const {
  return std::binary_search(deleted_.begin(), deleted_.end(), e) ||
         std::binary_search(contracted_.begin(), contracted_.end(), e);
}

bool MinorView::is_independent(std::span<const ElementId> set) const {
  check_ids(set);
  for (ElementId e : set) {
    if (is_removed(e)) return false;
  }
  std::vector<ElementId> merged(set.begin(), set.end());
  merged.insert(merged.end(), contracted_.begin(), contracted_.end());
  std::sort(merged.begin(), merged.end());
  return base_->is_independent(merged);
}

MatroidPtr restrict_contract(MatroidPtr instance, std::vector<ElementId> deleted,
                             std::vector<ElementId> contracted) {
  return std::make_shared<MinorView>(std::move(instance), std::move(deleted),
                                     std::move(contracted));
}

long long enumeration_cap() {
  if (const char* env = std::getenv("BMWB_ENUM_CAP")) {
    char* end = nullptr;
    long long cap = std::strtoll(env, &end, 10);
    if (end != env && cap > 0) return cap;
  }
  return kDefaultEnumerationCap;
}

std::vector<Basis> enumerate_bases(const Matroid& instance, long long cap) {
  const int m = instance.ground_size();
  const int r = instance.rank();

  BigInt candidates = 1;  // C(m, r)
  for (int i = 1; i <= r; ++i) {
    candidates = candidates * (m - r + i) / i;
  }
  if (candidates > cap)
    throw ResourceError("basis enumeration exceeds cap of " + std::to_string(cap));

  std::vector<Basis> bases;
  if (r == 0) {
    bases.push_back(Basis{});
    return bases;
  }
  std::vector<ElementId> combo(r);
  std::iota(combo.begin(), combo.end(), 0);
  while (true) {
    if (instance.is_independent(combo)) bases.push_back(Basis{combo});
    // Next combination in lexicographic order.
    int i = r - 1;
    while (i >= 0 && combo[i] == m - r + i) --i;
    if (i < 0) break;
    ++combo[i];
    for (int j = i + 1; j < r; ++j) combo[j] = combo[j - 1] + 1;
  }
  return bases;
}

Point2 image_of(const Basis& b, const BiCost& costs) {
  Point2 image{Rational(0), Rational(0)};
  for (ElementId e : b.elements) {
    image.y1 += costs[e].c1;
    image.y2 += costs[e].c2;
  }
  return image;
}

}  // namespace bmwb
