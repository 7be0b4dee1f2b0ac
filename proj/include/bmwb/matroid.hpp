#pragma once

#include "bmwb/geometry.hpp"

#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace bmwb {

/// A basis: sorted element ids, size rank(M).
struct Basis {
  std::vector<ElementId> elements;

  bool contains(ElementId e) const;

  friend bool operator==(const Basis& a, const Basis& b) {
    return a.elements == b.elements;
  }
  friend bool operator!=(const Basis& a, const Basis& b) { return !(a == b); }
  friend bool operator<(const Basis& a, const Basis& b) {
    return a.elements < b.elements;
  }
};

/// A circuit: minimal dependent set, sorted element ids.
struct Circuit {
  std::vector<ElementId> elements;
};

// Independence-oracle interface. Instances are immutable after construction
// and all queries are read-only, so concurrent use is safe. Queries take a
// sorted, duplicate-free element list.
class Matroid {
 public:
  virtual ~Matroid() = default;

  virtual int ground_size() const = 0;
  virtual int rank() const = 0;
  virtual bool is_independent(std::span<const ElementId> set) const = 0;

  // Unique circuit contained in b + f, for f outside the basis b. The
  // generic route removes basis elements one at a time while the set stays
  // dependent; kinds override when a faster route exists. Each internal
  // oracle query is added to *tests when given.
  virtual Circuit fundamental_circuit(const Basis& b, ElementId f,
                                      long long* tests = nullptr) const;

 protected:
  void check_ids(std::span<const ElementId> set) const;
};

using MatroidPtr = std::shared_ptr<const Matroid>;

/// Graphic matroid of a connected graph; bases are spanning trees.
/// Disconnected input is rejected.
class GraphicMatroid final : public Matroid {
 public:
  GraphicMatroid(int vertex_count, std::vector<std::pair<int, int>> edges);

  int ground_size() const override { return static_cast<int>(edges_.size()); }
  int rank() const override { return vertex_count_ - 1; }
  bool is_independent(std::span<const ElementId> set) const override;
  Circuit fundamental_circuit(const Basis& b, ElementId f,
                              long long* tests = nullptr) const override;

  int vertex_count() const { return vertex_count_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int vertex_count_;
  std::vector<std::pair<int, int>> edges_;
};

/// Uniform matroid U(m, r): independent iff at most r elements.
class UniformMatroid final : public Matroid {
 public:
  UniformMatroid(int ground_size, int rank_bound);

  int ground_size() const override { return m_; }
  int rank() const override { return r_; }
  bool is_independent(std::span<const ElementId> set) const override;
  Circuit fundamental_circuit(const Basis& b, ElementId f,
                              long long* tests = nullptr) const override;

 private:
  int m_;
  int r_;
};

/// Partition matroid: per-block capacities on a partition of the ground set.
class PartitionMatroid final : public Matroid {
 public:
  PartitionMatroid(std::vector<int> block_of_element, std::vector<int> capacities);

  int ground_size() const override { return static_cast<int>(block_of_.size()); }
  int rank() const override { return rank_; }
  bool is_independent(std::span<const ElementId> set) const override;
  Circuit fundamental_circuit(const Basis& b, ElementId f,
                              long long* tests = nullptr) const override;

 private:
  std::vector<int> block_of_;
  std::vector<int> capacities_;
  std::vector<int> block_sizes_;
  int rank_;
};

// Restriction/contraction view over a base instance. Ground ids are the base
// instance's ids; sets touching deleted or contracted elements are not
// independent in the view. Composing views flattens into a single layer.
class MinorView final : public Matroid {
 public:
  MinorView(MatroidPtr base, std::vector<ElementId> deleted,
            std::vector<ElementId> contracted);

  int ground_size() const override { return base_->ground_size(); }
  int rank() const override { return rank_; }
  bool is_independent(std::span<const ElementId> set) const override;

  const MatroidPtr& base() const { return base_; }
  const std::vector<ElementId>& deleted() const { return deleted_; }
  const std::vector<ElementId>& contracted() const { return contracted_; }

 private:
  bool is_removed(ElementId e) const;

  MatroidPtr base_;
  std::vector<ElementId> deleted_;     // sorted
  std::vector<ElementId> contracted_;  // sorted, independent in base
  int rank_;
};

/// Builds the view M \ delete / contract; requires the contract set to be
/// independent and disjoint from the delete set.
MatroidPtr restrict_contract(MatroidPtr instance, std::vector<ElementId> deleted,
                             std::vector<ElementId> contracted);

inline constexpr long long kDefaultEnumerationCap = 1'000'000;

/// Reads BMWB_ENUM_CAP if set, otherwise the default cap.
long long enumeration_cap();

/// All bases in lexicographic order. Throws ResourceError when the number of
/// candidate sets C(m, rank) exceeds the cap.
std::vector<Basis> enumerate_bases(const Matroid& instance,
                                   long long cap = enumeration_cap());

/// Objective image of a basis.
Point2 image_of(const Basis& b, const BiCost& costs);

}  // namespace bmwb
