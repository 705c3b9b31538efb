// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Matroids over a dense groundset {0, ..., n-1}, queried through a counting
// membership oracle.
//
// Four classes are supported:
//   uniform      independent iff |S| <= D
//   graphic      edge set is acyclic (union-find)
//   linear       integer vectors are linearly independent over the rationals
//                (fraction-free elimination, exact)
//   transversal  left vertices admit a matching into the right side
//                (augmenting paths)
//
// Every call to Matroid::is_independent or Session::can_add counts as one
// oracle call. Construction-time work (rank computation, loop detection) and
// Session::add are not counted.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "maub/types.hpp"
#include "maub/union_find.hpp"

namespace maub {

enum class MatroidKind { uniform, graphic, linear, transversal };

inline const char* to_string(MatroidKind k) {
  switch (k) {
    case MatroidKind::uniform: return "uniform";
    case MatroidKind::graphic: return "graphic";
    case MatroidKind::linear: return "linear";
    case MatroidKind::transversal: return "transversal";
  }
  return "?";
}

namespace detail {

struct UniformData {};

struct GraphicData {
  std::size_t vertices = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

struct LinearData {
  std::size_t dimension = 0;
  std::vector<std::vector<std::int64_t>> vectors;
};

struct TransversalData {
  std::size_t right_size = 0;
  std::vector<std::vector<std::uint32_t>> adjacency;  // left vertex -> right
};

/// Rows in echelon form over the integers. Each new row is reduced against
/// the earlier ones in insertion order, so row k is zero at the pivots of
/// rows 0..k-1.
class IntegerEchelon {
 public:
  void clear() { rows_.clear(); }

  /// Reduces v against the stored rows. Returns false if v is in their span.
  bool reduce(std::vector<std::int64_t>& v) const {
    for (const Row& r : rows_) {
      const std::int64_t a = r.coeffs[r.pivot];
      const std::int64_t b = v[r.pivot];
      if (b == 0) continue;
      // v <- a*v - b*r, then strip the content.
      std::vector<__int128> tmp(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) {
        tmp[i] = static_cast<__int128>(a) * v[i] -
                 static_cast<__int128>(b) * r.coeffs[i];
      }
      normalize(tmp, v);
    }
    return std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
  }

  /// Appends an already reduced, non-zero row.
  void push_reduced(std::vector<std::int64_t> v) {
    std::size_t pivot = 0;
    while (v[pivot] == 0) ++pivot;
    rows_.push_back(Row{std::move(v), pivot});
  }

  std::size_t size() const { return rows_.size(); }

 private:
  struct Row {
    std::vector<std::int64_t> coeffs;
    std::size_t pivot;
  };

  static void normalize(const std::vector<__int128>& in,
                        std::vector<std::int64_t>& out) {
    __int128 g = 0;
    for (__int128 x : in) {
      __int128 y = x < 0 ? -x : x;
      while (y != 0) {
        __int128 t = g % y;
        g = y;
        y = t;
      }
    }
    constexpr __int128 lim = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i = 0; i < in.size(); ++i) {
      const __int128 q = g == 0 ? 0 : in[i] / g;
      if (q > lim || q < -lim) {
        throw std::overflow_error("integer elimination overflow");
      }
      out[i] = static_cast<std::int64_t>(q);
    }
  }

  std::vector<Row> rows_;
};

}  // namespace detail

class Matroid {
 public:
  class Session;

  static Matroid uniform(std::size_t rank, std::size_t n) {
    if (n == 0) throw ConstructionError("uniform matroid needs |E| >= 1");
    if (rank == 0 || rank > n) {
      throw ConstructionError("uniform matroid needs 1 <= D <= |E|");
    }
    return Matroid(MatroidKind::uniform, n, rank, detail::UniformData{});
  }

  /// Graphic matroid of a connected multigraph on vertices 0..vertices-1.
  static Matroid graphic(
      std::size_t vertices,
      std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
    if (edges.empty()) throw ConstructionError("graphic matroid has no edges");
    UnionFind uf(vertices);
    std::size_t merged = 0;
    for (auto [u, v] : edges) {
      if (u >= vertices || v >= vertices) {
        throw ConstructionError("edge endpoint out of range");
      }
      if (u == v) throw ConstructionError("self-loop edge (matroid loop)");
      if (uf.unite(u, v)) ++merged;
    }
    if (merged + 1 != vertices) {
      throw ConstructionError("graph is disconnected");
    }
    const std::size_t n = edges.size();
    return Matroid(MatroidKind::graphic, n, vertices - 1,
                   detail::GraphicData{vertices, std::move(edges)});
  }

  /// K_N with edges (i, j), i < j, in lexicographic order.
  static Matroid complete_graph(std::size_t vertices) {
    if (vertices < 2) throw ConstructionError("K_N needs N >= 2");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i < vertices; ++i) {
      for (std::uint32_t j = i + 1; j < vertices; ++j) edges.emplace_back(i, j);
    }
    return graphic(vertices, std::move(edges));
  }

  /// Linear matroid of the given 0/1 characteristic vectors.
  static Matroid linear(std::vector<std::vector<std::int64_t>> vectors) {
    if (vectors.empty()) throw ConstructionError("linear matroid has no vectors");
    const std::size_t dim = vectors.front().size();
    if (dim == 0) throw ConstructionError("zero-dimensional vectors");
    detail::IntegerEchelon echelon;
    for (const auto& v : vectors) {
      if (v.size() != dim) throw ConstructionError("ragged vector matrix");
      bool nonzero = false;
      for (std::int64_t x : v) {
        if (x != 0 && x != 1) {
          throw ConstructionError("characteristic vectors must be 0/1");
        }
        nonzero |= x != 0;
      }
      if (!nonzero) throw ConstructionError("zero vector (matroid loop)");
      auto r = v;
      if (echelon.reduce(r)) echelon.push_reduced(std::move(r));
    }
    const std::size_t n = vectors.size();
    const std::size_t rank = echelon.size();
    return Matroid(MatroidKind::linear, n, rank,
                   detail::LinearData{dim, std::move(vectors)});
  }

  /// Transversal matroid on the left side of a bipartite graph.
  static Matroid transversal(
      std::size_t left, std::size_t right,
      const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
    if (left == 0 || right == 0) {
      throw ConstructionError("transversal matroid needs non-empty sides");
    }
    detail::TransversalData data{right, std::vector<std::vector<std::uint32_t>>(left)};
    for (auto [x, y] : edges) {
      if (x >= left || y >= right) {
        throw ConstructionError("bipartite edge out of range");
      }
      auto& adj = data.adjacency[x];
      if (std::find(adj.begin(), adj.end(), y) == adj.end()) adj.push_back(y);
    }
    for (auto& adj : data.adjacency) {
      if (adj.empty()) throw ConstructionError("isolated left vertex (matroid loop)");
      std::sort(adj.begin(), adj.end());
    }
    Matroid m(MatroidKind::transversal, left, 0, std::move(data));
    m.rank_ = m.greedy_rank_uncounted();
    return m;
  }

  std::size_t size() const { return size_; }
  std::size_t rank() const { return rank_; }
  MatroidKind kind() const { return kind_; }

  /// Membership oracle. One counted call.
  bool is_independent(std::span<const ElementId> s) const {
    validate_set(s);
    ++oracle_calls_;
    return independent_uncounted(s);
  }

  /// Membership test that is not charged to the oracle counter. Used for
  /// argument validation and test-side shadow checks.
  bool is_independent_uncounted(std::span<const ElementId> s) const {
    validate_set(s);
    return independent_uncounted(s);
  }

  bool is_basis_uncounted(std::span<const ElementId> s) const {
    return s.size() == rank_ && is_independent_uncounted(s);
  }

  std::uint64_t oracle_calls() const { return oracle_calls_; }
  void reset_oracle_calls() { oracle_calls_ = 0; }

  /// Starts an empty incremental independent set.
  Session session() const;

  const detail::GraphicData* graphic_data() const {
    return std::get_if<detail::GraphicData>(&data_);
  }
  const detail::LinearData* linear_data() const {
    return std::get_if<detail::LinearData>(&data_);
  }
  const detail::TransversalData* transversal_data() const {
    return std::get_if<detail::TransversalData>(&data_);
  }

  void validate_element(ElementId e) const {
    if (e >= size_) {
      throw InvalidInput("element id " + std::to_string(e) +
                         " out of range for |E|=" + std::to_string(size_));
    }
  }

  void validate_set(std::span<const ElementId> s) const {
    for (ElementId e : s) validate_element(e);
    if (!std::is_sorted(s.begin(), s.end())) {
      ElementSet copy(s.begin(), s.end());
      std::sort(copy.begin(), copy.end());
      if (std::adjacent_find(copy.begin(), copy.end()) != copy.end()) {
        throw InvalidInput("duplicate element in set");
      }
    } else if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw InvalidInput("duplicate element in set");
    }
  }

 private:
  using Data = std::variant<detail::UniformData, detail::GraphicData,
                            detail::LinearData, detail::TransversalData>;

  Matroid(MatroidKind kind, std::size_t n, std::size_t rank, Data data)
      : kind_(kind), size_(n), rank_(rank), data_(std::move(data)) {}

  bool independent_uncounted(std::span<const ElementId> s) const;
  std::size_t greedy_rank_uncounted() const;

  MatroidKind kind_;
  std::size_t size_;
  std::size_t rank_;
  Data data_;
  mutable std::uint64_t oracle_calls_ = 0;
};

/// An independent set grown one element at a time, with the incremental
/// state each class needs: a live union-find (graphic), an echelon form
/// (linear) or a stored matching (transversal).
///
/// can_add(e) is one counted oracle call and answers exactly what
/// is_independent(members + e) would.
class Matroid::Session {
 public:
  explicit Session(const Matroid& m) : m_(&m) { clear(); }

  void clear() {
    members_.clear();
    pending_ = kNone;
    switch (m_->kind_) {
      case MatroidKind::uniform:
        break;
      case MatroidKind::graphic:
        uf_.reset(m_->graphic_data()->vertices);
        break;
      case MatroidKind::linear:
        echelon_.clear();
        break;
      case MatroidKind::transversal:
        match_left_.assign(m_->size_, kNone);
        match_right_.assign(m_->transversal_data()->right_size, kNone);
        break;
    }
  }

  /// Counted oracle call: is members + e independent?
  bool can_add(ElementId e) {
    m_->validate_element(e);
    if (std::find(members_.begin(), members_.end(), e) != members_.end()) {
      throw InvalidInput("element already in the independent set");
    }
    ++m_->oracle_calls_;
    return probe(e);
  }

  /// Adds e, which must keep the set independent. Not counted.
  void add(ElementId e) {
    m_->validate_element(e);
    if (!try_add(e)) throw InvalidInput("adding element breaks independence");
  }

  /// Uncounted: adds e if the result is independent.
  bool try_add(ElementId e) {
    if (std::find(members_.begin(), members_.end(), e) != members_.end()) {
      throw InvalidInput("element already in the independent set");
    }
    switch (m_->kind_) {
      case MatroidKind::uniform:
        if (members_.size() >= m_->rank_) return false;
        break;
      case MatroidKind::graphic: {
        auto [u, v] = m_->graphic_data()->edges[e];
        if (!uf_.unite(u, v)) return false;
        break;
      }
      case MatroidKind::linear: {
        auto v = m_->linear_data()->vectors[e];
        if (!echelon_.reduce(v)) return false;
        echelon_.push_reduced(std::move(v));
        break;
      }
      case MatroidKind::transversal:
        if (pending_ == e) {
          std::swap(match_left_, pending_left_);
          std::swap(match_right_, pending_right_);
        } else {
          pending_left_ = match_left_;
          pending_right_ = match_right_;
          if (!augment(e)) return false;
          std::swap(match_left_, pending_left_);
          std::swap(match_right_, pending_right_);
        }
        pending_ = kNone;
        break;
    }
    members_.push_back(e);
    return true;
  }

  std::size_t size() const { return members_.size(); }

  /// Members in insertion order.
  const std::vector<ElementId>& members() const { return members_; }

  ElementSet sorted_members() const {
    ElementSet out = members_;
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  bool probe(ElementId e) {
    switch (m_->kind_) {
      case MatroidKind::uniform:
        return members_.size() + 1 <= m_->rank_;
      case MatroidKind::graphic: {
        auto [u, v] = m_->graphic_data()->edges[e];
        return !uf_.connected(u, v);
      }
      case MatroidKind::linear: {
        auto v = m_->linear_data()->vectors[e];
        return echelon_.reduce(v);
      }
      case MatroidKind::transversal: {
        // Search on a scratch copy; a later add(e) reuses the result.
        pending_left_ = match_left_;
        pending_right_ = match_right_;
        const bool ok = augment(e);
        pending_ = ok ? e : kNone;
        return ok;
      }
    }
    return false;
  }

  // One augmenting-path search from left vertex x over the pending matching.
  bool augment(ElementId x) {
    const auto& adj = m_->transversal_data()->adjacency;
    visited_.assign(match_right_.size(), 0);
    // Iterative DFS; stack holds (left vertex, next adjacency slot).
    std::vector<std::pair<std::uint32_t, std::size_t>> stack{{x, 0}};
    std::vector<std::uint32_t> via;  // right vertex used to reach stack[i+1]
    while (!stack.empty()) {
      auto& [u, slot] = stack.back();
      if (slot == adj[u].size()) {
        stack.pop_back();
        if (!via.empty()) via.pop_back();
        continue;
      }
      const std::uint32_t y = adj[u][slot++];
      if (visited_[y]) continue;
      visited_[y] = 1;
      if (pending_right_[y] == kNone) {
        // Flip the path.
        via.push_back(y);
        for (std::size_t i = 0; i < stack.size(); ++i) {
          const std::uint32_t left = stack[i].first;
          const std::uint32_t right = via[i];
          pending_left_[left] = right;
          pending_right_[right] = left;
        }
        return true;
      }
      via.push_back(y);
      stack.emplace_back(pending_right_[y], 0);
    }
    return false;
  }

  const Matroid* m_;
  std::vector<ElementId> members_;
  UnionFind uf_;
  detail::IntegerEchelon echelon_;
  std::vector<std::uint32_t> match_left_, match_right_;
  std::vector<std::uint32_t> pending_left_, pending_right_;
  std::vector<std::uint8_t> visited_;
  ElementId pending_ = kNone;
};

inline Matroid::Session Matroid::session() const { return Session(*this); }

inline std::size_t Matroid::greedy_rank_uncounted() const {
  Session s(*this);
  for (ElementId x = 0; x < size_; ++x) s.try_add(x);
  return s.size();
}

inline bool Matroid::independent_uncounted(std::span<const ElementId> s) const {
  if (s.size() > rank_) return false;
  if (kind_ == MatroidKind::uniform) return true;
  Session session(*this);
  for (ElementId e : s) {
    if (!session.try_add(e)) return false;
  }
  return true;
}

/// is_independent(base_set + e) for an independent base_set, as a single
/// counted oracle call.
inline bool extends_independent(const Matroid& m,
                                std::span<const ElementId> base_set,
                                ElementId e) {
  m.validate_set(base_set);
  m.validate_element(e);
  if (std::find(base_set.begin(), base_set.end(), e) != base_set.end()) {
    throw InvalidInput("extends_independent: element already in base set");
  }
  auto session = m.session();
  for (ElementId x : base_set) session.add(x);
  return session.can_add(e);
}

/// Elements sorted by decreasing weight, ties by ascending id.
inline std::vector<ElementId> decreasing_order(const WeightVector& w) {
  std::vector<ElementId> order(w.size());
  std::iota(order.begin(), order.end(), ElementId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](ElementId a, ElementId b) { return w[a] > w[b]; });
  return order;
}

/// Max-weight basis. Scans elements by decreasing weight and stops as soon
/// as rank-many elements have been accepted, so at most |E| and at least D
/// oracle calls are made.
inline Basis greedy(const Matroid& m, const WeightVector& w) {
  validate_weights(w, m.size());
  auto session = m.session();
  for (ElementId e : decreasing_order(w)) {
    if (session.size() == m.rank()) break;
    if (session.can_add(e)) session.add(e);
  }
  return session.sorted_members();
}

/// Saturating binomial coefficient.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
  }
  if (r >= static_cast<long double>(std::numeric_limits<std::uint64_t>::max())) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r + 0.5L);
}

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Anything with size(), rank() and a const is_independent over a span of
/// element ids.
template <class T>
concept IndependenceOracle = requires(const T& o, std::span<const ElementId> s) {
  { o.size() } -> std::convertible_to<std::size_t>;
  { o.rank() } -> std::convertible_to<std::size_t>;
  { o.is_independent(s) } -> std::convertible_to<bool>;
};

/// All bases in lexicographic order, by testing every D-subset.
template <IndependenceOracle Oracle>
std::vector<Basis> enumerate_bases(const Oracle& m,
                                   std::uint64_t cap = kDefaultEnumerationCap) {
  const std::size_t n = m.size();
  const std::size_t d = m.rank();
  if (binomial(n, d) > cap) {
    throw ResourceLimit("binomial(" + std::to_string(n) + ", " +
                        std::to_string(d) + ") exceeds enumeration cap " +
                        std::to_string(cap));
  }
  std::vector<Basis> out;
  Basis cur(d);
  std::iota(cur.begin(), cur.end(), ElementId{0});
  while (true) {
    if (m.is_independent(std::span<const ElementId>(cur))) out.push_back(cur);
    // Next combination.
    std::size_t i = d;
    while (i > 0 && cur[i - 1] == n - d + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < d; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace maub
