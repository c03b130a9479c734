#include "unigraph/canon.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <stdexcept>

namespace unigraph {
namespace {

using Rows = std::array<VertexSet, kMaxVertices>;

// Ordered partition: cell_of[v] is the index of v's cell, cells are ordered.
struct Partition {
  std::array<std::uint8_t, kMaxVertices> cell_of{};
  int cells = 0;
};

struct Signature {
  std::array<std::uint8_t, kMaxVertices + 1> data{};
  int vertex = 0;
};

// Splits cells by neighbour counts into every cell until equitable. Cell
// order is derived from the signatures only, so it is label-invariant.
void refine(int n, const Rows& rows, Partition& p) {
  std::array<Signature, kMaxVertices> sig;
  std::array<VertexSet, kMaxVertices> mask{};
  while (p.cells < n) {
    const int k = p.cells;
    mask.fill(0);
    for (int v = 0; v < n; ++v) mask[p.cell_of[v]] |= bit(v);
    for (int v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.vertex = v;
      s.data[0] = p.cell_of[v];
      for (int c = 0; c < k; ++c) s.data[c + 1] = static_cast<std::uint8_t>(popcount(rows[v] & mask[c]));
    }
    const std::size_t len = static_cast<std::size_t>(k) + 1;
    std::sort(sig.begin(), sig.begin() + n, [len](const Signature& a, const Signature& b) {
      return std::memcmp(a.data.data(), b.data.data(), len) < 0;
    });
    int cell = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && std::memcmp(sig[i - 1].data.data(), sig[i].data.data(), len) != 0) ++cell;
      p.cell_of[sig[i].vertex] = static_cast<std::uint8_t>(cell);
    }
    if (cell + 1 == k) break;
    p.cells = cell + 1;
  }
}

Partition individualize(int n, const Partition& p, int v) {
  Partition q = p;
  const int c = p.cell_of[v];
  for (int w = 0; w < n; ++w)
    if (w != v && p.cell_of[w] >= c) q.cell_of[w] = static_cast<std::uint8_t>(p.cell_of[w] + 1);
  q.cells = p.cells + 1;
  return q;
}

class Search {
public:
  Search(int n, const Rows& rows) : n_(n), rows_(rows) {}

  void run(Partition p) { visit(p); }

  const Rows& best_cert() const { return best_cert_; }
  const std::array<int, kMaxVertices>& best_labels() const { return best_labels_; }

private:
  using Map = std::array<std::uint8_t, kMaxVertices>;

  void visit(Partition p) {
    refine(n_, rows_, p);
    if (p.cells == n_) {
      leaf(p);
      return;
    }
    // First non-singleton cell.
    std::array<int, kMaxVertices> size{};
    for (int v = 0; v < n_; ++v) ++size[p.cell_of[v]];
    int target = 0;
    while (size[target] == 1) ++target;
    VertexSet members = 0;
    for (int v = 0; v < n_; ++v)
      if (p.cell_of[v] == target) members |= bit(v);

    VertexSet explored = 0;
    for_each_vertex(members, [&](int v) {
      if (twin_of_any(v, explored)) return;
      if (explored != 0 && in_orbit_of_any(v, explored)) return;
      path_.push_back(v);
      visit(individualize(n_, p, v));
      path_.pop_back();
      explored |= bit(v);
    });
  }

  bool twin_of_any(int v, VertexSet explored) const {
    bool twin = false;
    for_each_vertex(explored, [&](int u) {
      if ((rows_[u] & ~bit(v)) == (rows_[v] & ~bit(u))) twin = true;
    });
    return twin;
  }

  // Orbits of the group generated by the stored automorphisms that fix the
  // current path pointwise.
  bool in_orbit_of_any(int v, VertexSet explored) const {
    std::array<int, kMaxVertices> parent{};
    std::iota(parent.begin(), parent.begin() + n_, 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Map& a : autos_) {
      bool fixes = std::all_of(path_.begin(), path_.end(), [&](int x) { return a[x] == x; });
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) parent[find(x)] = find(a[x]);
    }
    const int root = find(v);
    bool hit = false;
    for_each_vertex(explored, [&](int u) { hit = hit || find(u) == root; });
    return hit;
  }

  void leaf(const Partition& p) {
    std::array<int, kMaxVertices> labels{};
    for (int v = 0; v < n_; ++v) labels[v] = p.cell_of[v];
    Rows cert{};
    for (int v = 0; v < n_; ++v) {
      VertexSet r = 0;
      for_each_vertex(rows_[v], [&](int w) { r |= bit(labels[w]); });
      cert[labels[v]] = r;
    }
    if (!have_best_) {
      have_best_ = true;
      best_cert_ = first_cert_ = cert;
      best_labels_ = first_labels_ = labels;
      return;
    }
    const int cmp = compare(cert, best_cert_);
    if (cmp == 0) record_auto(labels, best_labels_);
    if (compare(cert, first_cert_) == 0) record_auto(labels, first_labels_);
    if (cmp < 0) {
      best_cert_ = cert;
      best_labels_ = labels;
    }
  }

  // Equal certificates: v and the vertex at the same position in `other`
  // play the same role, so v -> other^{-1}(labels[v]) is an automorphism.
  void record_auto(const std::array<int, kMaxVertices>& labels,
                   const std::array<int, kMaxVertices>& other) {
    std::array<int, kMaxVertices> inv{};
    for (int v = 0; v < n_; ++v) inv[other[v]] = v;
    Map a{};
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      a[v] = static_cast<std::uint8_t>(inv[labels[v]]);
      identity = identity && a[v] == v;
    }
    if (!identity) autos_.push_back(a);
  }

  int compare(const Rows& a, const Rows& b) const {
    for (int i = 0; i < n_; ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  int n_;
  const Rows& rows_;
  std::vector<int> path_;
  std::vector<Map> autos_;
  bool have_best_ = false;
  Rows best_cert_{}, first_cert_{};
  std::array<int, kMaxVertices> best_labels_{}, first_labels_{};
};

CanonicalLabeling label_rows(int n, const Rows& rows, std::span<const int> colors) {
  Partition p;
  if (colors.empty()) {
    p.cells = n > 0 ? 1 : 0;
  } else {
    if (colors.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("colour vector size mismatch");
    std::vector<int> distinct(colors.begin(), colors.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v)
      p.cell_of[v] = static_cast<std::uint8_t>(
          std::lower_bound(distinct.begin(), distinct.end(), colors[v]) - distinct.begin());
    p.cells = static_cast<int>(distinct.size());
  }
  CanonicalLabeling out;
  out.key.n = static_cast<std::uint8_t>(n);
  out.labels.resize(n);
  if (n == 0) return out;
  Search search(n, rows);
  search.run(p);
  std::copy_n(search.best_cert().begin(), n, out.key.rows.begin());
  std::copy_n(search.best_labels().begin(), n, out.labels.begin());
  return out;
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors) {
  Rows rows{};
  std::copy(g.rows().begin(), g.rows().end(), rows.begin());
  return label_rows(g.order(), rows, colors);
}

CanonicalKey canonical_form(int n, std::span<const VertexSet> rows) {
  Rows r{};
  std::copy_n(rows.begin(), n, r.begin());
  return label_rows(n, r, {}).key;
}

CanonicalKey canonical_form(const Graph& g) { return g.canonical_key(); }

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  return g.canonical_key() == h.canonical_key();
}

Graph canonical_graph(const Graph& g) { return graph_from_key(g.canonical_key()); }

Graph graph_from_key(const CanonicalKey& key) {
  return Graph::from_rows(key.n, std::span(key.rows.data(), key.n));
}

}  // namespace unigraph
