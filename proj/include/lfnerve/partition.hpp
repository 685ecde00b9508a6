#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

namespace lfnerve {

/// Items split into connected components of a "witness exists" graph.
/// classes[k] lists item indices in increasing order; its first entry is the
/// canonical representative. Classes are ordered by representative.
template <class Item, class Witness>
struct ClassPartition {
  struct Edge {
    std::size_t from, to;
    Witness witness;
  };

  std::vector<Item> items;
  std::vector<std::vector<std::size_t>> classes;
  /// Spanning edges that joined two classes, each with its witness.
  std::vector<Edge> witnesses;

  std::size_t num_classes() const { return classes.size(); }

  std::size_t class_of(std::size_t item) const {
    for (std::size_t k = 0; k < classes.size(); ++k)
      if (std::binary_search(classes[k].begin(), classes[k].end(), item)) return k;
    return classes.size();
  }
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  std::vector<std::vector<std::size_t>> groups() {
    std::vector<std::vector<std::size_t>> by_root(parent_.size());
    for (std::size_t i = 0; i < parent_.size(); ++i) by_root[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& g : by_root)
      if (!g.empty()) out.push_back(std::move(g));
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<std::size_t> parent_;
};

/// Builds the partition generated by `connect(x, y)`, which returns an
/// optional witness for a link from item x to item y. Pairs already in one
/// class are skipped, so `connect` is called at most once per ordered pair.
template <class Item, class Connect>
auto partition_by(std::vector<Item> items, Connect connect) {
  using Opt = decltype(connect(items[0], items[0]));
  using Witness = typename Opt::value_type;
  ClassPartition<Item, Witness> out;
  UnionFind uf(items.size());
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = 0; j < items.size(); ++j) {
      if (i == j || uf.find(i) == uf.find(j)) continue;
      if (auto w = connect(items[i], items[j])) {
        uf.unite(i, j);
        out.witnesses.push_back({i, j, std::move(*w)});
      }
    }
  out.items = std::move(items);
  out.classes = uf.groups();
  return out;
}

}  // namespace lfnerve
