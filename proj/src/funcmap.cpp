#include "ck/funcmap.hpp"

#include <numeric>
#include <stdexcept>

#include "ck/bounds.hpp"

namespace ck {

// ------------------------------------------------------------------ EndoMap

EndoMap::EndoMap(std::vector<int> images) : images_(std::move(images)) {
  const int size = n();
  if (size < 1) throw std::invalid_argument("map: n must be positive");
  for (int v : images_) {
    if (v < 1 || v > size) {
      throw std::invalid_argument("map: image out of {1,...,n}");
    }
  }
}

int EndoMap::operator()(int i) const {
  if (i < 1 || i > n()) throw std::out_of_range("map: argument out of range");
  return images_[i - 1];
}

std::string EndoMap::str() const {
  std::string out;
  for (int i = 0; i < n(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(images_[i]);
  }
  return out;
}

// --------------------------------------------------------------- RootedTree

namespace {

// Union-find over {1,...,n}; n-1 edges with no cycle means a tree.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n + 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
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

}  // namespace

RootedTree::RootedTree(int n, std::vector<int> parents)
    : n_(n), parents_(std::move(parents)) {
  if (!is_valid(n_, parents_)) {
    throw std::invalid_argument("rooted tree: parent array is not a tree");
  }
}

int RootedTree::parent(int i) const {
  if (i < 1 || i >= n_) throw std::out_of_range("rooted tree: vertex");
  return parents_[i - 1];
}

bool RootedTree::is_valid(int n, const std::vector<int>& parents) {
  if (n < 1 || static_cast<int>(parents.size()) != n - 1) return false;
  DisjointSets components(n);
  for (int i = 1; i < n; ++i) {
    const int p = parents[i - 1];
    if (p < 1 || p > n) return false;
    if (!components.unite(i, p)) return false;  // cycle (or self-loop)
  }
  return true;  // n-1 acyclic edges on n vertices are connected
}

// --------------------------------------------------------------- operations

int iterate(const EndoMap& f, int start, int steps) {
  if (start < 1 || start > f.n()) {
    throw std::out_of_range("iterate: start vertex out of range");
  }
  if (steps < 0) throw std::invalid_argument("iterate: negative step count");
  int v = start;
  for (int k = 0; k < steps; ++k) v = f(v);
  return v;
}

bool is_n_potent(const EndoMap& f) {
  const int n = f.n();
  if (!f.fixes_n()) {
    throw std::invalid_argument("is_n_potent: map does not fix n");
  }
  for (int i = 1; i <= n; ++i) {
    int v = i;
    for (int k = 0; k < n - 1 && v != n; ++k) v = f(v);
    if (v != n) return false;
  }
  return true;
}

int preimage_count_of_n(const EndoMap& f) {
  int count = 0;
  for (int i = 1; i <= f.n(); ++i) {
    if (f(i) == f.n()) ++count;
  }
  return count;
}

void for_each_n_fixing(int n, const std::function<void(const EndoMap&)>& fn) {
  if (n < 1) throw std::invalid_argument("enumeration: n must be positive");
  if (n > bounds::max_n()) {
    throw std::invalid_argument("enumeration: n exceeds the bound (" +
                                std::to_string(bounds::max_n()) + ")");
  }
  std::vector<int> images(n, 1);
  images[n - 1] = n;
  for (;;) {
    fn(EndoMap(images));
    // Odometer over the first n-1 positions, most significant first.
    int pos = n - 2;
    while (pos >= 0 && images[pos] == n) {
      images[pos] = 1;
      --pos;
    }
    if (pos < 0) return;
    ++images[pos];
  }
}

std::vector<EndoMap> enumerate_n_potent(int n) {
  std::vector<EndoMap> result;
  for_each_n_fixing(n, [&](const EndoMap& f) {
    if (is_n_potent(f)) result.push_back(f);
  });
  return result;
}

RootedTree map_to_tree(const EndoMap& f) {
  if (!f.fixes_n() || !is_n_potent(f)) {
    throw std::invalid_argument(
        "map_to_tree: map is not n-potent (its edges contain a cycle "
        "avoiding n)");
  }
  std::vector<int> parents(f.images().begin(), f.images().end() - 1);
  return RootedTree(f.n(), std::move(parents));
}

EndoMap tree_to_map(const RootedTree& t) {
  std::vector<int> images = t.parents();
  images.push_back(t.n());
  return EndoMap(std::move(images));
}

}  // namespace ck
