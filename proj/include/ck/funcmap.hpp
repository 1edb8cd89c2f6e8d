#pragma once

#include <functional>
#include <string>
#include <vector>

namespace ck {

// A map f: {1,...,n} -> {1,...,n}, stored as its full image array so that
// f(i) is a direct lookup.
class EndoMap {
 public:
  explicit EndoMap(std::vector<int> images);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const;  // 1-based
  const std::vector<int>& images() const { return images_; }
  bool fixes_n() const { return images_.back() == n(); }

  std::string str() const;  // comma-separated images, e.g. "3,1,3"

  friend bool operator==(const EndoMap& a, const EndoMap& b) {
    return a.images_ == b.images_;
  }

 private:
  std::vector<int> images_;
};

// Rooted labeled tree on {1,...,n} with root n; parents[i-1] is the parent
// of vertex i for i < n. Construction validates the tree invariant.
class RootedTree {
 public:
  RootedTree(int n, std::vector<int> parents);

  int n() const { return n_; }
  int parent(int i) const;  // 1 <= i <= n-1
  const std::vector<int>& parents() const { return parents_; }

  // Do the undirected edges {i, parents[i-1]} form a tree on n vertices?
  static bool is_valid(int n, const std::vector<int>& parents);

  friend bool operator==(const RootedTree& a, const RootedTree& b) {
    return a.n_ == b.n_ && a.parents_ == b.parents_;
  }

 private:
  int n_;
  std::vector<int> parents_;
};

// f^steps(start) by repeated application.
int iterate(const EndoMap& f, int start, int steps);

// Does every element reach n under iteration? Equivalent to checking
// f^(n-1)(i) = n for all i, so each start walks at most n-1 steps.
// Requires f(n) = n.
bool is_n_potent(const EndoMap& f);

int preimage_count_of_n(const EndoMap& f);

// Every map with f(n) = n, in lexicographic order of the images array.
void for_each_n_fixing(int n, const std::function<void(const EndoMap&)>& fn);

// All n-potent maps in lexicographic order of the images array. There are
// n^(n-2) of them for n >= 2 (one for n = 1).
std::vector<EndoMap> enumerate_n_potent(int n);

// Mutually inverse bijection between n-potent maps and trees rooted at n.
RootedTree map_to_tree(const EndoMap& f);
EndoMap tree_to_map(const RootedTree& t);

}  // namespace ck
