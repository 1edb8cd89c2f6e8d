#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ck/funcmap.hpp"
#include "ck/matrix.hpp"

namespace ck {

// Digraph on {1,...,n} with ring-valued edge weights W(i,j); self-weights
// are allowed and enter the out-strengths like any other entry.
class WeightedDigraph {
 public:
  explicit WeightedDigraph(Matrix weights);

  int n() const { return weights_.rows(); }
  const Matrix& weights() const { return weights_; }
  const RingValue& weight(int i, int j) const { return weights_.at(i, j); }

 private:
  Matrix weights_;
};

// Row sum d+(i) of the weight matrix.
RingValue out_strength(const WeightedDigraph& g, int i);

// The (n-1)x(n-1) matrix with entries delta(i,j) d+(i) - W(i,j); row and
// column n are deleted (the root is fixed at n).
Matrix build_laplacian(const WeightedDigraph& g);

// det of the Laplacian: the weighted count of spanning arborescences
// rooted at n. Uses chio_det over integral domains, the Leibniz oracle
// otherwise.
RingValue count_arborescences(const WeightedDigraph& g);

// Independent oracle: the sum over all n-potent maps f of the products
// W(1,f(1)) ... W(n-1,f(n-1)).
RingValue brute_arborescence_sum(const WeightedDigraph& g);

// Every arborescence rooted at n with nonzero weight, as (tree, weight),
// in enumeration order of the underlying maps.
std::vector<std::pair<RootedTree, RingValue>> enumerate_arborescences(
    const WeightedDigraph& g);

// Swap labels v and n (rows and columns together) so the root-n machinery
// counts arborescences rooted at v.
WeightedDigraph relabel_root(const WeightedDigraph& g, int v);

// Graph file format: optional '#' comments, a "digraph n" header, then
// "u v w" edge lines (1-based tail, head, integer weight). Duplicate (u,v)
// lines sum; absent entries are weight 0.
WeightedDigraph read_digraph(std::istream& in, const RingPtr& ring);
WeightedDigraph read_digraph_file(const std::string& path,
                                  const RingPtr& ring);

}  // namespace ck
