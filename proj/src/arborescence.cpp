#include "ck/arborescence.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "ck/identities.hpp"

namespace ck {

WeightedDigraph::WeightedDigraph(Matrix weights)
    : weights_(std::move(weights)) {
  if (!weights_.is_square()) {
    throw std::invalid_argument("digraph: weight matrix must be square");
  }
  if (weights_.rows() < 1) {
    throw std::invalid_argument("digraph: need at least one vertex");
  }
}

RingValue out_strength(const WeightedDigraph& g, int i) {
  if (i < 1 || i > g.n()) {
    throw std::out_of_range("out_strength: vertex out of range");
  }
  RingValue sum = g.weights().ring()->zero();
  for (int j = 1; j <= g.n(); ++j) sum = sum + g.weight(i, j);
  return sum;
}

Matrix build_laplacian(const WeightedDigraph& g) {
  const int n = g.n();
  std::vector<RingValue> strength;
  strength.reserve(n - 1);
  for (int i = 1; i < n; ++i) strength.push_back(out_strength(g, i));
  return Matrix::build(g.weights().ring(), n - 1, n - 1, [&](int i, int j) {
    RingValue v = -g.weight(i, j);
    if (i == j) v = v + strength[i - 1];
    return v;
  });
}

RingValue count_arborescences(const WeightedDigraph& g) {
  const Matrix lap = build_laplacian(g);
  return lap.ring()->is_integral_domain() ? chio_det(lap) : leibniz_det(lap);
}

RingValue brute_arborescence_sum(const WeightedDigraph& g) {
  RingValue sum = g.weights().ring()->zero();
  for (const EndoMap& f : enumerate_n_potent(g.n())) {
    sum = sum + weight_of(f, g.weights());
  }
  return sum;
}

std::vector<std::pair<RootedTree, RingValue>> enumerate_arborescences(
    const WeightedDigraph& g) {
  std::vector<std::pair<RootedTree, RingValue>> result;
  for (const EndoMap& f : enumerate_n_potent(g.n())) {
    RingValue w = weight_of(f, g.weights());
    if (w.is_zero()) continue;
    result.emplace_back(map_to_tree(f), std::move(w));
  }
  return result;
}

WeightedDigraph relabel_root(const WeightedDigraph& g, int v) {
  const int n = g.n();
  if (v < 1 || v > n) {
    throw std::out_of_range("relabel_root: vertex out of range");
  }
  auto remap = [&](int k) { return k == v ? n : (k == n ? v : k); };
  return WeightedDigraph(
      Matrix::build(g.weights().ring(), n, n, [&](int i, int j) {
        return g.weight(remap(i), remap(j));
      }));
}

namespace {

bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

WeightedDigraph read_digraph(std::istream& in, const RingPtr& ring) {
  std::string line;
  if (!next_content_line(in, line)) {
    throw std::invalid_argument("graph file: missing header line");
  }
  std::istringstream header(line);
  std::string keyword;
  int n = 0;
  if (!(header >> keyword >> n) || keyword != "digraph" || n < 1) {
    throw std::invalid_argument("graph file: header must be 'digraph n'");
  }
  std::string trailing;
  if (header >> trailing) {
    throw std::invalid_argument("graph file: trailing tokens in header");
  }
  std::vector<std::vector<RingValue>> w(
      n, std::vector<RingValue>(n, ring->zero()));
  while (next_content_line(in, line)) {
    std::istringstream edge(line);
    int u = 0;
    int v = 0;
    std::string weight_tok;
    if (!(edge >> u >> v >> weight_tok) || (edge >> trailing)) {
      throw std::invalid_argument("graph file: bad edge line '" + line + "'");
    }
    if (u < 1 || u > n || v < 1 || v > n) {
      throw std::invalid_argument("graph file: vertex out of range in '" +
                                  line + "'");
    }
    mpz_class weight;
    if (mpz_set_str(weight.get_mpz_t(), weight_tok.c_str(), 10) != 0) {
      throw std::invalid_argument("graph file: bad weight '" + weight_tok +
                                  "'");
    }
    w[u - 1][v - 1] = w[u - 1][v - 1] + ring->from_integer(weight);
  }
  return WeightedDigraph(Matrix::build(
      ring, n, n, [&](int i, int j) { return w[i - 1][j - 1]; }));
}

WeightedDigraph read_digraph_file(const std::string& path,
                                  const RingPtr& ring) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open graph file: " + path);
  }
  return read_digraph(in, ring);
}

}  // namespace ck
