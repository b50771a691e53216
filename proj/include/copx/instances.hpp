#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "copx/rational.hpp"

namespace copx {

/// A combinatorial optimization instance: the feasible family as an explicit
/// list of distinct 0/1 incidence vectors over a labeled ground set.
struct Instance {
  int n = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<std::uint8_t>> vertices;
  std::string family;

  const std::vector<std::uint8_t>& vertex(int k) const;
  RatVec vertex_rat(int k) const;
};

/// Throws ParseError / std::invalid_argument when the instance violates its
/// invariants (labels length, binary entries, distinctness, nonempty family).
void validate_instance(const Instance& inst);

struct Graph {
  int nodes = 0;
  std::vector<std::pair<int, int>> edges;  // i < j, lexicographically sorted

  static Graph complete(int m);
  static Graph from_edges(int nodes, std::vector<std::pair<int, int>> edges);
};

Instance gen_k_subsets(int n, int k);
Instance gen_spanning_trees(const Graph& g);
Instance gen_perfect_matchings(const Graph& g);
/// Hamiltonian cycles of the complete graph on `cities` nodes (cities >= 3);
/// the ground set is the edge set of K_cities.
Instance gen_tsp_tours(int cities);
Instance gen_explicit(std::vector<std::vector<std::uint8_t>> vertices,
                      std::vector<std::string> labels = {});

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

RatVec load_weights(const std::string& path, int expect_n);
void save_weights(const RatVec& c, const std::string& path);

/// Exact inner product of a weight vector with a 0/1 vertex.
Rat dot01(const RatVec& c, const std::vector<std::uint8_t>& vertex);

/// Indices of all vertices attaining max dot(c, x), ascending.
std::vector<int> argmax_brute(const Instance& inst, const RatVec& c);

}  // namespace copx
