#include "copx/instances.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace copx {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string edge_label(int i, int j) {
  return std::to_string(i) + "-" + std::to_string(j);
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "e" + std::to_string(i);
  return labels;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Calls visit(mask) for every subset of {0..n-1} of the given size,
// in increasing lexicographic order of the index combination.
template <typename Visit>
void for_each_combination(int n, int size, Visit&& visit) {
  if (size < 0 || size > n) return;
  std::vector<int> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    visit(idx);
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::uint8_t> subset_vector(int n, const std::vector<int>& idx) {
  std::vector<std::uint8_t> v(n, 0);
  for (int i : idx) v[i] = 1;
  return v;
}

bool is_spanning_tree(const Graph& g, const std::vector<int>& edge_idx) {
  if (static_cast<int>(edge_idx.size()) != g.nodes - 1) return false;
  UnionFind uf(g.nodes);
  for (int e : edge_idx)
    if (!uf.unite(g.edges[e].first, g.edges[e].second)) return false;
  return true;
}

bool is_perfect_matching(const Graph& g, const std::vector<int>& edge_idx) {
  std::vector<int> degree(g.nodes, 0);
  for (int e : edge_idx) {
    ++degree[g.edges[e].first];
    ++degree[g.edges[e].second];
  }
  for (int d : degree)
    if (d != 1) return false;
  return true;
}

bool is_tour(const Graph& g, const std::vector<int>& edge_idx) {
  if (static_cast<int>(edge_idx.size()) != g.nodes) return false;
  std::vector<int> degree(g.nodes, 0);
  UnionFind uf(g.nodes);
  int components = g.nodes;
  for (int e : edge_idx) {
    ++degree[g.edges[e].first];
    ++degree[g.edges[e].second];
    if (uf.unite(g.edges[e].first, g.edges[e].second)) --components;
  }
  for (int d : degree)
    if (d != 2) return false;
  return components == 1;
}

Instance build_graph_family(const Graph& g, int subset_size, const std::string& family,
                            bool (*accept)(const Graph&, const std::vector<int>&)) {
  if (g.nodes <= 0) throw std::invalid_argument(family + ": graph has no nodes");
  Instance inst;
  inst.n = static_cast<int>(g.edges.size());
  inst.family = family;
  for (const auto& [i, j] : g.edges) inst.labels.push_back(edge_label(i, j));
  for_each_combination(inst.n, subset_size, [&](const std::vector<int>& idx) {
    if (accept(g, idx)) inst.vertices.push_back(subset_vector(inst.n, idx));
  });
  if (inst.vertices.empty())
    throw std::invalid_argument(family + ": feasible family is empty");
  std::sort(inst.vertices.begin(), inst.vertices.end());
  validate_instance(inst);
  return inst;
}

}  // namespace

const std::vector<std::uint8_t>& Instance::vertex(int k) const {
  if (k < 0 || k >= static_cast<int>(vertices.size()))
    throw std::invalid_argument("vertex index " + std::to_string(k) + " out of range");
  return vertices[k];
}

RatVec Instance::vertex_rat(int k) const {
  const auto& v = vertex(k);
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(static_cast<int>(v[i]));
  return r;
}

void validate_instance(const Instance& inst) {
  if (inst.n <= 0) throw std::invalid_argument("instance: n must be positive");
  if (static_cast<int>(inst.labels.size()) != inst.n)
    throw std::invalid_argument("instance: labels length != n");
  if (inst.vertices.empty()) throw std::invalid_argument("instance: empty vertex list");
  std::set<std::vector<std::uint8_t>> seen;
  for (const auto& v : inst.vertices) {
    if (static_cast<int>(v.size()) != inst.n)
      throw std::invalid_argument("instance: vertex length != n");
    for (auto x : v)
      if (x != 0 && x != 1) throw std::invalid_argument("instance: vertex entry not 0/1");
    if (!seen.insert(v).second)
      throw std::invalid_argument("instance: duplicate vertex");
  }
  if (inst.family.empty()) throw std::invalid_argument("instance: empty family tag");
}

Graph Graph::complete(int m) {
  if (m < 1) throw std::invalid_argument("complete graph: nodes must be >= 1");
  Graph g;
  g.nodes = m;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) g.edges.emplace_back(i, j);
  return g;
}

Graph Graph::from_edges(int nodes, std::vector<std::pair<int, int>> edges) {
  Graph g;
  g.nodes = nodes;
  for (auto& [i, j] : edges) {
    if (i == j || i < 0 || j < 0 || i >= nodes || j >= nodes)
      throw std::invalid_argument("graph edge out of range");
    if (i > j) std::swap(i, j);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges = std::move(edges);
  return g;
}

Instance gen_k_subsets(int n, int k) {
  if (n < 1) throw std::invalid_argument("k_subsets: n must be >= 1");
  if (k < 0 || k > n) throw std::invalid_argument("k_subsets: need 0 <= k <= n");
  Instance inst;
  inst.n = n;
  inst.labels = default_labels(n);
  inst.family = "k_subsets";
  for_each_combination(n, k, [&](const std::vector<int>& idx) {
    inst.vertices.push_back(subset_vector(n, idx));
  });
  std::sort(inst.vertices.begin(), inst.vertices.end());
  validate_instance(inst);
  return inst;
}

Instance gen_spanning_trees(const Graph& g) {
  return build_graph_family(g, g.nodes - 1, "spanning_trees", &is_spanning_tree);
}

Instance gen_perfect_matchings(const Graph& g) {
  if (g.nodes % 2 != 0)
    throw std::invalid_argument("perfect_matchings: odd node count has empty family");
  return build_graph_family(g, g.nodes / 2, "perfect_matchings", &is_perfect_matching);
}

Instance gen_tsp_tours(int cities) {
  if (cities < 3) throw std::invalid_argument("tsp_tours: need at least 3 cities");
  Instance inst = build_graph_family(Graph::complete(cities), cities, "tsp_tours", &is_tour);
  return inst;
}

Instance gen_explicit(std::vector<std::vector<std::uint8_t>> vertices,
                      std::vector<std::string> labels) {
  if (vertices.empty()) throw std::invalid_argument("explicit family: no vertices");
  Instance inst;
  inst.n = static_cast<int>(vertices[0].size());
  inst.labels = labels.empty() ? default_labels(inst.n) : std::move(labels);
  inst.vertices = std::move(vertices);
  inst.family = "explicit";
  validate_instance(inst);
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError("instance JSON parse error in " + path + ": " + e.what());
  }
  try {
    if (j.at("schema").get<std::string>() != "copx-instance-v1")
      throw ParseError("unexpected instance schema in " + path);
    Instance inst;
    inst.n = j.at("n").get<int>();
    inst.labels = j.at("labels").get<std::vector<std::string>>();
    inst.family = j.at("family").get<std::string>();
    for (const auto& row : j.at("vertices")) {
      std::vector<std::uint8_t> v;
      for (const auto& x : row) {
        int val = x.get<int>();
        if (val != 0 && val != 1) throw ParseError("vertex entry not 0/1 in " + path);
        v.push_back(static_cast<std::uint8_t>(val));
      }
      inst.vertices.push_back(std::move(v));
    }
    validate_instance(inst);
    return inst;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError("invalid instance in " + path + ": " + e.what());
  }
}

void save_instance(const Instance& inst, const std::string& path) {
  validate_instance(inst);
  ordered_json j;
  j["schema"] = "copx-instance-v1";
  j["n"] = inst.n;
  j["labels"] = inst.labels;
  j["family"] = inst.family;
  ordered_json rows = ordered_json::array();
  for (const auto& v : inst.vertices) {
    ordered_json row = ordered_json::array();
    for (auto x : v) row.push_back(static_cast<int>(x));
    rows.push_back(std::move(row));
  }
  j["vertices"] = std::move(rows);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file " + path);
  out << j.dump(2) << "\n";
}

RatVec load_weights(const std::string& path, int expect_n) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open weights file " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError("weights JSON parse error in " + path + ": " + e.what());
  }
  try {
    if (j.at("schema").get<std::string>() != "copx-weights-v1")
      throw ParseError("unexpected weights schema in " + path);
    RatVec c;
    for (const auto& s : j.at("c")) c.push_back(Rat::parse(s.get<std::string>()));
    if (expect_n >= 0 && static_cast<int>(c.size()) != expect_n)
      throw ParseError("weights length " + std::to_string(c.size()) + " != n = " +
                       std::to_string(expect_n));
    return c;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError("invalid weights in " + path + ": " + e.what());
  }
}

void save_weights(const RatVec& c, const std::string& path) {
  ordered_json j;
  j["schema"] = "copx-weights-v1";
  ordered_json arr = ordered_json::array();
  for (const Rat& x : c) arr.push_back(x.str());
  j["c"] = std::move(arr);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write weights file " + path);
  out << j.dump(2) << "\n";
}

Rat dot01(const RatVec& c, const std::vector<std::uint8_t>& vertex) {
  if (c.size() != vertex.size()) throw DimensionError("dot01: length mismatch");
  Rat acc;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (vertex[i]) acc += c[i];
  return acc;
}

std::vector<int> argmax_brute(const Instance& inst, const RatVec& c) {
  if (static_cast<int>(c.size()) != inst.n)
    throw DimensionError("argmax_brute: weight length != n");
  std::vector<int> best;
  Rat best_val;
  for (int k = 0; k < static_cast<int>(inst.vertices.size()); ++k) {
    Rat val = dot01(c, inst.vertices[k]);
    if (best.empty() || val > best_val) {
      best_val = val;
      best = {k};
    } else if (val == best_val) {
      best.push_back(k);
    }
  }
  return best;
}

}  // namespace copx
