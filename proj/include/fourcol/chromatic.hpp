#pragma once

// Chromatic polynomials and colourings of small graphs.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fourcol/big_rational.hpp"
#include "fourcol/errors.hpp"
#include "fourcol/planar_map.hpp"

namespace fourcol {

/// Undirected simple graph on at most 64 vertices, one adjacency mask per vertex.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n) : adj_(static_cast<std::size_t>(check_size(n)), 0) {}

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
  int edge_count() const {
    int twice = 0;
    for (auto row : adj_) twice += std::popcount(row);
    return twice / 2;
  }
  std::uint64_t row(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  bool has_edge(int u, int v) const { return adj_[u] >> v & 1u; }

  void add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("SimpleGraph: loops are not allowed");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }
  void remove_edge(int u, int v) {
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u)
      for (int v = u + 1; v < vertex_count(); ++v)
        if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
  }

  /// The graph without vertex v; later vertices shift down by one.
  SimpleGraph without_vertex(int v) const {
    SimpleGraph g;
    g.adj_.reserve(adj_.size() - 1);
    for (int u = 0; u < vertex_count(); ++u)
      if (u != v) g.adj_.push_back(squeeze(adj_[u], v));
    return g;
  }

  SimpleGraph without_edge(int u, int v) const {
    SimpleGraph g = *this;
    g.remove_edge(u, v);
    return g;
  }

  /// Merges v into u (dropping the loop and any doubled edges), then removes v.
  SimpleGraph contracted(int u, int v) const {
    SimpleGraph g = *this;
    const std::uint64_t merged = (g.adj_[u] | g.adj_[v]) & ~bit(u) & ~bit(v);
    for (int w = 0; w < vertex_count(); ++w) {
      if (merged >> w & 1u) g.adj_[w] |= bit(u);
      g.adj_[w] &= ~bit(v);
    }
    g.adj_[u] = merged;
    return g.without_vertex(v);
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  static int check_size(int n) {
    if (n < 0 || n > 64) throw std::invalid_argument("SimpleGraph: at most 64 vertices");
    return n;
  }
  static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
  static std::uint64_t squeeze(std::uint64_t row, int v) {
    const std::uint64_t low = bit(v) - 1;
    return (row & low) | ((row >> 1) & ~low);
  }

  std::vector<std::uint64_t> adj_;
};

inline SimpleGraph graph_of(const PlanarTriangulation& t) {
  SimpleGraph g(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v)
    for (int w : t.neighbours(v)) g.add_edge(v, w);
  return g;
}

/// Polynomial in lambda with integer coefficients, lowest degree first.
class ChromaticPolynomial {
 public:
  ChromaticPolynomial() : c_{BigInt(1)} {}
  explicit ChromaticPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// lambda (lambda - 1) ... (lambda - k + 1).
  static ChromaticPolynomial falling(int k) {
    ChromaticPolynomial p;
    for (int i = 0; i < k; ++i) p = p.times_linear(i);
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return c_; }
  const BigInt& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }

  BigInt evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  BigInt evaluate(long x) const { return evaluate(BigInt(x)); }

  /// this * (lambda - a)
  ChromaticPolynomial times_linear(long a) const {
    std::vector<BigInt> r(c_.size() + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) {
      r[k + 1] += c_[k];
      r[k] -= a * c_[k];
    }
    return ChromaticPolynomial(std::move(r));
  }

  friend ChromaticPolynomial operator*(const ChromaticPolynomial& a, const ChromaticPolynomial& b) {
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return ChromaticPolynomial(std::move(r));
  }
  friend ChromaticPolynomial operator-(const ChromaticPolynomial& a, const ChromaticPolynomial& b) {
    std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] -= b.c_[k];
    return ChromaticPolynomial(std::move(r));
  }
  friend ChromaticPolynomial operator+(const ChromaticPolynomial& a, const ChromaticPolynomial& b) {
    std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
    return ChromaticPolynomial(std::move(r));
  }
  friend bool operator==(const ChromaticPolynomial& a, const ChromaticPolynomial& b) { return a.c_ == b.c_; }

  /// Expanded form, highest power first, e.g. "λ^4 - 6λ^3 + 11λ^2 - 6λ".
  std::string to_string(const std::string& var = "λ") const {
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const BigInt& c = c_[k];
      if (c == 0) continue;
      const BigInt mag = abs(c);
      if (out.empty()) out += c < 0 ? "-" : "";
      else out += c < 0 ? " - " : " + ";
      if (mag != 1 || k == 0) out += mag.get_str();
      if (k >= 1) out += var;
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
  }

 private:
  void trim() {
    while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
    if (c_.empty()) c_.push_back(0);
  }

  std::vector<BigInt> c_;
};

/// Deletion-contraction with a memo table that can be shared across calls.
///
/// Reductions applied before branching: a simplicial vertex v (neighbours form
/// a clique) contributes a factor (lambda - deg v); a disconnected graph is
/// the product of its components. Memo keys are the adjacency masks after a
/// colour-refinement relabelling, so many (not all) isomorphic subgraphs share
/// an entry; equal keys always mean identical labelled graphs.
class ChromaticCache {
 public:
  ChromaticPolynomial operator()(const SimpleGraph& g) { return solve(g); }
  std::size_t size() const { return memo_.size(); }

 private:
  ChromaticPolynomial solve(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return ChromaticPolynomial();

    for (int v = 0; v < n; ++v) {
      if (is_simplicial(g, v)) return solve(g.without_vertex(v)).times_linear(g.degree(v));
    }

    const std::uint64_t comp = component_of(g, 0);
    if (std::popcount(comp) != n) {
      SimpleGraph a = induced(g, comp), b = induced(g, ~comp & mask(n));
      return solve(a) * solve(b);
    }

    const SimpleGraph key_graph = normalised(g);
    std::string key = key_of(key_graph);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // Branch on an edge at a vertex of least degree.
    int u = 0;
    for (int v = 1; v < n; ++v)
      if (key_graph.degree(v) < key_graph.degree(u)) u = v;
    const int w = std::countr_zero(key_graph.row(u));
    ChromaticPolynomial p = solve(key_graph.without_edge(u, w)) - solve(key_graph.contracted(u, w));
    memo_.emplace(std::move(key), p);
    return p;
  }

  static std::uint64_t mask(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

  static bool is_simplicial(const SimpleGraph& g, int v) {
    const std::uint64_t nb = g.row(v);
    for (std::uint64_t rest = nb; rest; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      if ((nb & ~(std::uint64_t{1} << w) & ~g.row(w)) != 0) return false;
    }
    return true;
  }

  static std::uint64_t component_of(const SimpleGraph& g, int v) {
    std::uint64_t seen = std::uint64_t{1} << v, frontier = seen;
    while (frontier) {
      std::uint64_t grow = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) grow |= g.row(std::countr_zero(f));
      frontier = grow & ~seen;
      seen |= grow;
    }
    return seen;
  }

  static SimpleGraph induced(const SimpleGraph& g, std::uint64_t keep) {
    std::vector<int> index(g.vertex_count(), -1);
    int k = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (keep >> v & 1u) index[v] = k++;
    SimpleGraph h(k);
    for (auto [a, b] : g.edges())
      if (index[a] >= 0 && index[b] >= 0) h.add_edge(index[a], index[b]);
    return h;
  }

  /// Relabels vertices by stable colour-refinement class (degree first).
  static SimpleGraph normalised(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<long> colour(n);
    for (int v = 0; v < n; ++v) colour[v] = g.degree(v);
    for (int round = 0; round < n; ++round) {
      std::vector<std::pair<std::vector<long>, int>> sig(n);
      for (int v = 0; v < n; ++v) {
        sig[v].second = v;
        sig[v].first.push_back(colour[v]);
        std::vector<long> nb;
        for (std::uint64_t r = g.row(v); r; r &= r - 1) nb.push_back(colour[std::countr_zero(r)]);
        std::sort(nb.begin(), nb.end());
        sig[v].first.insert(sig[v].first.end(), nb.begin(), nb.end());
      }
      std::vector<std::pair<std::vector<long>, int>> sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      std::vector<long> refined(n);
      long cls = 0;
      for (int i = 0; i < n; ++i) {
        if (i > 0 && sorted[i].first != sorted[i - 1].first) ++cls;
        refined[sorted[i].second] = cls;
      }
      const bool stable = std::set<long>(refined.begin(), refined.end()).size() ==
                          std::set<long>(colour.begin(), colour.end()).size();
      colour = std::move(refined);
      if (stable && round > 0) break;
    }
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return colour[a] < colour[b]; });
    std::vector<int> where(n);
    for (int i = 0; i < n; ++i) where[order[i]] = i;
    SimpleGraph h(n);
    for (auto [a, b] : g.edges()) h.add_edge(where[a], where[b]);
    return h;
  }

  static std::string key_of(const SimpleGraph& g) {
    std::string key(1, static_cast<char>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
      const std::uint64_t r = g.row(v);
      key.append(reinterpret_cast<const char*>(&r), sizeof r);
    }
    return key;
  }

  std::unordered_map<std::string, ChromaticPolynomial> memo_;
};

inline ChromaticPolynomial chromatic_poly(const SimpleGraph& g, ChromaticCache* cache = nullptr) {
  if (cache) return (*cache)(g);
  ChromaticCache local;
  return local(g);
}

inline ChromaticPolynomial chromatic_poly(const PlanarTriangulation& t, ChromaticCache* cache = nullptr) {
  return chromatic_poly(graph_of(t), cache);
}

/// Number of proper colourings with k colours, by exhaustive backtracking.
inline BigInt count_colourings(const SimpleGraph& g, int k) {
  const int n = g.vertex_count();
  if (k < 0) throw std::invalid_argument("count_colourings: k must be non-negative");
  if (n == 0) return 1;
  std::vector<int> colour(n, -1);
  unsigned long long leaves = 0;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      ++leaves;
      return;
    }
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (std::uint64_t r = g.row(v) & ((std::uint64_t{1} << v) - 1); r; r &= r - 1)
        if (colour[std::countr_zero(r)] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      colour[v] = c;
      self(self, v + 1);
    }
    colour[v] = -1;
  };
  rec(rec, 0);
  return BigInt(static_cast<unsigned long>(leaves));
}

/// Some proper 4-colouring, found by backtracking, or nothing.
inline std::optional<std::vector<int>> find_four_colouring(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(n, -1);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    const int top = v == 0 ? 1 : 4;  // colour symmetry: fix the first vertex
    for (int c = 0; c < top; ++c) {
      bool ok = true;
      for (std::uint64_t r = g.row(v); r; r &= r - 1) {
        const int w = std::countr_zero(r);
        if (colour[w] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      colour[v] = c;
      if (self(self, v + 1)) return true;
    }
    colour[v] = -1;
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return colour;
}

/// 4-colourability decided twice: backtracking and the sign of P(G, 4).
/// Disagreement is an internal fault.
inline bool four_colourable(const SimpleGraph& g, ChromaticCache* cache = nullptr) {
  const bool search = find_four_colouring(g).has_value();
  const bool poly = chromatic_poly(g, cache).evaluate(4) > 0;
  if (search != poly) throw ConsistencyFault("four_colourable: backtracking and P(G,4) disagree");
  return search;
}

inline bool four_colourable(const PlanarTriangulation& t, ChromaticCache* cache = nullptr) {
  return four_colourable(graph_of(t), cache);
}

}  // namespace fourcol
