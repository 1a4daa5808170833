#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "collatz/arith.hpp"
#include "collatz/reverse.hpp"

namespace collatz {

struct OutEdge {
  Nat dest;
  Exponent exponent;

  friend bool operator==(const OutEdge&, const OutEdge&) = default;
};

struct Edge {
  Nat source;
  Nat dest;
  Exponent exponent;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Which of the four construction cases an insertion fell into.
enum class InsertCase {
  NeitherPresent = 1,
  DestPresent = 2,
  SourcePresent = 3,
  BothPresent = 4,
};

/// Finite window of the Collatz graph on odd numbers. Every edge (s, d, a)
/// satisfies C(s) = d with exponent a, so each vertex has at most one
/// outgoing edge.
class CollatzGraph {
 public:
  /// Adds (s, d, a). Throws InvalidArgument if the edge does not follow C
  /// and Internal if s already has an outgoing edge.
  InsertCase insert(const Nat& s, const Nat& d, Exponent a);
  void add_vertex(const Nat& v);

  bool contains(const Nat& v) const { return vertices_.count(v) != 0; }
  std::optional<OutEdge> successor(const Nat& v) const;

  const std::set<Nat>& vertices() const noexcept { return vertices_; }
  const std::map<Nat, OutEdge>& out_edges() const noexcept { return out_; }
  std::size_t edge_count() const noexcept { return out_.size(); }
  /// Edges sorted by source.
  std::vector<Edge> edges() const;

  /// Truncation bound used to build the window, if any.
  const std::optional<Nat>& value_cap() const noexcept { return value_cap_; }
  void set_value_cap(std::optional<Nat> cap) { value_cap_ = std::move(cap); }

  friend bool operator==(const CollatzGraph&, const CollatzGraph&) = default;

 private:
  std::set<Nat> vertices_;
  std::map<Nat, OutEdge> out_;
  std::optional<Nat> value_cap_;
};

enum class SweepMode { FormulaSweep, ReverseBFS };

struct SweepPlan {
  SweepMode mode = SweepMode::FormulaSweep;
  Nat value_cap{1};
  std::uint64_t depth_cap = 1;
  Exponent exponent_cap = 1;

  /// Throws InvalidArgument if any cap is below 1.
  void validate() const;
};

/// One R1/R5 evaluation of a formula sweep and where it landed.
struct SweepStep {
  PreimageTag tag;
  Nat source;
  Nat dest;
  Exponent exponent;
  InsertCase insert_case;
};

/// All R1(a,b) / R5(a,b) evaluations with source and destination within
/// value_cap, in diagonal order: by a + b, a ascending, R1 before R5.
/// The insert_case field is left as NeitherPresent.
std::vector<SweepStep> sweep_candidates(const Nat& value_cap);

/// Applies sweep_candidates to an empty graph. When log is given it
/// receives every step with its insertion case.
CollatzGraph build_sweep(const SweepPlan& plan, std::vector<SweepStep>* log = nullptr);

/// Grows the graph from 1 by reverse steps of every valid exponent up to
/// exponent_cap, depth_cap levels deep, dropping values above value_cap.
CollatzGraph build_reverse_bfs(const SweepPlan& plan);

struct OneTreeReport {
  enum class Witness { None, Cycle, Orphan };

  bool is_tree = true;
  Witness witness = Witness::None;
  /// Vertices of the offending cycle or the orphan vertex.
  std::vector<Nat> witness_vertices;
  /// Vertices whose path leaves the window above the value cap.
  std::size_t frontier_count = 0;
};

/// Ignoring the self-loop at 1: acyclic, and every vertex either reaches 1
/// or runs into a vertex whose successor is outside the window (frontier).
/// A vertex without an out-edge whose successor lies within the cap is an
/// orphan.
OneTreeReport is_one_tree(const CollatzGraph& g);

/// Graphviz rendering: vertices then edges, ascending.
std::string to_dot(const CollatzGraph& g);
nlohmann::json to_json(const CollatzGraph& g);
/// Rebuilds a graph from to_json output, re-validating every edge.
CollatzGraph graph_from_json(const nlohmann::json& doc);

}  // namespace collatz
