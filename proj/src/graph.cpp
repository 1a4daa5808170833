#include "collatz/graph.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "collatz/engine.hpp"
#include "collatz/json_codec.hpp"

namespace collatz {

InsertCase CollatzGraph::insert(const Nat& s, const Nat& d, Exponent a) {
  if (!OddPos::is_odd_positive(s) || !OddPos::is_odd_positive(d)) {
    throw Error(ErrorCode::InvalidArgument, "graph vertices must be positive odd integers");
  }
  const auto step = reduced_step(OddPos(s));
  if (step.next.value() != d || step.exponent != a) {
    throw Error(ErrorCode::InvalidArgument, "edge (" + s.get_str() + ", " + d.get_str() + ", " +
                                                std::to_string(a) + ") does not follow C");
  }
  if (out_.count(s) != 0) {
    throw Error(ErrorCode::Internal, "source " + s.get_str() + " inserted twice");
  }
  const bool has_s = contains(s);
  const bool has_d = contains(d);
  vertices_.insert(s);
  vertices_.insert(d);
  out_.emplace(s, OutEdge{d, a});
  if (has_s) {
    return has_d ? InsertCase::BothPresent : InsertCase::SourcePresent;
  }
  return has_d ? InsertCase::DestPresent : InsertCase::NeitherPresent;
}

void CollatzGraph::add_vertex(const Nat& v) {
  if (!OddPos::is_odd_positive(v)) {
    throw Error(ErrorCode::InvalidArgument, "graph vertices must be positive odd integers");
  }
  vertices_.insert(v);
}

std::optional<OutEdge> CollatzGraph::successor(const Nat& v) const {
  auto it = out_.find(v);
  if (it == out_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::vector<Edge> CollatzGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(out_.size());
  for (const auto& [s, e] : out_) {
    out.push_back({s, e.dest, e.exponent});
  }
  return out;
}

void SweepPlan::validate() const {
  if (value_cap < 1 || depth_cap < 1 || exponent_cap < 1) {
    throw Error(ErrorCode::InvalidArgument, "sweep caps must all be at least 1");
  }
}

namespace {

// Largest b with family(0, b) <= cap; the family is increasing in both a and
// b. Returns nullopt if even b = 0 is too large.
template <typename Family>
std::optional<Exponent> largest_b(const Nat& cap, Family family) {
  if (family(Nat(0), 0).value() > cap) {
    return std::nullopt;
  }
  Exponent b = 0;
  while (family(Nat(0), b + 1).value() <= cap) {
    ++b;
  }
  return b;
}

}  // namespace

std::vector<SweepStep> sweep_candidates(const Nat& value_cap) {
  std::vector<SweepStep> steps;
  if (value_cap < 1) {
    return steps;
  }
  // d = 6a+1 or 6a+5 must stay within the cap.
  const Nat a_max_r1 = (value_cap - 1) / 6;
  const std::optional<Nat> a_max_r5 =
      value_cap >= 5 ? std::optional<Nat>((value_cap - 5) / 6) : std::nullopt;
  const auto b_max_r1 = largest_b(value_cap, r1);
  const auto b_max_r5 = largest_b(value_cap, r5);

  Nat a_limit = a_max_r1;
  if (a_max_r5 && *a_max_r5 > a_limit) {
    a_limit = *a_max_r5;
  }
  const Exponent b_limit = std::max(b_max_r1.value_or(0), b_max_r5.value_or(0));
  const Nat last_diagonal = a_limit + b_limit;

  for (Nat t = 0; t <= last_diagonal; ++t) {
    // a ascending within the diagonal means b descending.
    const Exponent b_top = t < b_limit ? static_cast<Exponent>(t.get_ui()) : b_limit;
    for (Exponent b_plus = b_top + 1; b_plus-- > 0;) {
      const Exponent b = b_plus;
      const Nat a = t - b;
      if (b_max_r1 && b <= *b_max_r1 && a <= a_max_r1) {
        OddPos s = r1(a, b);
        if (s.value() <= value_cap) {
          steps.push_back({{Family::R1, a, b}, s.value(), Nat(6 * a + 1), 2 * b + 2,
                           InsertCase::NeitherPresent});
        }
      }
      if (b_max_r5 && a_max_r5 && b <= *b_max_r5 && a <= *a_max_r5) {
        OddPos s = r5(a, b);
        if (s.value() <= value_cap) {
          steps.push_back({{Family::R5, a, b}, s.value(), Nat(6 * a + 5), 2 * b + 1,
                           InsertCase::NeitherPresent});
        }
      }
    }
  }
  return steps;
}

CollatzGraph build_sweep(const SweepPlan& plan, std::vector<SweepStep>* log) {
  plan.validate();
  CollatzGraph g;
  g.set_value_cap(plan.value_cap);
  for (auto& step : sweep_candidates(plan.value_cap)) {
    step.insert_case = g.insert(step.source, step.dest, step.exponent);
    if (log != nullptr) {
      log->push_back(std::move(step));
    }
  }
  return g;
}

CollatzGraph build_reverse_bfs(const SweepPlan& plan) {
  plan.validate();
  CollatzGraph g;
  g.set_value_cap(plan.value_cap);
  g.insert(Nat(1), Nat(1), 2);
  std::vector<Nat> frontier{Nat(1)};
  for (std::uint64_t level = 0; level < plan.depth_cap && !frontier.empty(); ++level) {
    std::vector<Nat> next;
    for (const Nat& v : frontier) {
      const OddPos node(v);
      const Mod6Class cls = mod6_classify(node);
      if (cls == Mod6Class::Three) {
        continue;
      }
      // R(v) grows with x, so the first value above the cap ends the scan.
      for (Exponent x = cls == Mod6Class::One ? 2 : 1; x <= plan.exponent_cap; x += 2) {
        OddPos s = reverse_step(node, x);
        if (s.value() > plan.value_cap) {
          break;
        }
        if (s.value() == v) {
          continue;  // the self-loop at 1, already recorded
        }
        g.insert(s.value(), v, x);
        next.push_back(s.value());
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  return g;
}

OneTreeReport is_one_tree(const CollatzGraph& g) {
  OneTreeReport report;
  enum class State { Unseen, OnPath, Done };
  std::map<Nat, State> state;
  for (const Nat& v : g.vertices()) {
    state.emplace(v, State::Unseen);
  }

  for (const Nat& start : g.vertices()) {
    if (state[start] == State::Done) {
      continue;
    }
    std::vector<Nat> path;
    Nat v = start;
    for (;;) {
      auto& st = state[v];
      if (st == State::Done) {
        break;
      }
      if (st == State::OnPath) {
        auto first = std::find(path.begin(), path.end(), v);
        report.is_tree = false;
        report.witness = OneTreeReport::Witness::Cycle;
        report.witness_vertices.assign(first, path.end());
        return report;
      }
      st = State::OnPath;
      path.push_back(v);
      if (v == 1) {
        break;
      }
      auto next = g.successor(v);
      if (!next) {
        const Nat successor = reduced_step(OddPos(v)).next.value();
        if (g.value_cap() && successor <= *g.value_cap()) {
          report.is_tree = false;
          report.witness = OneTreeReport::Witness::Orphan;
          report.witness_vertices = {v};
          return report;
        }
        ++report.frontier_count;
        break;
      }
      v = next->dest;
    }
    for (const Nat& p : path) {
      state[p] = State::Done;
    }
  }
  return report;
}

std::string to_dot(const CollatzGraph& g) {
  std::ostringstream out;
  out << "digraph collatz {\n";
  for (const Nat& v : g.vertices()) {
    out << "  " << v.get_str() << ";\n";
  }
  for (const auto& [s, e] : g.out_edges()) {
    out << "  " << s.get_str() << " -> " << e.dest.get_str() << " [label=\"" << e.exponent
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json to_json(const CollatzGraph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const Nat& v : g.vertices()) {
    vertices.push_back(v.get_str());
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [s, e] : g.out_edges()) {
    edges.push_back({{"s", s.get_str()}, {"d", e.dest.get_str()}, {"a", std::to_string(e.exponent)}});
  }
  nlohmann::json doc = {{"vertices", vertices}, {"edges", edges}};
  doc["value_cap"] = g.value_cap() ? nlohmann::json(g.value_cap()->get_str()) : nlohmann::json();
  return doc;
}

CollatzGraph graph_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges")) {
    throw Error(ErrorCode::InvalidArgument, "graph JSON needs vertices and edges");
  }
  CollatzGraph g;
  for (const auto& v : doc.at("vertices")) {
    g.add_vertex(nat_from_json(v));
  }
  for (const auto& e : doc.at("edges")) {
    g.insert(nat_from_json(e.at("s")), nat_from_json(e.at("d")), to_exponent(nat_from_json(e.at("a"))));
  }
  if (doc.contains("value_cap") && !doc.at("value_cap").is_null()) {
    g.set_value_cap(nat_from_json(doc.at("value_cap")));
  }
  return g;
}

}  // namespace collatz
