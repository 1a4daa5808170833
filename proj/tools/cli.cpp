#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "collatz/engine.hpp"
#include "collatz/fsn.hpp"
#include "collatz/generate.hpp"
#include "collatz/graph.hpp"
#include "collatz/loops.hpp"
#include "collatz/reverse.hpp"
#include "collatz/verify.hpp"

namespace collatz::cli {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

OddPos parse_odd(const std::string& text, const char* what) {
  const Nat v = parse_nat(text);
  if (!OddPos::is_odd_positive(v)) {
    throw UsageError(std::string(what) + " must be a positive odd integer, got " + text);
  }
  return OddPos(v);
}

Exponent parse_exponent(const std::string& text) { return to_exponent(parse_nat(text)); }

std::string exponents_tuple(const std::vector<Exponent>& xs) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out << (i ? "," : "") << xs[i];
  }
  out << ')';
  return out.str();
}

std::vector<Nat> trace_values(const ExponentTrace& t) {
  std::vector<Nat> values{t.start.value()};
  Nat v = t.start.value();
  for (std::size_t i = 0; i < t.exponents.size(); ++i) {
    advance(v);
    values.push_back(v);
  }
  return values;
}

json trace_json(const TraceResult& r) {
  json values = json::array();
  for (const Nat& v : trace_values(r.trace)) {
    values.push_back(v.get_str());
  }
  return {{"start", r.trace.start.str()},
          {"exponents", r.trace.exponents},
          {"values", values},
          {"terminal", r.trace.terminal.str()},
          {"length", r.trace.length()},
          {"stop", to_string(r.reason)}};
}

std::string arrow_notation(const ExponentTrace& t) {
  const auto values = trace_values(t);
  std::ostringstream out;
  out << values.front().get_str();
  for (std::size_t i = 0; i < t.exponents.size(); ++i) {
    out << " -" << t.exponents[i] << "-> " << values[i + 1].get_str();
  }
  return out.str();
}

std::string tag_text(const PreimageTag& tag) {
  return std::string(to_string(tag.family)) + " a=" + tag.a.get_str() + " b=" + std::to_string(tag.b);
}

ExponentTrace base_trace(const OddPos& base, std::uint64_t cap) {
  auto result = trace(base, std::nullopt, cap);
  if (result.reason == StopReason::IterationCapHit) {
    throw CapExceeded(cap);
  }
  return std::move(result.trace);
}

std::string read_source(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot open " + path);
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int print_report(const VerifyReport& r, std::ostream& out) {
  out << (r.passed() ? "PASS " : "FAIL ") << r.check_name << " [" << r.range << "] passed=" << r.pass_count
      << " failures=" << r.failures.size() << " elapsed=" << r.elapsed.count() << "ms\n";
  constexpr std::size_t kShown = 20;
  for (std::size_t i = 0; i < r.failures.size() && i < kShown; ++i) {
    out << "  counterexample: " << r.failures[i] << "\n";
  }
  if (r.failures.size() > kShown) {
    out << "  ... " << r.failures.size() - kShown << " more\n";
  }
  return r.passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& cap_env) {
  CLI::App app{"Reduced Collatz toolkit: trajectories, fractional sums, generators, loops, "
               "reverse iteration and graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string cap_text;
  app.add_option("--cap", cap_text, "iteration cap (default: COLLATZ_CAP or 100000)");

  // traj
  auto* traj = app.add_subcommand("traj", "reduced trajectory in arrow notation");
  std::string traj_n, traj_target;
  bool traj_json = false;
  traj->add_option("n", traj_n, "positive odd start value")->required();
  traj->add_option("--target", traj_target, "stop at this odd value instead of 1");
  traj->add_flag("--json", traj_json, "print the trace as JSON");

  // fsn
  auto* fsn = app.add_subcommand("fsn", "fractional sum notation");
  std::string fsn_n, fsn_eval;
  std::uint64_t fsn_depth = 0;
  Exponent fsn_lift = 0;
  fsn->add_option("n", fsn_n, "positive odd value to encode");
  fsn->add_option("--depth", fsn_depth, "intermediate depth j (default: full sequence)");
  fsn->add_option("--eval", fsn_eval, "evaluate a form read from a JSON file ('-' for stdin)");
  fsn->add_option("--lift", fsn_lift, "multiply the evaluated value by 2^x");

  // gen
  auto* gen = app.add_subcommand("gen", "closed-form generators");
  gen->require_subcommand(1);
  auto* gen_l1 = gen->add_subcommand("length1", "(2^{2k+2}-1)/3");
  std::string g_k, g_a1, g_b, g_base, g_count, g_j;
  gen_l1->add_option("k", g_k)->required();
  auto* gen_l2 = gen->add_subcommand("length2", "length-2 formula");
  gen_l2->add_option("a1", g_a1)->required();
  gen_l2->add_option("b", g_b)->required();
  auto* gen_enum = gen->add_subcommand("enumerate", "smallest length-2 numbers");
  gen_enum->add_option("count", g_count)->required();
  auto* gen_add = gen->add_subcommand("additive", "additive extension by one step");
  gen_add->add_option("--base", g_base)->required();
  gen_add->add_option("--b", g_b)->required();
  auto* gen_jump = gen->add_subcommand("jump", "additive extension through the trivial cycle");
  gen_jump->add_option("--base", g_base)->required();
  gen_jump->add_option("--k", g_k)->required();
  gen_jump->add_option("--b", g_b)->required();
  auto* gen_mono = gen->add_subcommand("monotonic", "2^j k - 1 and its increasing chain");
  gen_mono->add_option("j", g_j)->required();
  gen_mono->add_option("k", g_k)->required();

  // loops
  auto* loops = app.add_subcommand("loops", "loop equations");
  loops->require_subcommand(1);
  std::string l_j, l_sum, l_n, l_m;
  std::vector<std::string> l_exps;
  auto* loops_search = loops->add_subcommand("search", "bounded loop search");
  loops_search->add_option("--j", l_j)->required();
  loops_search->add_option("--max-sum", l_sum)->required();
  auto* loops_pairs = loops->add_subcommand("pairs", "feasible length-2 exponent pairs");
  auto* loops_check = loops->add_subcommand("check", "evaluate the loop equation for exponents");
  loops_check->add_option("exponents", l_exps)->required();
  auto* loops_form = loops->add_subcommand("form", "is n of the form 3^j * 2k + 1");
  loops_form->add_option("n", l_n)->required();
  loops_form->add_option("j", l_j)->required();
  auto* loops_member = loops->add_subcommand("member", "n = (n-1) 2^{sum a} / 3^j + m");
  loops_member->add_option("n", l_n)->required();
  loops_member->add_option("m", l_m)->required();
  loops_member->add_option("exponents", l_exps)->required();

  // reverse
  auto* rev = app.add_subcommand("reverse", "reverse iteration");
  rev->require_subcommand(1);
  std::string r_n, r_x, r_a, r_b, r_c;
  auto* rev_step = rev->add_subcommand("step", "(2^x n - 1)/3");
  rev_step->add_option("n", r_n)->required();
  rev_step->add_option("x", r_x)->required();
  auto* rev_rr1 = rev->add_subcommand("rr1", "steered predecessor of 6a+1");
  auto* rev_rr5 = rev->add_subcommand("rr5", "steered predecessor of 6a+5");
  for (auto* sub : {rev_rr1, rev_rr5}) {
    sub->add_option("a", r_a)->required();
    sub->add_option("b", r_b)->required();
    sub->add_option("c", r_c, "target residue mod 6: 1, 3 or 5")->required();
  }
  auto* rev_r1 = rev->add_subcommand("r1", "((6a+1) 2^{2b+2} - 1)/3");
  auto* rev_r5 = rev->add_subcommand("r5", "((6a+5) 2^{2b+1} - 1)/3");
  auto* rev_x = rev->add_subcommand("x", "2^{2b+3} a + (2^{2b+4} - 1)/3");
  for (auto* sub : {rev_r1, rev_r5, rev_x}) {
    sub->add_option("a", r_a)->required();
    sub->add_option("b", r_b)->required();
  }
  auto* rev_resolve = rev->add_subcommand("resolve", "unique R1/R5 parameters of n");
  rev_resolve->add_option("n", r_n)->required();
  auto* rev_partition = rev->add_subcommand("partition", "level-0 family of n (mod 8)");
  rev_partition->add_option("n", r_n)->required();
  auto* rev_classify = rev->add_subcommand("classify", "n mod 6");
  rev_classify->add_option("n", r_n)->required();

  // graph
  auto* graph = app.add_subcommand("graph", "Collatz graph windows");
  graph->require_subcommand(1);
  std::string gr_cap = "100", gr_depth = "8", gr_exp = "16";
  bool gr_dot = false, gr_json = false;
  auto* graph_sweep = graph->add_subcommand("sweep", "R1/R5 formula sweep");
  auto* graph_bfs = graph->add_subcommand("bfs", "reverse breadth-first growth from 1");
  for (auto* sub : {graph_sweep, graph_bfs}) {
    sub->add_option("--value-cap", gr_cap, "largest vertex value");
    auto* dot = sub->add_flag("--dot", gr_dot, "Graphviz output");
    sub->add_flag("--json", gr_json, "JSON output")->excludes(dot);
  }
  graph_bfs->add_option("--depth", gr_depth, "levels to grow");
  graph_bfs->add_option("--exp-cap", gr_exp, "largest reverse exponent");

  // verify
  auto* verify = app.add_subcommand("verify", "run named verification suites ('all', 'list')");
  std::string v_suite;
  std::uint64_t v_max = 0;
  unsigned v_workers = std::max(1u, std::thread::hardware_concurrency());
  verify->add_option("suite", v_suite)->required();
  auto* v_max_opt = verify->add_option("--max", v_max, "range bound override");
  verify->add_option("--workers", v_workers, "worker threads");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    std::uint64_t cap = kDefaultCap;
    bool cap_given = false;
    if (!cap_text.empty()) {
      cap = to_exponent(parse_nat(cap_text));
      cap_given = true;
    } else if (cap_env && !cap_env->empty()) {
      cap = to_exponent(parse_nat(*cap_env));
      cap_given = true;
    }
    if (cap < 1) {
      throw UsageError("cap must be at least 1");
    }

    if (*traj) {
      const OddPos n = parse_odd(traj_n, "n");
      std::optional<Nat> target;
      if (!traj_target.empty()) {
        target = parse_odd(traj_target, "target").value();
      }
      const auto result = trace(n, target, cap);
      if (traj_json) {
        out << trace_json(result).dump() << "\n";
      } else {
        out << arrow_notation(result.trace) << "\n";
      }
      if (result.reason == StopReason::IterationCapHit) {
        err << "iteration cap " << cap << " reached before the target\n";
        return kExitCap;
      }
      if (target && *target != 1 && result.reason == StopReason::ReachedOne) {
        err << "reached 1 before " << target->get_str() << "\n";
      }
      return kExitOk;
    }

    if (*fsn) {
      if (!fsn_eval.empty()) {
        const auto form = form_from_json(json::parse(read_source(fsn_eval)));
        out << (fsn_lift ? even_lift(form, fsn_lift) : eval_form(form).value()).get_str() << "\n";
        return kExitOk;
      }
      if (fsn_n.empty()) {
        throw UsageError("fsn needs n or --eval");
      }
      const OddPos n = parse_odd(fsn_n, "n");
      const auto form = fsn_depth ? encode_ifsn(n, fsn_depth, cap) : encode_fsn(n, cap);
      out << to_json(form).dump() << "\n";
      return kExitOk;
    }

    if (*gen) {
      if (*gen_l1) {
        out << gen_length1(parse_exponent(g_k)).str() << "\n";
      } else if (*gen_l2) {
        out << gen_length2(Length2Params(parse_exponent(g_a1), parse_exponent(g_b))).str() << "\n";
      } else if (*gen_enum) {
        for (const auto& row : enumerate_length2(parse_exponent(g_count))) {
          out << row.n.str() << " " << row.a1 << " " << row.a2 << "\n";
        }
      } else if (*gen_add) {
        const auto base = base_trace(parse_odd(g_base, "base"), cap);
        out << additive_next(base, parse_nat(g_b)).str() << "\n";
      } else if (*gen_jump) {
        const auto base = base_trace(parse_odd(g_base, "base"), cap);
        const std::uint64_t k = parse_exponent(g_k);
        if (k < 1) {
          throw UsageError("k must be at least 1");
        }
        out << additive_jump(base, parse_nat(g_b), k).str() << "\n";
      } else if (*gen_mono) {
        const auto chain = gen_monotonic(parse_exponent(g_j), parse_nat(g_k));
        out << chain.start.str();
        for (std::size_t i = 1; i < chain.chain.size(); ++i) {
          out << " -1-> " << chain.chain[i].get_str();
        }
        out << "\n";
      }
      return kExitOk;
    }

    if (*loops) {
      auto exponent_list = [&] {
        std::vector<Exponent> xs;
        for (const auto& s : l_exps) {
          xs.push_back(parse_exponent(s));
        }
        return xs;
      };
      if (*loops_search) {
        for (const auto& c : search_loops(parse_exponent(l_j), parse_exponent(l_sum))) {
          out << "n=" << c.value.num().get_str() << " exponents=" << exponents_tuple(c.exponents) << "\n";
        }
      } else if (*loops_pairs) {
        for (const auto& [a1, a2] : length2_feasible_pairs()) {
          out << "(" << a1 << "," << a2 << ")\n";
        }
      } else if (*loops_check) {
        const auto outcome = loop_candidate(exponent_list());
        if (const auto* c = std::get_if<LoopCandidate>(&outcome)) {
          out << "n=" << c->value.num().get_str() << " exponents=" << exponents_tuple(c->exponents) << "\n";
          return kExitOk;
        }
        const auto& r = std::get<LoopRejection>(outcome);
        out << "rejected " << to_string(r.reason);
        if (r.value) {
          out << " value=" << r.value->str();
        }
        out << "\n";
        return kExitDomain;
      } else if (*loops_form) {
        out << (loop_form_check(parse_odd(l_n, "n"), parse_exponent(l_j)) ? "true" : "false") << "\n";
      } else if (*loops_member) {
        out << (loop_member_equation(parse_nat(l_n), parse_nat(l_m), exponent_list()) ? "true" : "false")
            << "\n";
      }
      return kExitOk;
    }

    if (*rev) {
      if (*rev_step) {
        out << reverse_step(parse_odd(r_n, "n"), parse_exponent(r_x)).str() << "\n";
      } else if (*rev_rr1 || *rev_rr5) {
        const Nat a = parse_nat(r_a);
        const Exponent b = parse_exponent(r_b);
        const Mod6Class c = mod6_class_from(static_cast<unsigned>(parse_exponent(r_c)));
        out << (*rev_rr1 ? rr1(a, b, c) : rr5(a, b, c)).str() << "\n";
      } else if (*rev_r1) {
        out << r1(parse_nat(r_a), parse_exponent(r_b)).str() << "\n";
      } else if (*rev_r5) {
        out << r5(parse_nat(r_a), parse_exponent(r_b)).str() << "\n";
      } else if (*rev_x) {
        out << x_fn(parse_nat(r_a), parse_exponent(r_b)).str() << "\n";
      } else if (*rev_resolve) {
        out << tag_text(resolve(parse_odd(r_n, "n"))) << "\n";
      } else if (*rev_partition) {
        out << tag_text(level0_partition(parse_odd(r_n, "n"))) << "\n";
      } else if (*rev_classify) {
        out << residue(mod6_classify(parse_odd(r_n, "n"))) << "\n";
      }
      return kExitOk;
    }

    if (*graph) {
      SweepPlan plan;
      plan.value_cap = parse_nat(gr_cap);
      plan.depth_cap = parse_exponent(gr_depth);
      plan.exponent_cap = parse_exponent(gr_exp);
      plan.mode = *graph_sweep ? SweepMode::FormulaSweep : SweepMode::ReverseBFS;
      const CollatzGraph g = *graph_sweep ? build_sweep(plan) : build_reverse_bfs(plan);
      if (gr_dot) {
        out << to_dot(g);
      } else if (gr_json) {
        out << to_json(g).dump() << "\n";
      } else {
        const auto tree = is_one_tree(g);
        out << "vertices=" << g.vertices().size() << " edges=" << g.edge_count()
            << " one_tree=" << (tree.is_tree ? "true" : "false") << " frontier=" << tree.frontier_count
            << " truncated_at=" << plan.value_cap.get_str() << "\n";
      }
      return kExitOk;
    }

    if (*verify) {
      VerifyOptions options;
      options.workers = std::max(1u, v_workers);
      options.cap = cap_given ? cap : 10'000;
      if (v_max_opt->count() > 0) {
        options.max = v_max;
      }
      if (v_suite == "list") {
        for (const auto& s : verify_suites()) {
          out << s.name << " (default max " << s.default_max << "): " << s.description << "\n";
        }
        return kExitOk;
      }
      if (v_suite == "all") {
        int status = kExitOk;
        for (const auto& s : verify_suites()) {
          if (print_report(run_suite(s.name, options), out) != kExitOk) {
            status = kExitVerifyFailed;
          }
        }
        return status;
      }
      return print_report(run_suite(v_suite, options), out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::IterationCapHit: return kExitCap;
      case ErrorCode::ClassThree:
      case ErrorCode::ParityMismatch:
      case ErrorCode::NonIntegerForm:
      case ErrorCode::NotOddPositive: return kExitDomain;
      case ErrorCode::InvalidArgument: return kExitUsage;
      case ErrorCode::Internal: return kExitVerifyFailed;
    }
  } catch (const json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace collatz::cli
