// Command-line front end for the Kneser convexity toolkit: closed-form
// parameters, distances, intervals and hulls, the explicit constructions,
// exact minimum-set searches, verification sweeps, and graph export.
//
// JSON mode emits one envelope per invocation and is byte-reproducible:
// timing fields are fixed at 0 there, while the human-readable mode prints
// measured times.

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kneser/constructions.hpp"
#include "kneser/core.hpp"
#include "kneser/geodesy.hpp"
#include "kneser/search.hpp"
#include "kneser/vertex_set.hpp"

namespace {

using ojson = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;
using namespace kneser;

constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitBudget = 4;

constexpr std::uint64_t kMaxVerifyVertices = 1ull << 20;

struct GlobalOpts {
  int n = 0;
  int k = 0;
  bool json = false;
  int threads = 0;
  int seed = 0;  // reserved
};

std::string graph_name(const GraphParams& p) {
  return "K(" + std::to_string(p.ground) + "," + std::to_string(p.n) + ")";
}

ojson params_json(const GraphParams& p) {
  ojson j;
  j["n"] = p.n;
  j["k"] = p.k;
  j["ground"] = p.ground;
  return j;
}

ojson texts_json(const GraphParams& p, const VertexSet& s) {
  ojson arr = ojson::array();
  for (VertexId id : members(s)) arr.push_back(to_text(unrank(p, id)));
  return arr;
}

ojson opt_json(const std::optional<std::uint64_t>& v) {
  return v ? ojson(*v) : ojson(nullptr);
}

ojson report_json(const Report& r) {
  ojson j;
  j["params"] = params_json(r.params);
  j["quantity"] = to_string(r.quantity);
  j["value"] = opt_json(r.value);
  if (r.witness) {
    ojson arr = ojson::array();
    for (const KVertex& v : *r.witness) arr.push_back(to_text(v));
    j["witness"] = std::move(arr);
  } else {
    j["witness"] = nullptr;
  }
  j["agrees_with_claim"] = r.agrees_with_claim;
  j["discrepancy_note"] =
      r.discrepancy_note ? ojson(*r.discrepancy_note) : ojson(nullptr);
  j["budget_exceeded"] = r.budget_exceeded;
  j["lower_bound"] = opt_json(r.lower_bound);
  j["upper_bound"] = opt_json(r.upper_bound);
  j["elapsed_ms"] = 0;
  return j;
}

void print_report_human(const Report& r) {
  std::cout << "graph              " << graph_name(r.params) << "\n"
            << "quantity           " << to_string(r.quantity) << "\n"
            << "value              "
            << (r.value ? std::to_string(*r.value) : std::string("-")) << "\n";
  if (r.witness) {
    std::cout << "witness           ";
    for (const KVertex& v : *r.witness) std::cout << " " << to_text(v);
    std::cout << "\n";
  }
  std::cout << "agrees_with_claim  " << (r.agrees_with_claim ? "true" : "false")
            << "\n";
  if (r.discrepancy_note) std::cout << "note               " << *r.discrepancy_note << "\n";
  if (r.budget_exceeded) {
    std::cout << "budget_exceeded    true\n";
    if (r.lower_bound) std::cout << "lower_bound        " << *r.lower_bound << "\n";
    if (r.upper_bound) std::cout << "upper_bound        " << *r.upper_bound << "\n";
  }
  std::cout << "elapsed_ms         "
            << static_cast<long long>(r.elapsed_s * 1000.0) << "\n";
}

// One envelope per command in JSON mode; key order is fixed and timing is
// zeroed so identical inputs give byte-identical output.
int emit(const GlobalOpts& g, const std::string& command,
         const std::optional<GraphParams>& p, ojson result,
         const std::function<void()>& print_human) {
  if (g.json) {
    ojson env;
    env["schema_version"] = "1";
    env["command"] = command;
    env["params"] = p ? params_json(*p) : ojson(nullptr);
    env["result"] = std::move(result);
    env["elapsed_ms"] = 0;
    std::cout << env.dump(2) << "\n";
  } else {
    print_human();
  }
  return 0;
}

void print_vertex_lines(const GraphParams& p, const VertexSet& s) {
  for (VertexId id : members(s)) std::cout << to_text(unrank(p, id)) << "\n";
}

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
      .count();
}

int run_info(const GlobalOpts& g) {
  const auto t0 = Clock::now();
  const GraphParams p = make_params(g.n, g.k);
  const auto bounds = diametral_bounds(p);
  const bool diam_two = p.n >= 2 && p.k >= p.n - 1;
  ojson res;
  res["vertex_count"] = vertex_count(p);
  res["degree"] = degree(p);
  res["diameter"] = diameter(p);
  res["diametral_bounds"] = ojson::array({bounds.lo, bounds.hi});
  res["h_function"] = h_function(p);
  res["gn_upper_bound"] = gn_upper_bound(p);
  res["gn_diam2"] = diam_two ? ojson(gn_diameter_two(p)) : ojson(nullptr);
  res["ghn_diam2"] = diam_two ? ojson(ghn_diameter_two(p)) : ojson(nullptr);
  return emit(g, "info", p, res, [&] {
    std::cout << "graph             " << graph_name(p) << "\n"
              << "vertex_count      " << vertex_count(p) << "\n"
              << "degree            " << degree(p) << "\n"
              << "diameter          " << diameter(p) << "\n"
              << "diametral_bounds  [" << bounds.lo << ", " << bounds.hi << "]\n"
              << "h_function        " << h_function(p) << "\n"
              << "gn_upper_bound    " << gn_upper_bound(p) << "\n";
    if (diam_two)
      std::cout << "gn_diam2          " << gn_diameter_two(p) << "\n"
                << "ghn_diam2         " << ghn_diameter_two(p) << "\n";
    std::cout << "elapsed_ms        " << ms_since(t0) << "\n";
  });
}

int run_dist(const GlobalOpts& g, const std::string& u_text,
             const std::string& v_text, const std::string& oracle_mode) {
  const auto t0 = Clock::now();
  const GraphParams p = make_params(g.n, g.k);
  const KVertex u = parse_vertex(p, u_text);
  const KVertex v = parse_vertex(p, v_text);
  int d = 0;
  if (oracle_mode == "bfs") {
    const auto oracle = DistanceOracle::bfs(p, g.threads);
    d = oracle.distance(rank(p, u), rank(p, v));
  } else {
    d = distance(p, u, v);
  }
  const int s = intersection_size(u, v);
  ojson res;
  res["s"] = s;
  res["distance"] = d;
  res["diametral"] = is_diametral_pair(p, u, v);
  res["parity_class"] = to_string(classify_intersection(p, s));
  return emit(g, "dist", p, res, [&] {
    std::cout << "graph         " << graph_name(p) << "\n"
              << "u             " << to_text(u) << "\n"
              << "v             " << to_text(v) << "\n"
              << "s             " << s << "\n"
              << "distance      " << d << "\n"
              << "diametral     " << (is_diametral_pair(p, u, v) ? "true" : "false") << "\n"
              << "parity_class  " << to_string(classify_intersection(p, s)) << "\n"
              << "elapsed_ms    " << ms_since(t0) << "\n";
  });
}

int run_diametral(const GlobalOpts& g, const std::string& u_text) {
  const auto t0 = Clock::now();
  const GraphParams p = make_params(g.n, g.k);
  const KVertex u = parse_vertex(p, u_text);
  const auto oracle = DistanceOracle::formula(p);
  const VertexSet opposed = diametrically_opposed_set(p, oracle, rank(p, u));
  const auto bounds = diametral_bounds(p);
  ojson res;
  res["u"] = to_text(u);
  res["bounds"] = ojson::array({bounds.lo, bounds.hi});
  res["count"] = opposed.count();
  res["vertices"] = texts_json(p, opposed);
  return emit(g, "diametral", p, res, [&] {
    std::cout << "graph   " << graph_name(p) << "\n"
              << "u       " << to_text(u) << "\n"
              << "bounds  [" << bounds.lo << ", " << bounds.hi << "]\n"
              << "count   " << opposed.count() << "\n";
    print_vertex_lines(p, opposed);
    std::cout << "elapsed_ms " << ms_since(t0) << "\n";
  });
}

int run_interval(const GlobalOpts& g, const std::vector<std::string>& set_texts,
                 const std::string& iterate) {
  const auto t0 = Clock::now();
  const GraphParams p = make_params(g.n, g.k);
  std::vector<KVertex> vs;
  vs.reserve(set_texts.size());
  for (const std::string& t : set_texts) vs.push_back(parse_vertex(p, t));
  const VertexSet w = to_set(p, vs);
  const auto oracle = DistanceOracle::formula(p);

  VertexSet out(vertex_count(p));
  std::optional<int> steps;
  if (iterate == "hull") {
    HullResult hr = hull_closure(p, oracle, w);
    out = std::move(hr.closure);
    steps = hr.steps;
  } else {
    int t = 0;
    try {
      std::size_t used = 0;
      t = std::stoi(iterate, &used);
      if (used != iterate.size() || t < 0) throw std::invalid_argument(iterate);
    } catch (const std::exception&) {
      throw ParseError("--iterate expects a nonnegative integer or 'hull', got '" +
                       iterate + "'");
    }
    out = iterated_interval(p, oracle, w, t);
  }
  ojson res;
  res["count"] = out.count();
  res["steps"] = steps ? ojson(*steps) : ojson(nullptr);
  res["vertices"] = texts_json(p, out);
  return emit(g, "interval", p, res, [&] {
    std::cout << "graph   " << graph_name(p) << "\n"
              << "count   " << out.count() << "\n";
    if (steps) std::cout << "steps   " << *steps << "\n";
    print_vertex_lines(p, out);
    std::cout << "elapsed_ms " << ms_since(t0) << "\n";
  });
}

int run_construct(const GlobalOpts& g, const std::string& kind,
                  const std::string& root_text, int pivot) {
  const auto t0 = Clock::now();
  const GraphParams p = make_params(g.n, g.k);
  // re-check through the BFS table where one fits; closed form otherwise
  const auto oracle = vertex_count(p) <= kMaxTableVertices
                          ? DistanceOracle::bfs(p, g.threads)
                          : DistanceOracle::formula(p);
  VertexSet out(vertex_count(p));
  bool verified = false;
  if (kind == "theorem3") {
    const KVertex r = root_text.empty() ? unrank(p, 0) : parse_vertex(p, root_text);
    out = root_geodetic_set(p, oracle, rank(p, r));
    verified = is_geodetic_set(p, oracle, out);
  } else if (kind == "theorem5") {
    out = pivot_geodetic_set(p, pivot);
    verified = is_geodetic_set(p, oracle, out);
    const auto ids = members(out);
    for (std::size_t i = 0; verified && i < ids.size(); ++i)
      for (std::size_t j = i + 1; verified && j < ids.size(); ++j)
        verified = !is_adjacent(unrank(p, ids[i]), unrank(p, ids[j]));
  } else if (kind == "lemma6") {
    const auto triple = hull_triple(p);
    out = to_set(p, {triple[0], triple[1], triple[2]});
    verified = is_hull_set(p, oracle, out);
  } else {  // pair
    const auto pr = hull_pair(p);
    out = to_set(p, {pr[0], pr[1]});
    verified = is_hull_set(p, oracle, out);
  }
  ojson res;
  res["kind"] = kind;
  res["count"] = out.count();
  res["verified"] = verified;
  res["vertices"] = texts_json(p, out);
  return emit(g, "construct", p, res, [&] {
    std::cout << "graph     " << graph_name(p) << "\n"
              << "kind      " << kind << "\n"
              << "count     " << out.count() << "\n"
              << "verified  " << (verified ? "true" : "false") << "\n";
    print_vertex_lines(p, out);
    std::cout << "elapsed_ms " << ms_since(t0) << "\n";
  });
}

int run_search(const GlobalOpts& g, const std::string& quantity,
               const SearchBudget& budget) {
  const GraphParams p = make_params(g.n, g.k);
  const Report rep = quantity == "gn" ? min_geodetic_set(p, budget, g.threads)
                                      : min_hull_set(p, budget, g.threads);
  const int code = emit(g, "search", p, report_json(rep),
                        [&] { print_report_human(rep); });
  if (code != 0) return code;
  return rep.budget_exceeded ? kExitBudget : 0;
}

int run_verify(const GlobalOpts& g, const std::string& target,
               std::uint64_t max_vertices) {
  const auto q = quantity_from_string(target);
  if (!q || *q == Quantity::Gn || *q == Quantity::Ghn)
    throw ParseError("unknown verify target '" + target +
                     "'; expected one of theorem1, theorem3, theorem5, "
                     "theorem7, corollary2, corollary4, corollary8");
  if (max_vertices > kMaxVerifyVertices)
    throw ParseError("--max-vertices is capped at " +
                     std::to_string(kMaxVerifyVertices));
  const auto reports = sweep_verify(*q, max_vertices, g.threads);
  ojson res;
  res["target"] = target;
  res["max_vertices"] = max_vertices;
  res["all_agree"] = all_agree(reports);
  ojson arr = ojson::array();
  for (const Report& r : reports) arr.push_back(report_json(r));
  res["reports"] = std::move(arr);
  return emit(g, "verify", std::nullopt, res, [&] {
    std::cout << "target        " << target << "\n"
              << "max_vertices  " << max_vertices << "\n";
    for (const Report& r : reports) {
      std::cout << graph_name(r.params) << "  agree="
                << (r.agrees_with_claim ? "yes" : "no");
      if (r.value) std::cout << "  value=" << *r.value;
      if (r.discrepancy_note) std::cout << "  note: " << *r.discrepancy_note;
      std::cout << "\n";
    }
    std::cout << "all_agree     " << (all_agree(reports) ? "true" : "false") << "\n";
  });
}

// Export writes the requested file format directly to stdout (no envelope).
int run_export(const GlobalOpts& g, const std::string& format) {
  const GraphParams p = make_params(g.n, g.k);
  const auto verts = all_vertices(p);
  const std::uint64_t count = verts.size();
  auto for_each_edge = [&](const std::function<void(VertexId, VertexId)>& fn) {
    for (VertexId u = 0; u < count; ++u)
      for (VertexId v = u + 1; v < count; ++v)
        if (is_adjacent(verts[u], verts[v])) fn(u, v);
  };
  if (format == "dot") {
    std::cout << "graph \"" << graph_name(p) << "\" {\n";
    for (VertexId u = 0; u < count; ++u)
      std::cout << "  v" << u << " [label=\"" << to_text(verts[u]) << "\"];\n";
    for_each_edge([&](VertexId u, VertexId v) {
      std::cout << "  v" << u << " -- v" << v << ";\n";
    });
    std::cout << "}\n";
  } else if (format == "edgelist") {
    for_each_edge([&](VertexId u, VertexId v) {
      std::cout << to_text(verts[u]) << " " << to_text(verts[v]) << "\n";
    });
  } else {  // json
    ojson j;
    j["params"] = params_json(p);
    ojson vlist = ojson::array();
    for (const KVertex& v : verts) vlist.push_back(to_text(v));
    j["vertices"] = std::move(vlist);
    ojson elist = ojson::array();
    for_each_edge([&](VertexId u, VertexId v) {
      elist.push_back(ojson::array({u, v}));
    });
    j["edges"] = std::move(elist);
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geodetic convexity toolkit for Kneser graphs K(2n+k, n)"};
  app.fallthrough();  // global options may follow the subcommand name
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--n", g.n, "subset size n (>= 1)");
  app.add_option("--k", g.k, "ground-set slack k (>= 1); the ground set is {1,...,2n+k}");
  app.add_flag("--json", g.json, "emit one JSON envelope on stdout (byte-reproducible)");
  app.add_option("--threads", g.threads, "worker threads; 0 means machine parallelism");
  app.add_option("--seed", g.seed, "reserved; every algorithm is deterministic");

  app.add_subcommand("info", "closed-form parameters of K(2n+k,n)");

  auto* dist = app.add_subcommand("dist", "distance and diametral classification of a pair");
  std::string u_text, v_text, oracle_mode = "formula";
  dist->add_option("--u", u_text, "first vertex, e.g. 1,2,3")->required();
  dist->add_option("--v", v_text, "second vertex")->required();
  dist->add_option("--oracle", oracle_mode, "distance source")
      ->check(CLI::IsMember({"formula", "bfs"}));

  auto* diametral = app.add_subcommand("diametral", "vertices diametrically opposed to --u");
  std::string du_text;
  diametral->add_option("--u", du_text, "reference vertex")->required();

  auto* interval = app.add_subcommand("interval", "iterated geodetic interval or hull of a set");
  std::vector<std::string> set_texts;
  std::string iterate = "1";
  interval->add_option("--set", set_texts, "vertex in the input set (repeatable)")
      ->required();
  interval->add_option("--iterate", iterate, "iteration count, or 'hull' for the closure");

  auto* construct = app.add_subcommand("construct", "named geodetic / hull set constructions");
  std::string kind, root_text;
  int pivot = 1;
  construct->add_option("--kind", kind, "one of theorem3, theorem5, lemma6, pair")
      ->required()
      ->check(CLI::IsMember({"theorem3", "theorem5", "lemma6", "pair"}));
  construct->add_option("--root", root_text, "root vertex for theorem3 (default 1,...,n)");
  construct->add_option("--pivot", pivot, "pivot element for theorem5 (default 1)");

  auto* search = app.add_subcommand("search", "exact minimum geodetic or hull set");
  std::string quantity;
  SearchBudget budget;
  search->add_option("--quantity", quantity, "gn or ghn")
      ->required()
      ->check(CLI::IsMember({"gn", "ghn"}));
  search->add_option("--max-size", budget.max_subset_size, "largest candidate cardinality");
  search->add_option("--max-candidates", budget.max_candidates, "cap on examined subsets");
  search->add_option("--time-limit", budget.time_limit_s, "seconds before aborting");

  auto* verify = app.add_subcommand("verify", "confront a closed-form claim with brute force");
  std::string target;
  std::uint64_t max_vertices = 500;
  verify->add_option("--target", target, "theorem1|theorem3|theorem5|theorem7|corollary2|corollary4|corollary8")
      ->required();
  verify->add_option("--max-vertices", max_vertices, "largest vertex count to include");

  auto* export_cmd = app.add_subcommand("export", "write the graph to stdout");
  std::string format;
  export_cmd->add_option("--format", format, "dot, edgelist or json")
      ->required()
      ->check(CLI::IsMember({"dot", "edgelist", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (app.got_subcommand("info")) return run_info(g);
    if (app.got_subcommand(dist)) return run_dist(g, u_text, v_text, oracle_mode);
    if (app.got_subcommand(diametral)) return run_diametral(g, du_text);
    if (app.got_subcommand(interval)) return run_interval(g, set_texts, iterate);
    if (app.got_subcommand(construct)) return run_construct(g, kind, root_text, pivot);
    if (app.got_subcommand(search)) return run_search(g, quantity, budget);
    if (app.got_subcommand(verify)) return run_verify(g, target, max_vertices);
    if (app.got_subcommand(export_cmd)) return run_export(g, format);
  } catch (const DiameterNotTwo& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const HullPairUnavailable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const PreconditionViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
