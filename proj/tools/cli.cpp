#include "cli.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gcorr/correspondence.hpp"
#include "gcorr/endomorphism.hpp"
#include "gcorr/equivalence.hpp"
#include "gcorr/errors.hpp"
#include "gcorr/factorization.hpp"
#include "gcorr/harness.hpp"
#include "gcorr/io.hpp"
#include "gcorr/representation.hpp"

namespace gcorr::cli {

namespace {

using io::Json;

struct Report {
  std::string status = "ok";  // ok | violation | error
  Json details = Json::object();
  std::optional<std::uint64_t> seed;
  int exit_code() const { return status == "ok" ? 0 : status == "violation" ? 1 : 2; }
};

Report judged(bool ok, Json details) {
  Report r;
  r.status = ok ? "ok" : "violation";
  r.details = std::move(details);
  return r;
}

void print(const std::string& command, const Report& r, double tol, bool as_json, std::ostream& out) {
  Json j = {{"command", command}, {"status", r.status}, {"details", r.details}, {"tol", tol}};
  if (r.seed) j["seed"] = *r.seed;
  if (as_json) {
    out << j.dump(2) << '\n';
    return;
  }
  out << command << ": " << r.status << '\n';
  for (auto it = r.details.begin(); it != r.details.end(); ++it) out << "  " << it.key() << ": " << it.value().dump() << '\n';
  if (r.seed) out << "  seed: " << *r.seed << '\n';
}

ToeplitzRep load_rep(const std::string& path) { return io::rep_from_json(io::read_file(path), path); }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toeplitz representations of graph correspondences and endomorphisms of block algebras", "gcorr"};
  double tol_value = Tolerance::kDefault;
  bool as_json = false;
  bool schema = false;
  app.add_option("--tol", tol_value, "absolute/relative tolerance")->capture_default_str();
  app.add_flag("--json", as_json, "machine-readable report on stdout");
  app.add_flag("--schema", schema, "print the file schemas and exit");
  app.require_subcommand(0, 1);

  std::string in1, in2, dims_path, gamma_path, output;
  std::uint64_t seed = 0;
  int max_vertices = 4, max_edges = 6, max_dim = 6;

  auto* verify = app.add_subcommand("verify", "check the Toeplitz relations of a representation");
  verify->add_option("rep", in1)->required();

  auto* gen_rep = app.add_subcommand("gen-rep", "random representation of a graph");
  gen_rep->add_option("graph", in1)->required();
  gen_rep->add_option("--dims", dims_path)->required();
  gen_rep->add_option("--seed", seed)->required();
  gen_rep->add_option("-o,--output", output)->required();

  auto* ad = app.add_subcommand("ad", "the endomorphism Ad_tau of a representation");
  ad->add_option("rep", in1)->required();
  ad->add_option("-o,--output", output)->required();

  auto* factor = app.add_subcommand("factor", "factor an endomorphism as Ad_tau");
  factor->add_option("endo", in1)->required();
  factor->add_option("-o,--output", output, "output directory")->required();

  auto* equiv = app.add_subcommand("equiv", "recover a coherent unitary equivalence from two representations");
  equiv->add_option("rep1", in1)->required();
  equiv->add_option("rep2", in2)->required();
  equiv->add_option("-o,--output", output)->required();

  auto* conj = app.add_subcommand("conjugacy", "conjugacy witness for two representations and an automorphism");
  conj->add_option("rep1", in1)->required();
  conj->add_option("rep2", in2)->required();
  conj->add_option("--gamma", gamma_path)->required();
  conj->add_option("-o,--output", output)->required();

  auto* cois = app.add_subcommand("coisometric", "per-vertex coisometric (Cuntz-Pimsner) check");
  cois->add_option("rep", in1)->required();

  auto* cue_apply = app.add_subcommand("cue-apply", "pull a representation back along a CUE");
  cue_apply->add_option("cue", in1)->required();
  cue_apply->add_option("rep", in2)->required();
  cue_apply->add_option("-o,--output", output)->required();

  auto* graph_iso = app.add_subcommand("graph-iso", "search for a graph isomorphism");
  graph_iso->add_option("graph1", in1)->required();
  graph_iso->add_option("graph2", in2)->required();
  graph_iso->add_option("-o,--output", output);

  auto* gen_instance = app.add_subcommand("gen-instance", "random graph, dimensions and representation");
  gen_instance->add_option("--max-vertices", max_vertices)->capture_default_str();
  gen_instance->add_option("--max-edges", max_edges)->capture_default_str();
  gen_instance->add_option("--max-dim", max_dim)->capture_default_str();
  gen_instance->add_option("--seed", seed)->required();
  gen_instance->add_option("-o,--output", output, "output directory")->required();

  auto* gen_cue = app.add_subcommand("gen-cue", "random CUE of a graph onto itself");
  gen_cue->add_option("graph", in1)->required();
  gen_cue->add_option("--seed", seed)->required();
  gen_cue->add_option("-o,--output", output)->required();

  auto* gen_auto = app.add_subcommand("gen-automorphism", "random automorphism of the block algebra");
  gen_auto->add_option("dims", in1)->required();
  gen_auto->add_option("--seed", seed)->required();
  gen_auto->add_option("-o,--output", output)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  if (schema) {
    out << io::schemas();
    return 0;
  }
  const auto subs = app.get_subcommands();
  if (subs.empty()) {
    err << "a subcommand is required (see --help)\n";
    return 2;
  }
  const std::string command = subs.front()->get_name();

  Report report;
  try {
    const Tolerance tol(tol_value);
    if (command == "verify") {
      const auto r = verify_toeplitz(load_rep(in1), tol);
      report = judged(r.pass, {{"source_support", r.source_support},
                               {"range_support", r.range_support},
                               {"inner_products", r.inner_products},
                               {"projections", r.projections},
                               {"max_violation", r.max_violation()}});
    } else if (command == "gen-rep") {
      GraphPtr g = io::graph_from_json(io::read_file(in1), in1);
      const DimVector d = io::dims_from_json(io::read_file(dims_path), dims_path);
      const ToeplitzRep rep = random_rep(g, d, seed);
      const auto check = verify_toeplitz(rep, tol);
      io::write_file(output, io::to_json(rep));
      report = judged(check.pass, {{"max_violation", check.max_violation()}, {"output", output}});
      report.seed = seed;
    } else if (command == "ad") {
      const Endo a = ad_endo(load_rep(in1));
      io::write_file(output, io::to_json(a));
      report.details = {{"matrix_units", a.layout().unit_count()}, {"output", output}};
    } else if (command == "factor") {
      const Endo a = io::endo_from_json(io::read_file(in1), in1);
      const FactorizationResult r = factor_endo(a, tol);
      std::filesystem::create_directories(output);
      const std::filesystem::path dir(output);
      const Json rep_json = io::report_json(r);
      io::write_file((dir / "graph.json").string(), io::to_json(*r.graph));
      io::write_file((dir / "rep.json").string(), io::to_json(r.rep));
      io::write_file((dir / "report.json").string(), rep_json);
      report.details = rep_json;
    } else if (command == "equiv") {
      const ToeplitzRep t1 = load_rep(in1);
      const ToeplitzRep t2 = load_rep(in2);
      const Cue c = recover_cue(t1, t2, tol);
      const auto check = cue_verify(c, tol);
      io::write_file(output, io::to_json(c));
      report = judged(check.pass, {{"cue_violation", check.max_violation()}, {"output", output}});
    } else if (command == "conjugacy") {
      const ToeplitzRep t1 = load_rep(in1);
      const ToeplitzRep t2 = load_rep(in2);
      const Endo gamma = io::endo_from_json(io::read_file(gamma_path), gamma_path);
      const auto g = BlockAutomorphism::from_endo(gamma, tol);
      const ConjugacyWitness w = conjugacy_witness(t1, t2, g, tol);
      io::write_file(output, io::to_json(w));
      report.details = {{"residual", w.residual}, {"output", output}};
    } else if (command == "coisometric") {
      const auto r = coisometric_check(load_rep(in1), tol);
      Json at = Json::object(), viol = Json::object();
      for (const auto& [v, ok] : r.at_vertex) at[v] = ok;
      for (const auto& [v, x] : r.violation) viol[v] = x;
      report = judged(r.all, {{"coisometric", r.all}, {"at_vertex", std::move(at)}, {"violation", std::move(viol)}});
    } else if (command == "cue-apply") {
      const Cue c = io::cue_from_json(io::read_file(in1), in1);
      const ToeplitzRep pulled = pullback(load_rep(in2), c, tol);
      const auto check = verify_toeplitz(pulled, tol);
      io::write_file(output, io::to_json(pulled));
      report = judged(check.pass, {{"max_violation", check.max_violation()}, {"output", output}});
    } else if (command == "graph-iso") {
      GraphPtr g1 = io::graph_from_json(io::read_file(in1), in1);
      GraphPtr g2 = io::graph_from_json(io::read_file(in2), in2);
      const auto iso = find_isomorphism(*g1, *g2);
      if (iso) {
        if (!output.empty()) io::write_file(output, io::to_json(*iso));
        report.details = {{"isomorphic", true}, {"isomorphism", io::to_json(*iso)}};
      } else {
        report = judged(false, {{"isomorphic", false}});
      }
    } else if (command == "gen-instance") {
      const Instance inst = random_instance(max_vertices, max_edges, max_dim, seed);
      std::filesystem::create_directories(output);
      const std::filesystem::path dir(output);
      io::write_file((dir / "graph.json").string(), io::to_json(*inst.graph));
      io::write_file((dir / "dims.json").string(), io::to_json(inst.dims, inst.graph->vertices()));
      io::write_file((dir / "rep.json").string(), io::to_json(inst.rep));
      const auto check = verify_toeplitz(inst.rep, tol);
      report = judged(check.pass, {{"vertices", inst.graph->vertex_count()},
                                   {"edges", inst.graph->edge_count()},
                                   {"draws", inst.draws},
                                   {"max_violation", check.max_violation()}});
      report.seed = seed;
    } else if (command == "gen-cue") {
      GraphPtr g = io::graph_from_json(io::read_file(in1), in1);
      const Cue c = random_cue(g, seed);
      const auto check = cue_verify(c, tol);
      io::write_file(output, io::to_json(c));
      report = judged(check.pass, {{"cue_violation", check.max_violation()}, {"output", output}});
      report.seed = seed;
    } else if (command == "gen-automorphism") {
      std::vector<std::string> order;
      const DimVector d = io::dims_from_json(io::read_file(in1), in1, &order);
      const BlockAutomorphism g = random_automorphism(BlockLayout(order, d), seed);
      io::write_file(output, io::to_json(g.endo()));
      Json perm = Json::object();
      for (const auto& v : order) perm[v] = g.block_permutation().at(v);
      report.details = {{"block_permutation", std::move(perm)}, {"output", output}};
      report.seed = seed;
    }
  } catch (const Error& e) {
    report.status = e.kind() == ErrorKind::Input ? "error" : "violation";
    report.details = {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
    err << e.what() << '\n';
  } catch (const std::exception& e) {
    report.status = "error";
    report.details = {{"error", "InternalError"}, {"message", e.what()}};
    err << "internal error: " << e.what() << '\n';
  }
  print(command, report, tol_value, as_json, out);
  return report.exit_code();
}

}  // namespace gcorr::cli
