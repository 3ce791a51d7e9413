// Command-line front end: validation, representability decisions,
// construction and verification of realizations, and the small-order census.
//
// Machine output is JSON on stdout (one report document per run; census
// streams one record per line before the summary).  Exit codes: 0 for a
// positive verdict or successful construction, 1 for a definite negative
// verdict (with witnesses in the report), 2 for usage or input errors.

#include <chrono>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "placefn/census.hpp"
#include "placefn/determining_pair.hpp"
#include "placefn/identities.hpp"
#include "placefn/io.hpp"
#include "placefn/quasi_order.hpp"

using namespace placefn;
using nlohmann::json;

namespace {

struct GlobalOpts {
  bool json_out = true;
  bool quiet = false;
  std::uint64_t seed = 0x5EED;
  std::size_t cap = kDefaultStateCap;
  bool oracle = false;
};

json move_seq_to_json(const MoveSeq& seq, const Carrier& carrier) {
  json a = json::array();
  for (const OpMove& m : seq)
    a.push_back(json::array({m.pos, carrier.name(m.operand)}));
  return a;
}

json violation_to_json(const Violation& v, const Carrier& carrier, bool with_sequences) {
  json j;
  j["g"] = carrier.name(v.g);
  j["tuple"] = to_string(v.tuple, carrier);
  j["left"] = carrier.name(v.left);
  j["right"] = carrier.name(v.right);
  if (with_sequences) {
    j["seq_u"] = move_seq_to_json(v.seq_u, carrier);
    j["seq_v"] = move_seq_to_json(v.seq_v, carrier);
  }
  return j;
}

class Reporter {
 public:
  Reporter(const GlobalOpts& opts, std::string command) : opts_(opts) {
    doc_["schema"] = 1;
    doc_["command"] = std::move(command);
    doc_["inputs"] = json::array();
    start_ = std::chrono::steady_clock::now();
  }

  void input(const std::string& path) { doc_["inputs"].push_back(path); }
  json& doc() { return doc_; }
  void compact() { compact_ = true; }

  int finish(int exit_code, const std::string& summary) {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    doc_["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    doc_["exit"] = exit_code;
    if (opts_.json_out) std::cout << doc_.dump(compact_ ? -1 : 2) << "\n";
    if (!opts_.quiet) std::cerr << summary << "\n";
    return exit_code;
  }

 private:
  const GlobalOpts& opts_;
  json doc_;
  bool compact_ = false;
  std::chrono::steady_clock::time_point start_;
};

MultiSemigroup require_algebra(const std::string& path) {
  LoadedAlgebra la = load_algebra_file(path);
  if (!la.algebra) {
    const AssocFailure& f = *la.failure;
    fail(ErrorCode::malformed_table,
         path + ": operation " + std::to_string(f.op) + " not associative at (" +
             la.carrier->name(f.x) + "," + la.carrier->name(f.y) + "," + la.carrier->name(f.z) +
             ")");
  }
  return std::move(*la.algebra);
}

int cmd_validate_algebra(const GlobalOpts& g, const std::string& path) {
  Reporter rep(g, "validate-algebra");
  rep.input(path);
  LoadedAlgebra la = load_algebra_file(path);
  rep.doc()["order"] = la.carrier->size();
  rep.doc()["n"] = la.tables.size();
  if (la.algebra) {
    rep.doc()["valid"] = true;
    return rep.finish(0, "valid: " + std::to_string(la.tables.size()) + " associative operations");
  }
  const AssocFailure& f = *la.failure;
  rep.doc()["valid"] = false;
  rep.doc()["witnesses"]["failure"] = {{"op", f.op},
                                       {"x", la.carrier->name(f.x)},
                                       {"y", la.carrier->name(f.y)},
                                       {"z", la.carrier->name(f.z)}};
  return rep.finish(1, "not associative at operation " + std::to_string(f.op));
}

int cmd_check_identities(const GlobalOpts& g, const std::string& functions_path, bool exhaustive,
                         std::size_t carrier_size, std::size_t arity,
                         std::uint64_t random_assignments) {
  Reporter rep(g, "check-identities");
  std::vector<NamedFunction> samples;
  if (!functions_path.empty()) {
    rep.input(functions_path);
    FunctionSet fs = load_function_set_file(functions_path);
    samples = std::move(fs.functions);
  } else if (exhaustive) {
    samples = all_total_functions(make_carrier(carrier_size), arity);
  } else {
    fail(ErrorCode::malformed_input, "need --functions or --exhaustive");
  }

  IdentityCheckOptions opts;
  opts.exhaustive = exhaustive;
  opts.seed = g.seed;
  opts.random_assignments = random_assignments;

  bool all_pass = true;
  json reports = json::array();
  for (const IdentityReport& r : verify_all_identities(samples, opts)) {
    json jr;
    jr["identity_id"] = to_string(r.id);
    jr["samples_checked"] = r.samples_checked;
    jr["failures"] = json::array();
    for (const IdentityFailure& f : r.failures)
      jr["failures"].push_back({{"functions", f.functions}, {"detail", f.detail}});
    reports.push_back(std::move(jr));
    all_pass = all_pass && r.passed();
  }
  rep.doc()["reports"] = std::move(reports);
  rep.doc()["all_pass"] = all_pass;
  return rep.finish(all_pass ? 0 : 1, all_pass ? "all identities hold" : "identity failures found");
}

int cmd_check_representable(const GlobalOpts& g, const std::string& path, bool witness) {
  Reporter rep(g, "check-representable");
  rep.input(path);
  MultiSemigroup alg = require_algebra(path);
  RepresentabilityResult r = is_representable(alg, g.cap);
  rep.doc()["representable"] = r.representable;
  rep.doc()["states"] = r.automaton ? r.automaton->size() : 0;
  if (g.oracle) {
    const bool oracle_ok = !bruteforce_violation(alg).has_value();
    rep.doc()["oracle_agrees"] = (oracle_ok == r.representable);
    if (oracle_ok != r.representable)
      return rep.finish(1, "oracle disagrees with the decision procedure");
  }
  if (r.representable) return rep.finish(0, "representable");

  json vj = violation_to_json(*r.violation, *alg.carrier(), witness);
  if (witness) {
    // Re-derive the witness by direct evaluation.
    const Violation& v = *r.violation;
    vj["verified"] = mu_star(alg, v.seq_u) == v.tuple && mu_star(alg, v.seq_v) == v.tuple &&
                     eval_sequence(alg, v.g, v.seq_u) == v.left &&
                     eval_sequence(alg, v.g, v.seq_v) == v.right && v.left != v.right;
  }
  rep.doc()["violation"] = std::move(vj);
  return rep.finish(1, "not representable");
}

int cmd_build_representation(const GlobalOpts& g, const std::string& path,
                             const std::string& out) {
  Reporter rep(g, "build-representation");
  rep.input(path);
  MultiSemigroup alg = require_algebra(path);
  RepresentabilityResult r = is_representable(alg, g.cap);
  if (!r.representable) {
    rep.doc()["representable"] = false;
    rep.doc()["violation"] = violation_to_json(*r.violation, *alg.carrier(), true);
    return rep.finish(1, "not representable");
  }
  Representation fr = faithful_representation(*r.automaton);
  const std::string doc = representation_to_json(fr);
  rep.doc()["representable"] = true;
  rep.doc()["states"] = r.automaton->size();
  rep.doc()["points"] = fr.points()->size();
  if (out.empty()) {
    std::cout << doc << "\n";
    if (!g.quiet) std::cerr << "faithful realization on " << fr.points()->size() << " points\n";
    return 0;
  }
  write_file(out, doc);
  rep.doc()["output"] = out;
  return rep.finish(0, "wrote " + out);
}

int cmd_totalize(const GlobalOpts& g, const std::string& path, const std::string& out) {
  Reporter rep(g, "totalize");
  rep.input(path);
  Representation r = load_representation_file(path);
  HomomorphismCheck hom = verify_representation(r);
  if (!hom.ok) {
    rep.doc()["is_representation"] = false;
    rep.doc()["witnesses"]["failing_triple"] = {
        {"g1", r.algebra().carrier()->name(hom.g1)},
        {"g2", r.algebra().carrier()->name(hom.g2)},
        {"pos", hom.pos}};
    return rep.finish(1, "input violates the homomorphism law");
  }
  Representation t = totalize(r);
  const std::string doc = representation_to_json(t);
  rep.doc()["points"] = t.points()->size();
  rep.doc()["total"] = true;
  if (out.empty()) {
    std::cout << doc << "\n";
    if (!g.quiet) std::cerr << "totalized onto " << t.points()->size() << " points\n";
    return 0;
  }
  write_file(out, doc);
  rep.doc()["output"] = out;
  return rep.finish(0, "wrote " + out);
}

int cmd_extend_unitary(const GlobalOpts& g, const std::string& path, std::size_t cap,
                       const std::string& out) {
  Reporter rep(g, "extend-unitary");
  rep.input(path);
  FunctionSet fs = load_function_set_file(path);
  std::vector<PlaceFunction> phi0;
  for (const NamedFunction& f : fs.functions) phi0.push_back(f.fn);
  std::vector<PlaceFunction> closed = unitary_extension(phi0, fs.arity, fs.carrier, cap);

  FunctionSet result{fs.arity, fs.carrier, {}};
  for (std::size_t i = 0; i < closed.size(); ++i) {
    std::string name = i < fs.arity ? "e" + std::to_string(i + 1) : "w" + std::to_string(i);
    for (const NamedFunction& f : fs.functions)
      if (f.fn == closed[i]) { name = f.name; break; }
    result.functions.push_back(NamedFunction{name, closed[i]});
  }
  const std::string doc = function_set_to_json(result);
  rep.doc()["size"] = closed.size();
  if (out.empty()) {
    std::cout << doc << "\n";
    if (!g.quiet) std::cerr << "closure has " << closed.size() << " functions\n";
    return 0;
  }
  write_file(out, doc);
  rep.doc()["output"] = out;
  return rep.finish(0, "wrote " + out);
}

int cmd_check_determining_pair(const GlobalOpts& g, const std::string& algebra_path,
                               const std::string& pair_path) {
  Reporter rep(g, "check-determining-pair");
  rep.input(algebra_path);
  rep.input(pair_path);
  MultiSemigroup alg = require_algebra(algebra_path);
  DeterminingPair dp = load_pair_file(pair_path, alg);

  DeterminingPairReport report;
  try {
    report = validate_determining_pair(alg, dp, g.cap);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::not_unitary_extension) throw;
    rep.doc()["unitary_extension"] = false;
    rep.doc()["witnesses"]["extension"] = e.what();
    return rep.finish(1, "extension is not unitary over the base");
  }
  rep.doc()["unitary_extension"] = true;
  json axioms = json::array();
  for (int i = 0; i < 5; ++i)
    axioms.push_back({{"axiom", i + 1},
                      {"holds", report.axiom[i].holds},
                      {"witness", report.axiom[i].witness}});
  rep.doc()["axioms"] = std::move(axioms);
  rep.doc()["note"] = report.note;
  rep.doc()["all_pass"] = report.all_pass();
  return rep.finish(report.all_pass() ? 0 : 1,
                    report.all_pass() ? "determining pair" : "axiom failures");
}

int cmd_decompose(const GlobalOpts& g, const std::string& path) {
  Reporter rep(g, "decompose");
  rep.input(path);
  Representation r = load_representation_file(path);
  DecomposeResult d = decompose(r, g.cap);

  json family = json::array();
  for (const PointDecomposition& p : d.family) {
    json pj;
    json pt = json::array();
    for (std::size_t i = 0; i < p.point.size(); ++i)
      pt.push_back(r.points()->name(p.point[i]));
    pj["point"] = std::move(pt);
    pj["contained"] = p.contained;
    pj["classes"] = p.pair.classes.class_count();
    pj["W_size"] = p.pair.exceptional.size();
    family.push_back(std::move(pj));
  }
  rep.doc()["family"] = std::move(family);
  rep.doc()["extension_size"] = d.extension.algebra.size();
  rep.doc()["union_matches"] = d.union_matches;
  if (d.mismatch) rep.doc()["mismatch"] = r.algebra().carrier()->name(*d.mismatch);
  return rep.finish(d.union_matches ? 0 : 1,
                    d.union_matches ? "union of simplest members reproduces the input"
                                    : "union mismatch");
}

int cmd_check_chi(const GlobalOpts& g, const std::string& algebra_path,
                  const std::string& relation_path) {
  Reporter rep(g, "check-chi");
  rep.input(algebra_path);
  rep.input(relation_path);
  MultiSemigroup alg = require_algebra(algebra_path);
  BinaryRelation chi = load_relation_file(relation_path, alg.carrier());

  ProjectionSystemReport sys = check_projection_system(alg, chi, g.cap);
  rep.doc()["closed_condition"] = sys.closed_condition;
  if (sys.violation)
    rep.doc()["witnesses"]["violation"] = violation_to_json(*sys.violation, *alg.carrier(), true);
  rep.doc()["quasi_order"] = sys.quasi_order;
  if (!sys.quasi_order) rep.doc()["witnesses"]["quasi_order"] = sys.quasi_order_witness;
  rep.doc()["l_regular"] = sys.l_regular.holds;
  if (sys.l_regular.witness) {
    const auto& w = *sys.l_regular.witness;
    rep.doc()["witnesses"]["l_regular"] = {{"x", alg.carrier()->name(w.x)},
                                           {"y", alg.carrier()->name(w.y)},
                                           {"z", alg.carrier()->name(w.z)},
                                           {"pos", w.pos}};
  }
  rep.doc()["v_negative"] = sys.v_negative.holds;
  if (sys.v_negative.witness) {
    const auto& w = *sys.v_negative.witness;
    rep.doc()["witnesses"]["v_negative"] = {{"g", alg.carrier()->name(w.g)},
                                            {"state", to_string(w.state, *alg.carrier())},
                                            {"slot", w.slot}};
  }
  rep.doc()["all_pass"] = sys.all_pass();
  rep.doc()["note"] = kSelectorSlotReading;
  return rep.finish(sys.all_pass() ? 0 : 1,
                    sys.all_pass() ? "projection system conditions hold" : "conditions fail");
}

int cmd_build_projection_rep(const GlobalOpts& g, const std::string& algebra_path,
                             const std::string& relation_path, const std::string& out) {
  Reporter rep(g, "build-projection-rep");
  rep.input(algebra_path);
  rep.input(relation_path);
  MultiSemigroup alg = require_algebra(algebra_path);
  BinaryRelation chi = load_relation_file(relation_path, alg.carrier());

  ProjectionSystemReport sys = check_projection_system(alg, chi, g.cap);
  if (!sys.all_pass()) {
    rep.doc()["system_ok"] = false;
    return rep.finish(1, "projection system conditions fail");
  }
  ProjectionRepresentation pr = build_projection_representation(alg, chi, g.cap);
  rep.doc()["system_ok"] = true;
  rep.doc()["points"] = pr.rep.points()->size();
  rep.doc()["chi_matches"] = pr.chi_matches;
  rep.doc()["faithful"] = pr.faithful;
  const std::string doc = representation_to_json(pr.rep);
  if (out.empty()) {
    std::cout << doc << "\n";
    if (!g.quiet)
      std::cerr << "projection realization on " << pr.rep.points()->size() << " points\n";
    return (pr.chi_matches && pr.faithful) ? 0 : 1;
  }
  write_file(out, doc);
  rep.doc()["output"] = out;
  return rep.finish((pr.chi_matches && pr.faithful) ? 0 : 1,
                    pr.chi_matches ? "wrote " + out : "chi mismatch");
}

int cmd_census(const GlobalOpts& g, std::size_t n, std::size_t order, bool dedup,
               std::size_t workers) {
  Reporter rep(g, "census");
  rep.compact();
  CensusOptions opts;
  opts.dedup = dedup;
  opts.oracle = g.oracle;
  opts.cap = g.cap;
  opts.workers = workers;
  std::vector<CensusRecord> records = census(n, order, opts);

  std::size_t representable = 0;
  bool oracle_ok = true;
  const Carrier point_names = Carrier::of_size(order);
  for (const CensusRecord& r : records) {
    representable += r.representable;
    if (r.oracle_agrees && !*r.oracle_agrees) oracle_ok = false;
    if (g.json_out) {
      json jr;
      jr["id"] = r.id;
      jr["tables"] = r.table_indices;
      jr["representable"] = r.representable;
      jr["states"] = r.state_count;
      if (r.violation) jr["violation"] = violation_to_json(*r.violation, point_names, false);
      if (r.oracle_agrees) jr["oracle_agrees"] = *r.oracle_agrees;
      std::cout << jr.dump() << "\n";
    }
  }
  rep.doc()["n"] = n;
  rep.doc()["order"] = order;
  rep.doc()["count"] = records.size();
  rep.doc()["representable"] = representable;
  rep.doc()["dedup"] = dedup;
  if (g.oracle) rep.doc()["oracle_agrees"] = oracle_ok;
  return rep.finish(oracle_ok ? 0 : 1,
                    std::to_string(representable) + "/" + std::to_string(records.size()) +
                        " representable");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite multiplace-function algebra toolkit"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_flag("--json,!--no-json", g.json_out, "machine-readable output (default)");
  app.add_flag("--quiet", g.quiet, "suppress the stderr summary");
  app.add_option("--seed", g.seed, "seed for randomized checks");
  app.add_option("--cap", g.cap, "state / element cap for closures");
  app.add_flag("--oracle", g.oracle, "run the independent brute-force cross-check");

  std::string algebra_path, functions_path, pair_path, relation_path, rep_path, out;
  bool witness = false, exhaustive = false, dedup = false;
  std::size_t carrier_size = 2, arity = 2, ext_cap = 100'000, n_ops = 2, order = 2, workers = 0;
  std::uint64_t random_assignments = 1000;

  auto* validate = app.add_subcommand("validate-algebra", "check operation tables");
  validate->add_option("algebra", algebra_path)->required();

  auto* idents = app.add_subcommand("check-identities", "verify the composition laws");
  idents->add_option("--functions", functions_path, "function-set file of samples");
  idents->add_flag("--exhaustive", exhaustive, "enumerate all total functions");
  idents->add_option("--carrier-size", carrier_size);
  idents->add_option("--arity", arity);
  idents->add_option("--random-assignments", random_assignments);

  auto* checkrep = app.add_subcommand("check-representable", "decide the closed condition");
  checkrep->add_option("algebra", algebra_path)->required();
  checkrep->add_flag("--witness", witness, "include and re-verify witness chains");

  auto* buildrep = app.add_subcommand("build-representation", "construct the faithful realization");
  buildrep->add_option("algebra", algebra_path)->required();
  buildrep->add_option("-o,--output", out);

  auto* total = app.add_subcommand("totalize", "extend every function by a sentinel point");
  total->add_option("representation", rep_path)->required();
  total->add_option("-o,--output", out);

  auto* extend = app.add_subcommand("extend-unitary", "close total functions under composition");
  extend->add_option("functions", functions_path)->required();
  extend->add_option("--cap", ext_cap, "size cap for the closure");
  extend->add_option("-o,--output", out);

  auto* checkpair = app.add_subcommand("check-determining-pair", "validate the pair axioms");
  checkpair->add_option("algebra", algebra_path)->required();
  checkpair->add_option("pair", pair_path)->required();

  auto* decomp = app.add_subcommand("decompose", "split into simplest members");
  decomp->add_option("representation", rep_path)->required();

  auto* checkchi = app.add_subcommand("check-chi", "check a candidate projection quasi-order");
  checkchi->add_option("algebra", algebra_path)->required();
  checkchi->add_option("relation", relation_path)->required();

  auto* buildproj =
      app.add_subcommand("build-projection-rep", "realize a prescribed projection quasi-order");
  buildproj->add_option("algebra", algebra_path)->required();
  buildproj->add_option("relation", relation_path)->required();
  buildproj->add_option("-o,--output", out);

  auto* cens = app.add_subcommand("census", "classify all table tuples of one order");
  cens->add_option("--n", n_ops, "number of operations");
  cens->add_option("--order", order, "carrier size");
  cens->add_flag("--dedup", dedup, "keep one representative per relabeling class");
  cens->add_option("--workers", workers, "worker threads (0 = hardware)");

  // Global flags are accepted after the subcommand as well.
  for (CLI::App* sc : app.get_subcommands(nullptr)) sc->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate_algebra(g, algebra_path);
    if (idents->parsed())
      return cmd_check_identities(g, functions_path, exhaustive, carrier_size, arity,
                                  random_assignments);
    if (checkrep->parsed()) return cmd_check_representable(g, algebra_path, witness);
    if (buildrep->parsed()) return cmd_build_representation(g, algebra_path, out);
    if (total->parsed()) return cmd_totalize(g, rep_path, out);
    if (extend->parsed()) return cmd_extend_unitary(g, functions_path, ext_cap, out);
    if (checkpair->parsed()) return cmd_check_determining_pair(g, algebra_path, pair_path);
    if (decomp->parsed()) return cmd_decompose(g, rep_path);
    if (checkchi->parsed()) return cmd_check_chi(g, algebra_path, relation_path);
    if (buildproj->parsed()) return cmd_build_projection_rep(g, algebra_path, relation_path, out);
    if (cens->parsed()) return cmd_census(g, n_ops, order, dedup, workers);
  } catch (const Error& e) {
    json err;
    err["schema"] = 1;
    err["error"] = e.what();
    if (g.json_out) std::cout << err.dump(2) << "\n";
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
