// Command-line front end: parses monomial sets, runs the decision and
// classification routines, and prints machine-readable JSON reports.
//
// Exit code 0 means the command ran (verdicts never affect exit codes);
// any failure prints an error object {code, message, position?} and exits 1.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "monocrem/monocrem.hpp"

using nlohmann::json;
using namespace monocrem;

namespace {

json matrix_json(const IntMatrix& m) {
  json data = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) data.push_back(m(r, c).str());
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

std::string term_text(const Term& t) {
  if (t.is_zero()) return "0";
  std::string mono = format_monomial(Monomial(t.exponents));
  if (t.coeff == 1) return mono;
  if (t.coeff == -1) return "-" + mono;
  if (mono == "1") return t.coeff.str();
  return t.coeff.str() + "*" + mono;
}

json term_matrix_json(const TermMatrix& t) {
  json data = json::array();
  for (std::size_t r = 0; r < t.rows(); ++r)
    for (std::size_t c = 0; c < t.cols(); ++c) data.push_back(term_text(t(r, c)));
  return json{{"rows", t.rows()}, {"cols", t.cols()}, {"data", data}};
}

json set_json(const MonomialSet& f) {
  json monomials = json::array();
  json exponents = json::array();
  for (const Monomial& m : f.members()) {
    monomials.push_back(format_monomial(m));
    exponents.push_back(m.exponents());
  }
  return json{{"n", f.n()}, {"d", f.d()}, {"q", f.q()},
              {"monomials", monomials}, {"exponents", exponents}};
}

json certificates_json(const Certificates& c) {
  json out;
  out["degree"] = c.degree;
  if (c.delta_n) out["delta_n"] = c.delta_n->str();
  if (c.rank_a) out["rank_a"] = *c.rank_a;
  if (c.rank_ls) out["rank_ls"] = *c.rank_ls;
  if (c.rank_m) out["rank_m"] = *c.rank_m;
  if (c.components) out["components"] = *c.components;
  if (c.difference_rank) out["difference_rank"] = *c.difference_rank;
  if (c.difference_factors) {
    json factors = json::array();
    for (const BigInt& f : *c.difference_factors) factors.push_back(f.str());
    out["difference_factors"] = factors;
  }
  if (c.difference_lattice_standard)
    out["difference_lattice_standard"] = *c.difference_lattice_standard;
  if (c.graph) {
    out["graph"] = json{{"connected", c.graph->connected},
                        {"bipartite", c.graph->bipartite},
                        {"loops", c.graph->loops}};
  }
  return out;
}

json report_json(const BirationalityReport& rep) {
  return json{{"verdict", rep.birational() ? "Birational" : "NotBirational"},
              {"criterion", criterion_name(rep.criterion)},
              {"certificates", certificates_json(rep.certificates)}};
}

bool verify_mode() {
  const char* env = std::getenv("MONOCREM_VERIFY");
  return env != nullptr && std::string(env) != "0";
}

json run_decide(const MonomialSet& input) {
  DecideOptions opts;
  opts.verify = verify_mode();
  Decision decision = decide(input, opts);
  json out = report_json(decision.report);
  out["command"] = "decide";
  out["input"] = set_json(input);
  out["normalized"] = set_json(decision.normalized);
  out["normalization_changed"] = decision.normalization_changed;
  return out;
}

json run_cremona(const MonomialSet& f) {
  json out;
  out["command"] = "cremona";
  out["input"] = set_json(f);
  out["is_cremona_set"] = is_cremona_set(f);
  if (f.d() == 2 && f.q() == f.n() && is_cohesive(f))
    out["shape"] = degree2_shape_name(degree2_cremona_shape(f));
  return out;
}

json run_dual(const MonomialSet& f) {
  json out;
  out["command"] = "dual";
  out["input"] = set_json(f);
  out["dual"] = set_json(dual_complement(f));
  if (f.q() == f.n() && f.d() >= 1 && f.d() <= static_cast<int>(f.n()) - 1) {
    DualityCheck check = duality_check(f);
    out["duality_check"] = json{{"det_a", check.det_a.str()},
                                {"det_a_hat", check.det_a_hat.str()},
                                {"identity_holds", check.identity_holds}};
  }
  return out;
}

json run_syzygies(const MonomialSet& f, bool with_taylor) {
  json out;
  out["command"] = "syzygies";
  out["input"] = set_json(f);
  TermMatrix ls = linear_syzygy_matrix(f);
  IntMatrix s = specialize_ones(ls);
  auto dd = difference_matrix_and_digraph(f);
  out["ls"] = term_matrix_json(ls);
  out["s"] = matrix_json(s);
  out["m"] = matrix_json(dd.m);
  out["components"] = dd.components;
  out["rank_a"] = rank(log_matrix(f));
  out["rank_ls"] = term_rank(ls);
  out["rank_s"] = rank(s);
  out["rank_m"] = rank(dd.m);
  if (with_taylor) {
    TermMatrix taylor = taylor_matrix(f);
    out["taylor"] = term_matrix_json(taylor);
    // audit: every minor up to size 3 must be zero or a single unit term
    std::size_t checked = 0;
    bool all_unit = true;
    const std::size_t max_size = std::min<std::size_t>(3, std::min(taylor.rows(), taylor.cols()));
    for (std::size_t size = 1; size <= max_size; ++size) {
      monocrem::detail::for_each_combination(
          taylor.rows(), size, [&](const std::vector<std::size_t>& ri) {
            monocrem::detail::for_each_combination(
                taylor.cols(), size, [&](const std::vector<std::size_t>& ci) {
                  auto minor = term_minor(taylor, ri, ci);
                  ++checked;
                  if (minor.size() > 1 ||
                      (minor.size() == 1 && abs_val(minor[0].coeff) != 1))
                    all_unit = false;
                });
          });
    }
    out["taylor_minor_audit"] = json{{"checked", checked}, {"all_single_unit", all_unit}};
  }
  return out;
}

json run_polymatroid(const MonomialSet& f) {
  return json{{"command", "polymatroid"},
              {"input", set_json(f)},
              {"polymatroidal", is_polymatroidal(f)},
              {"linear_quotients_revlex", has_linear_quotients_revlex(f)}};
}

json run_graph(const MonomialSet& f) {
  GraphFacts facts = degree2_graph_facts(f);
  json out;
  out["command"] = "graph";
  out["input"] = set_json(f);
  out["connected"] = facts.connected;
  out["bipartite"] = facts.bipartite;
  out["loops"] = facts.loops;
  if (f.q() == f.n() && f.is_normalized() && facts.connected)
    out["shape"] = degree2_shape_name(degree2_cremona_shape(f));
  return out;
}

json class_json(const CremonaClass& cls) {
  json tags = json::array();
  if (cls.db) tags.push_back("DB");
  if (cls.complement_valid) tags.push_back("SquarefreeComplementValid");
  json reps = json::array();
  for (const Monomial& m : cls.representative.members())
    reps.push_back(format_monomial(m));
  return json{{"canonical_matrix", matrix_json(cls.canonical_matrix)},
              {"representative", reps},
              {"n", cls.n},
              {"d", cls.d},
              {"tags", tags}};
}

json run_classify(std::size_t n, std::optional<int> d, bool db, unsigned jobs,
                  bool prune) {
  ClassifyOptions opts;
  opts.jobs = jobs;
  opts.prune = prune;
  std::vector<CremonaClass> classes;
  if (db && !d) {
    classes = classify_db_squarefree_cremona(n, opts);
  } else {
    if (!d) fail(errc::wrong_degree, "classify needs --d unless --db is given");
    classes = classify_squarefree_cremona(n, *d, opts);
    if (db) {
      std::erase_if(classes, [](const CremonaClass& c) { return !c.db; });
    }
  }
  json list = json::array();
  for (const auto& cls : classes) list.push_back(class_json(cls));
  json out;
  out["command"] = "classify";
  out["n"] = n;
  if (d) out["d"] = *d;
  out["db"] = db;
  out["count"] = classes.size();
  out["classes"] = list;
  return out;
}

int emit_error(const Error& e, std::optional<std::size_t> line = std::nullopt) {
  json out{{"code", errc_name(e.code())}, {"message", e.what()}};
  if (e.position()) out["position"] = *e.position();
  if (line) out["line"] = *line;
  std::cout << out.dump(2) << "\n";
  return 1;
}

/// Process the inline argument, or one set per non-empty line of --file
/// (batch mode emits a JSON array; a failing line is reported with its
/// number).
template <typename Fn>
int run_set_command(const std::string& inline_set, const std::string& file, Fn&& fn) {
  std::size_t current_line = 0;
  try {
    if (file.empty()) {
      if (inline_set.empty()) fail(errc::empty_set, "no input set given");
      std::cout << fn(parse_monomials(inline_set)).dump(2) << "\n";
      return 0;
    }
    std::ifstream in(file);
    if (!in) fail(errc::empty_set, "cannot open file: " + file);
    json batch = json::array();
    std::string text;
    std::size_t line_no = 0;
    while (std::getline(in, text)) {
      ++line_no;
      if (text.find_first_not_of(" \t\r\n") == std::string::npos) continue;
      current_line = line_no;
      batch.push_back(fn(parse_monomials(text)));
    }
    if (batch.empty()) fail(errc::empty_set, "no monomial sets in file");
    std::cout << batch.dump(2) << "\n";
    return 0;
  } catch (const Error& e) {
    return emit_error(e, current_line ? std::optional<std::size_t>(current_line)
                                      : std::nullopt);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"birationality of monomial maps by exact integer arithmetic"};
  app.require_subcommand(1);

  struct SetArgs {
    std::string set;
    std::string file;
  };
  auto add_set_options = [](CLI::App* cmd, SetArgs& args) {
    cmd->add_option("set", args.set, "monomial set, e.g. \"x1x2, x1x3, x2x3\"");
    cmd->add_option("--file", args.file, "read one set per line from a file");
  };

  SetArgs decide_args, cremona_args, dual_args, syz_args, poly_args, graph_args;
  bool with_taylor = false;

  CLI::App* cmd_decide = app.add_subcommand("decide", "full birationality report");
  add_set_options(cmd_decide, decide_args);
  CLI::App* cmd_cremona = app.add_subcommand("cremona", "Cremona-set predicate and degree-2 shape");
  add_set_options(cmd_cremona, cremona_args);
  CLI::App* cmd_dual = app.add_subcommand("dual", "dual complement and duality identity");
  add_set_options(cmd_dual, dual_args);
  CLI::App* cmd_syz = app.add_subcommand("syzygies", "linear syzygy, numerical and difference matrices");
  add_set_options(cmd_syz, syz_args);
  cmd_syz->add_flag("--taylor", with_taylor, "include the Taylor matrix with a small-minor audit");
  CLI::App* cmd_poly = app.add_subcommand("polymatroid", "exchange property and linear quotients");
  add_set_options(cmd_poly, poly_args);
  CLI::App* cmd_graph = app.add_subcommand("graph", "degree-2 graph facts");
  add_set_options(cmd_graph, graph_args);

  std::size_t classify_n = 0;
  int classify_d = -1;
  bool classify_db = false;
  unsigned classify_jobs = 1;
  bool classify_no_prune = false;
  CLI::App* cmd_classify = app.add_subcommand("classify", "classify squarefree Cremona sets");
  cmd_classify->add_option("--n", classify_n, "number of variables")->required();
  cmd_classify->add_option("--d", classify_d, "degree (all degrees when omitted with --db)");
  cmd_classify->add_flag("--db", classify_db, "doubly stochastic sets only");
  cmd_classify->add_option("--jobs", classify_jobs, "worker threads for the enumeration");
  cmd_classify->add_flag("--no-prune", classify_no_prune, "disable the gcd(n,d) pruning in --db mode");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_decide) return run_set_command(decide_args.set, decide_args.file, run_decide);
    if (*cmd_cremona) return run_set_command(cremona_args.set, cremona_args.file, run_cremona);
    if (*cmd_dual) return run_set_command(dual_args.set, dual_args.file, run_dual);
    if (*cmd_syz)
      return run_set_command(syz_args.set, syz_args.file, [&](const MonomialSet& f) {
        return run_syzygies(f, with_taylor);
      });
    if (*cmd_poly) return run_set_command(poly_args.set, poly_args.file, run_polymatroid);
    if (*cmd_graph) return run_set_command(graph_args.set, graph_args.file, run_graph);
    if (*cmd_classify) {
      std::optional<int> d;
      if (classify_d >= 0) d = classify_d;
      std::cout << run_classify(classify_n, d, classify_db, classify_jobs,
                                !classify_no_prune)
                       .dump(2)
                << "\n";
      return 0;
    }
  } catch (const Error& e) {
    return emit_error(e);
  }
  return 0;
}
