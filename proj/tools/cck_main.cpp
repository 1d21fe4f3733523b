// cck — exact computations in cellular crystals over symmetrizable Cartan data.
//
// Subcommands: cartan validate | word {reduce,braid,all,endin} | act | graph |
// member {binfty,demazure} | estar | iso {grow,transport} | connect | hshift |
// blambda | verify.  Exit codes: 0 ok, 2 verification failure, 3 bad
// configuration, 4 budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cck/json_io.hpp"
#include "cck/suites.hpp"

namespace {

using namespace cck;

struct CommonOpts {
  std::string type;        // builtin name
  std::string cartan_path; // or JSON file
  std::string word_csv;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::size_t budget = 0;  // 0 = default / CCK_BUDGET
};

SearchBudget resolve_budget(const CommonOpts& opts) {
  SearchBudget b;
  std::size_t v = opts.budget;
  if (v == 0) {
    if (const char* env = std::getenv("CCK_BUDGET")) {
      char* end = nullptr;
      unsigned long long parsed = std::strtoull(env, &end, 10);
      if (end == env || *end != '\0' || parsed == 0)
        throw ConfigError("CCK_BUDGET must be a positive integer");
      v = static_cast<std::size_t>(parsed);
    }
  }
  if (v != 0) {
    b.word_closure_cap = v;
    b.path_nodes = v;
    b.grow_steps = v;
  }
  return b;
}

CartanDatum resolve_datum(const CommonOpts& opts) {
  if (!opts.type.empty() && !opts.cartan_path.empty())
    throw ConfigError("give either --type or --cartan, not both");
  if (!opts.type.empty()) return CartanDatum::builtin(opts.type);
  if (!opts.cartan_path.empty()) {
    std::ifstream in(opts.cartan_path);
    if (!in) throw ConfigError("cannot open '" + opts.cartan_path + "'");
    json j;
    in >> j;
    return CartanDatum::from_json(j);
  }
  throw ConfigError("a Cartan datum is required (--type or --cartan)");
}

CellularCrystal resolve_crystal(const CommonOpts& opts, const CartanDatum& datum) {
  if (opts.word_csv.empty()) throw ConfigError("--word is required");
  Word w = parse_word(datum, opts.word_csv);
  return CellularCrystal(datum, ReducedWord(datum, w));
}

CellVec parse_cellvec(const std::string& csv, std::size_t expect) {
  CellVec out;
  std::string token;
  std::istringstream is(csv);
  while (std::getline(is, token, ',')) {
    try {
      out.push_back(std::stoll(token));
    } catch (...) {
      throw ConfigError("bad integer '" + token + "' in vector");
    }
  }
  if (expect && out.size() != expect)
    throw ConfigError("vector length " + std::to_string(out.size()) + " does not match word length " +
                      std::to_string(expect));
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string dot_node(const CellVec& x) {
  std::string s;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k) s += "_";
    s += x[k] < 0 ? "m" + std::to_string(-x[k]) : std::to_string(x[k]);
  }
  return s;
}

int cmd_graph(const CommonOpts& opts, Int radius) {
  CartanDatum datum = resolve_datum(opts);
  CellularCrystal c = resolve_crystal(opts, datum);
  if (radius < 0) throw ConfigError("radius must be >= 0");

  std::vector<CellVec> nodes;
  CellVec x(c.length(), -radius);
  bool more = true;
  while (more) {
    nodes.push_back(x);
    more = false;
    for (std::size_t k = c.length(); k-- > 0;) {
      if (x[k] < radius) {
        ++x[k];
        more = true;
        break;
      }
      x[k] = -radius;
    }
  }
  auto in_box = [&](const CellVec& v) {
    return std::all_of(v.begin(), v.end(), [&](Int t) { return t >= -radius && t <= radius; });
  };

  if (opts.format == "dot") {
    std::cout << "digraph crystal {\n";
    for (const CellVec& v : nodes) std::cout << "  " << dot_node(v) << ";\n";
    for (const CellVec& v : nodes)
      for (Idx i = 0; i < datum.rank(); ++i) {
        if (!c.letter_present(i)) continue;
        CellVec t = *c.f_op(i, v);
        if (in_box(t))
          std::cout << "  " << dot_node(v) << " -> " << dot_node(t) << " [label=\""
                    << datum.label(i) << "\"];\n";
      }
    std::cout << "}\n";
    return 0;
  }
  json jnodes = json::array(), jedges = json::array();
  for (const CellVec& v : nodes) jnodes.push_back(cellvec_to_json(v));
  for (const CellVec& v : nodes)
    for (Idx i = 0; i < datum.rank(); ++i) {
      if (!c.letter_present(i)) continue;
      CellVec t = *c.f_op(i, v);
      if (in_box(t))
        jedges.push_back(json{{"from", cellvec_to_json(v)},
                              {"to", cellvec_to_json(t)},
                              {"i", datum.label(i)}});
    }
  emit(json{{"cartan", datum.to_json()},
            {"word", json::parse(crystal_to_json(c).at("word").dump())},
            {"radius", radius},
            {"nodes", jnodes},
            {"edges", jedges}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cellular-crystal computations"};
  app.require_subcommand(1);

  CommonOpts opts;
  app.add_option("--type", opts.type, "builtin Cartan type (A3, B2, G2, A1^(1), ...)");
  app.add_option("--cartan", opts.cartan_path, "Cartan datum JSON file");
  app.add_option("--word", opts.word_csv, "reduced word, comma-separated labels");
  app.add_option("--format", opts.format, "output format: json | text | dot");
  app.add_option("--seed", opts.seed, "seed for sampled suites");
  app.add_option("--budget", opts.budget, "override search budgets (also: CCK_BUDGET)");

  // cartan validate
  auto* cartan_cmd = app.add_subcommand("cartan", "Cartan datum utilities");
  auto* cartan_validate = cartan_cmd->add_subcommand("validate", "load, canonicalize, report");

  // word subcommands
  auto* word_cmd = app.add_subcommand("word", "reduced-word utilities");
  auto* word_reduce = word_cmd->add_subcommand("reduce", "reducedness and inversion sequence");
  auto* word_braid = word_cmd->add_subcommand("braid", "one-step braid neighbors");
  auto* word_all = word_cmd->add_subcommand("all", "Matsumoto closure");
  auto* word_endin = word_cmd->add_subcommand("endin", "a word of the class ending in a letter");
  std::string end_label;
  word_endin->add_option("--end", end_label, "required last letter")->required();

  // act
  auto* act_cmd = app.add_subcommand("act", "apply an operator program");
  std::string program_text, start_csv;
  bool compose = false, trace_flag = false;
  act_cmd->add_option("--program", program_text, "e.g. f1,f2,emax1,fs2,e1^3");
  act_cmd->add_option("--start", start_csv, "starting vector (default zero)");
  act_cmd->add_flag("--compose", compose, "read the program as a composition (rightmost first)");
  act_cmd->add_flag("--trace", trace_flag, "include a per-step trace");

  // graph
  auto* graph_cmd = app.add_subcommand("graph", "crystal graph over a box");
  Int graph_radius = 1;
  graph_cmd->add_option("--radius", graph_radius, "box radius");

  // member
  auto* member_cmd = app.add_subcommand("member", "membership queries");
  auto* member_binfty = member_cmd->add_subcommand("binfty", "highest-weight closure membership");
  auto* member_dem = member_cmd->add_subcommand("demazure", "Demazure membership");
  std::string x_csv, uw_csv;
  member_binfty->add_option("--x", x_csv, "query vector")->required();
  member_dem->add_option("--x", x_csv, "query vector")->required();
  member_dem->add_option("--uw", uw_csv, "Demazure word")->required();

  // estar
  auto* estar_cmd = app.add_subcommand("estar", "star statistic / operators via transport");
  std::string estar_x, estar_j, estar_apply = "none";
  estar_cmd->add_option("--x", estar_x, "vector")->required();
  estar_cmd->add_option("--j", estar_j, "star index")->required();
  estar_cmd->add_option("--apply", estar_apply, "also apply: none | f | e | emax");

  // iso
  auto* iso_cmd = app.add_subcommand("iso", "isomorphism growth and transport");
  auto* iso_grow = iso_cmd->add_subcommand("grow", "grow a certified isomorphism");
  auto* iso_transport = iso_cmd->add_subcommand("transport", "carry a vector between words");
  std::string to_word_csv, iso_x;
  Int iso_radius = 3;
  iso_grow->add_option("--to-word", to_word_csv, "target word")->required();
  iso_grow->add_option("--radius", iso_radius, "frontier box radius");
  iso_transport->add_option("--to-word", to_word_csv, "target word")->required();
  iso_transport->add_option("--x", iso_x, "vector to transport")->required();

  // connect
  auto* connect_cmd = app.add_subcommand("connect", "connectedness certificate");
  Int conn_radius = 2, conn_pad = 4;
  connect_cmd->add_option("--radius", conn_radius, "inner radius");
  connect_cmd->add_option("--pad", conn_pad, "search pad");

  // hshift
  auto* hshift_cmd = app.add_subcommand("hshift", "shift into the closure by h_Lambda");
  std::string hshift_x;
  Int t_max = 6;
  hshift_cmd->add_option("--x", hshift_x, "vector")->required();
  hshift_cmd->add_option("--tmax", t_max, "largest multiple of rho to try");

  // blambda
  auto* blambda_cmd = app.add_subcommand("blambda", "enumerate B(lambda)");
  std::string lam_csv;
  std::size_t blambda_cap = 100000;
  blambda_cmd->add_option("--lam", lam_csv, "dominant weight coefficients")->required();
  blambda_cmd->add_option("--cap", blambda_cap, "size cap");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite_name;
  std::size_t samples = 1000;
  verify_cmd->add_option("suite", suite_name, "suite name (see --list)")->required();
  verify_cmd->add_option("--samples", samples, "sample count for randomized checks");

  CLI11_PARSE(app, argc, argv);

  try {
    SearchBudget budget = resolve_budget(opts);

    if (cartan_validate->parsed()) {
      CartanDatum datum = resolve_datum(opts);
      json out{{"cartan", datum.to_json()}, {"finite_type", datum.finite_type()}};
      if (datum.finite_type()) out["positive_roots"] = datum.positive_roots().size();
      emit(out);
      return 0;
    }

    if (word_reduce->parsed()) {
      CartanDatum datum = resolve_datum(opts);
      Word w = parse_word(datum, opts.word_csv);
      json out{{"cartan", datum.to_json()}, {"word", opts.word_csv}};
      try {
        json betas = json::array();
        for (const RootVec& b : beta_sequence(datum, w)) betas.push_back(b.coeffs());
        out["reduced"] = true;
        out["betas"] = betas;
      } catch (const NotReducedError& e) {
        out["reduced"] = false;
        out["failing_position"] = e.position;
      }
      emit(out);
      return 0;
    }

    if (word_braid->parsed() || word_all->parsed()) {
      CartanDatum datum = resolve_datum(opts);
      Word w = parse_word(datum, opts.word_csv);
      std::set<Word> words = word_braid->parsed() ? braid_neighbors(datum, w)
                                                  : all_reduced_words(datum, w, budget.word_closure_cap);
      json list = json::array();
      for (const Word& v : words) list.push_back(format_word(datum, v));
      emit(json{{"cartan", datum.to_json()}, {"count", words.size()}, {"words", list}});
      return 0;
    }

    if (word_endin->parsed()) {
      CartanDatum datum = resolve_datum(opts);
      Word w = parse_word(datum, opts.word_csv);
      Word v = word_ending_in(datum, w, datum.index_of(end_label), budget.word_closure_cap);
      emit(json{{"cartan", datum.to_json()}, {"word", format_word(datum, v)}});
      return 0;
    }

    if (act_cmd->parsed()) {
      CartanDatum datum = resolve_datum(opts);
      CellularCrystal c = resolve_crystal(opts, datum);
      CellVec x = start_csv.empty() ? c.zero() : parse_cellvec(start_csv, c.length());
      Program prog = parse_program(datum, program_text);
      if (compose) std::reverse(prog.begin(), prog.end());
      std::vector<TraceEntry> trace;
      CellVec y = apply_program(c, x, prog, trace_flag ? &trace : nullptr, budget);
      if (opts.format == "text") {
        if (trace_flag)
          for (const TraceEntry& t : trace)
            std::cout << t.op << t.label << " at position " << t.position << " (sigma~ " << t.sigma
                      << ")\n";
        std::cout << to_string(y) << "\n";
      } else {
        json jtrace = json::array();
        for (const TraceEntry& t : trace)
          jtrace.push_back(json{{"op", t.op}, {"i", t.label}, {"position", t.position},
                                {"sigma", t.sigma}});
        json out{{"cartan", datum.to_json()},
                 {"word", json::parse(crystal_to_json(c).at("word").dump())},
                 {"result", cellvec_to_json(y)}};
        if (trace_flag) out["trace"] = jtrace;
        emit(out);
      }
      return 0;
    }

    if (graph_cmd->parsed()) return cmd_graph(opts, graph_radius);

    if (member_binfty->parsed() || member_dem->parsed()) {
      CartanDatum datum = resolve_datum(opts);
      CellularCrystal c = resolve_crystal(opts, datum);
      BInftyModel model(c);
      CellVec x = parse_cellvec(x_csv, c.length());
      json out{{"cartan", datum.to_json()},
               {"word", json::parse(crystal_to_json(c).at("word").dump())}};
      if (member_binfty->parsed()) {
        Membership m = model.w0_mode() ? model.member(x) : model.fclosure_member(x);
        out.update(membership_to_json(m, datum));
        out["w0_mode"] = model.w0_mode();
      } else {
        Word uw = parse_word(datum, uw_csv);
        bool member = demazure_member(model, x, uw);
        bool star = demazure_member_star(model, x, uw, budget);
        out["member"] = member;
        out["star_agrees"] = (member == star);
      }
      emit(out);
      return 0;
    }

    if (estar_cmd->parsed()) {
      CartanDatum datum = resolve_datum(opts);
      CellularCrystal c = resolve_crystal(opts, datum);
      CellVec x = parse_cellvec(estar_x, c.length());
      Idx j = datum.index_of(estar_j);
      json out{{"cartan", datum.to_json()},
               {"word", json::parse(crystal_to_json(c).at("word").dump())},
               {"eps_star", eps_star(c, x, j, budget)}};
      if (estar_apply == "f") out["result"] = cellvec_to_json(f_star(c, x, j, budget));
      else if (estar_apply == "e") out["result"] = cellvec_to_json(e_star(c, x, j, budget));
      else if (estar_apply == "emax") out["result"] = cellvec_to_json(e_star_max(c, x, j, budget));
      else if (estar_apply != "none") throw ConfigError("--apply must be none|f|e|emax");
      emit(out);
      return 0;
    }

    if (iso_grow->parsed()) {
      CartanDatum datum = resolve_datum(opts);
      CellularCrystal A = resolve_crystal(opts, datum);
      Word to = parse_word(datum, to_word_csv);
      CellularCrystal B(datum, ReducedWord(datum, to));
      Int r = iso_radius;
      auto frontier = [r](const CellVec& v) {
        return std::all_of(v.begin(), v.end(), [r](Int t) { return t >= -r && t <= r; });
      };
      IsoCertificate cert = grow_isomorphism(A, B, A.zero(), B.zero(), budget.grow_steps, frontier);
      if (opts.format == "dot") {
        std::cout << "digraph fragment {\n";
        for (const auto& [a, _] : cert.fragment)
          for (Idx i = 0; i < datum.rank(); ++i) {
            if (!A.letter_present(i)) continue;
            CellVec t = *A.f_op(i, a);
            if (cert.fragment.count(t))
              std::cout << "  " << dot_node(a) << " -> " << dot_node(t) << " [label=\""
                        << datum.label(i) << "\"];\n";
          }
        std::cout << "}\n";
      } else {
        emit(iso_certificate_to_json(cert, A, B));
      }
      return cert.ok() ? 0 : 2;
    }

    if (iso_transport->parsed()) {
      CartanDatum datum = resolve_datum(opts);
      CellularCrystal from = resolve_crystal(opts, datum);
      CellularCrystal to(datum, ReducedWord(datum, parse_word(datum, to_word_csv)));
      CellVec x = parse_cellvec(iso_x, from.length());
      CellVec y = transport(x, from, to, budget);
      emit(json{{"cartan", datum.to_json()},
                {"from", json::parse(crystal_to_json(from).at("word").dump())},
                {"to", json::parse(crystal_to_json(to).at("word").dump())},
                {"x", cellvec_to_json(x)},
                {"result", cellvec_to_json(y)}});
      return 0;
    }

    if (connect_cmd->parsed()) {
      CartanDatum datum = resolve_datum(opts);
      CellularCrystal c = resolve_crystal(opts, datum);
      ConnectivityReport rep = connectedness_certificate(c, conn_radius, conn_pad);
      emit(connectivity_to_json(rep, c));
      return rep.complete() ? 0 : 2;
    }

    if (hshift_cmd->parsed()) {
      CartanDatum datum = resolve_datum(opts);
      CellularCrystal c = resolve_crystal(opts, datum);
      BInftyModel model(c);
      CellVec x = parse_cellvec(hshift_x, c.length());
      HShiftResult res = hshift_certificate(model, x, t_max);
      json out{{"cartan", datum.to_json()}, {"found", res.found}};
      if (res.found) {
        out["t"] = res.t;
        out["shifted"] = cellvec_to_json(res.shifted);
        json path = json::array();
        for (const PathStep& s : res.path)
          path.push_back(json::array({std::string(1, s.op), datum.label(s.i)}));
        out["path"] = path;
      }
      emit(out);
      return 0;
    }

    if (blambda_cmd->parsed()) {
      CartanDatum datum = resolve_datum(opts);
      CellularCrystal c = resolve_crystal(opts, datum);
      BInftyModel model(c);
      CellVec coeffs = parse_cellvec(lam_csv, datum.rank());
      Weight lam = Weight::zero(datum.rank());
      for (Idx i = 0; i < datum.rank(); ++i)
        lam = lam + datum.fundamental_weight(i).scaled(coeffs[i]);
      BLambdaSet s = blambda_enumerate(model, lam, blambda_cap);
      json elements = json::array();
      for (const CellVec& v : s.elements) elements.push_back(cellvec_to_json(v));
      emit(json{{"cartan", datum.to_json()},
                {"lambda", weight_to_json(lam)},
                {"size", s.elements.size()},
                {"elements", elements}});
      return 0;
    }

    if (verify_cmd->parsed()) {
      SuiteConfig cfg;
      cfg.seed = opts.seed;
      cfg.samples = samples;
      cfg.budget = budget;
      if (!opts.type.empty() || !opts.cartan_path.empty()) {
        cfg.datum = resolve_datum(opts);
        if (!opts.word_csv.empty()) cfg.word = parse_word(*cfg.datum, opts.word_csv);
      }
      SuiteReport rep = run_suite(suite_name, cfg);
      emit(rep.to_json());
      return rep.ok() ? 0 : 2;
    }

    throw ConfigError("no subcommand given");
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
