#include "kfc/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "kfc/charge.hpp"
#include "kfc/json_io.hpp"
#include "kfc/wallcross.hpp"

namespace kfc {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad integer: " + item);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::string poly_str(const LaurentPoly& p, const std::string& variable) {
  return variable == "q" ? p.to_q_string() : p.to_string();
}

std::string weight_str(const Weight& mu) { return "(" + weight_key(mu) + ")"; }

std::string expansion_str(const BasisExpansion& expansion) {
  std::string s;
  for (size_t i = 0; i < expansion.terms.size(); ++i) {
    const auto& term = expansion.terms[i];
    if (i) s += " + ";
    if (term.v_exponent != 0)
      s += "v^" + std::to_string(term.v_exponent) + " ";
    s += "N_" + weight_str(term.weight);
  }
  return s.empty() ? "0" : s;
}

const char* edge_color(int i) {
  static const char* palette[] = {"red",    "blue",   "green",
                                  "orange", "purple", "brown"};
  return palette[(i - 1) % 6];
}

struct KostkaOptions {
  int rank = 0;
  std::string lambda_text;
  std::string mu_text;
  std::string oracle;
  std::string format = "text";
  std::string variable = "v";
};

int cmd_kostka(const KostkaOptions& opt, std::ostream& out) {
  Crystal crystal(opt.rank, parse_int_list(opt.lambda_text));
  Weight lambda = crystal.weight(crystal.highest());
  std::vector<Weight> mus;
  if (!opt.mu_text.empty()) {
    Weight mu = parse_int_list(opt.mu_text);
    if (static_cast<int>(mu.size()) != opt.rank + 1)
      throw std::invalid_argument("mu must have length rank+1");
    mus.push_back(mu);
  } else {
    mus = dominant_weights_below(lambda);
  }

  bool all_match = true;
  json entries = json::array();
  std::vector<std::vector<std::string>> table;
  std::vector<std::string> header = {"mu", "K"};
  if (opt.oracle == "llt" || opt.oracle == "both") header.push_back("llt");
  if (opt.oracle == "kostant" || opt.oracle == "both")
    header.push_back("kostant");
  if (!opt.oracle.empty()) header.push_back("verdict");

  std::vector<int> lambda_parts = parse_int_list(opt.lambda_text);
  for (const Weight& mu : mus) {
    LaurentPoly k = kostka_foulkes(crystal, mu);
    json entry{{"lambda", weight_to_json(lambda)},
               {"mu", weight_to_json(mu)},
               {"q_poly", k.to_q_string()},
               {"poly", poly_to_json(k)}};
    std::vector<std::string> row = {weight_str(mu), poly_str(k, opt.variable)};
    bool match = true;
    if (opt.oracle == "llt" || opt.oracle == "both") {
      LaurentPoly alt;
      for (int t : crystal.weight_space(mu))
        alt.add_term(llt_charge2(crystal, t), 1);
      match = match && alt == k;
      row.push_back(poly_str(alt, opt.variable));
      entry["llt"] = poly_to_json(alt);
    }
    if (opt.oracle == "kostant" || opt.oracle == "both") {
      LaurentPoly alt = kostant_oracle(opt.rank, lambda_parts, mu);
      match = match && alt == k;
      row.push_back(poly_str(alt, opt.variable));
      entry["kostant"] = poly_to_json(alt);
    }
    if (!opt.oracle.empty()) {
      row.push_back(match ? "match" : "MISMATCH");
      entry["match"] = match;
      all_match = all_match && match;
    }
    entries.push_back(entry);
    table.push_back(row);
  }

  if (opt.format == "json") {
    out << json{{"rank", opt.rank},
                {"lambda", weight_to_json(lambda)},
                {"entries", entries}}
               .dump(2)
        << "\n";
  } else if (opt.format == "csv") {
    for (size_t c = 0; c < header.size(); ++c)
      out << (c ? "," : "") << header[c];
    out << "\n";
    for (const auto& row : table) {
      for (size_t c = 0; c < row.size(); ++c) {
        out << (c ? "," : "");
        std::string cell = row[c];
        std::replace(cell.begin(), cell.end(), ',', ';');
        out << cell;
      }
      out << "\n";
    }
  } else {
    std::vector<size_t> width(header.size(), 0);
    for (size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : table)
      for (size_t c = 0; c < row.size(); ++c)
        width[c] = std::max(width[c], row[c].size());
    auto print_row = [&](const std::vector<std::string>& row) {
      for (size_t c = 0; c < row.size(); ++c)
        out << std::left << std::setw(static_cast<int>(width[c]) + 2) << row[c];
      out << "\n";
    };
    out << "K_{lambda,mu} for lambda=" << weight_str(lambda) << "\n";
    print_row(header);
    for (const auto& row : table) print_row(row);
  }
  return all_match ? kOk : kVerifyFail;
}

struct SimpleOptions {
  int rank = 0;
  std::string lambda_text;
  std::string format = "text";
};

int cmd_atoms(const SimpleOptions& opt, std::ostream& out) {
  Crystal crystal(opt.rank, parse_int_list(opt.lambda_text));
  AtomDecomposition atoms(crystal);
  BasisExpansion expansion = kl_in_n_basis(atoms);

  if (opt.format == "json") {
    json arr = json::array();
    for (const Atom& atom : atoms.atoms())
      arr.push_back(atom_to_json(crystal, atom));
    json exp = json::array();
    for (const auto& term : expansion.terms)
      exp.push_back(json{{"weight", weight_to_json(term.weight)},
                         {"v_exponent", term.v_exponent}});
    out << json{{"rank", opt.rank},
                {"lambda", weight_to_json(crystal.weight(crystal.highest()))},
                {"atoms", arr},
                {"expansion", exp}}
               .dump(2)
        << "\n";
  } else {
    for (int a = 0; a < atoms.count(); ++a) {
      const Atom& atom = atoms.atom(a);
      out << "atom " << a << ": highest_weight=" << weight_str(atom.highest_weight)
          << " size=" << atom.members.size()
          << " atomic_number2=" << atom.atomic_number2 << "\n";
    }
    out << "expansion: " << expansion_str(expansion) << "\n";
  }
  return kOk;
}

json state_json(const WallCrossEngine& engine, const std::string& stage,
                int m, const AffineRoot* wall, const StepReport* report) {
  json weights = json::object();
  for (auto& [mu, poly] : engine.eta_kl_all())
    weights[weight_key(mu)] = poly.to_string();
  json j{{"stage", stage}, {"h_tilde", weights}};
  if (m >= 0) j["m"] = m;
  if (wall) j["wall"] = affine_root_to_json(*wall);
  if (report) {
    j["swap_ok"] = report->swap_ok;
    j["arr_identity_ok"] = report->arr_identity_ok;
    j["recurrence_ok"] = report->recurrence_ok;
    j["gammam_ok"] = report->gammam_ok;
    j["failures"] = report->failures;
  }
  return j;
}

void state_text(const WallCrossEngine& engine, const std::string& title,
                std::ostream& out) {
  out << title << "\n";
  for (auto& [mu, poly] : engine.eta_kl_all())
    out << "  " << weight_str(mu) << "  " << poly.to_string() << "\n";
}

int cmd_wallcross(const SimpleOptions& opt, std::ostream& out) {
  Crystal crystal(opt.rank, parse_int_list(opt.lambda_text));
  AtomDecomposition atoms(crystal);
  WallCrossEngine engine(crystal, atoms);

  bool all_ok = true;
  json trace = json::array();

  engine.init_mv();
  if (opt.format == "json")
    trace.push_back(state_json(engine, "mv", -1, nullptr, nullptr));
  else
    state_text(engine, "stage mv", out);

  engine.init_parabolic();
  if (opt.format == "json")
    trace.push_back(
        state_json(engine, "parabolic", engine.walls_remaining(), nullptr,
                   nullptr));
  else
    state_text(engine,
               "stage parabolic (m=" + std::to_string(engine.walls_remaining()) +
                   ")",
               out);

  while (!engine.done()) {
    StepReport report = engine.cross_next();
    all_ok = all_ok && report.ok();
    if (opt.format == "json") {
      trace.push_back(
          state_json(engine, "crossed", report.m, &report.wall, &report));
    } else {
      state_text(engine,
                 "stage m=" + std::to_string(report.m) + " after wall " +
                     to_string(report.wall) +
                     (report.ok() ? "  [checks ok]" : "  [CHECKS FAILED]"),
                 out);
      for (const std::string& f : report.failures) out << "  ! " << f << "\n";
    }
  }

  // Endpoint: the KL-chamber polynomials must reproduce the charge route.
  bool endpoint_ok = true;
  for (const Weight& mu :
       dominant_weights_below(crystal.weight(crystal.highest()))) {
    if (!(engine.kl_poly(mu) == kostka_foulkes(crystal, mu)))
      endpoint_ok = false;
  }
  all_ok = all_ok && endpoint_ok;

  if (opt.format == "json") {
    out << json{{"rank", opt.rank},
                {"lambda", weight_to_json(crystal.weight(crystal.highest()))},
                {"trace", trace},
                {"endpoint_matches_charge", endpoint_ok},
                {"ok", all_ok}}
               .dump(2)
        << "\n";
  } else {
    out << "endpoint matches charge route: " << (endpoint_ok ? "yes" : "NO")
        << "\n";
    out << (all_ok ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  return all_ok ? kOk : kVerifyFail;
}

struct GraphOptions {
  int rank = 0;
  std::string lambda_text;
  bool crystal = false;
  bool moment = false;
  bool twisted = false;
  int atom = -1;
  int m = 0;
};

int cmd_graph(const GraphOptions& opt, std::ostream& out) {
  int n = opt.rank;
  std::vector<int> lambda = parse_int_list(opt.lambda_text);
  if (opt.crystal || opt.atom >= 0) {
    Crystal crystal(n, lambda);
    std::vector<char> keep(crystal.size(), 1);
    if (opt.atom >= 0) {
      AtomDecomposition atoms(crystal);
      if (opt.atom >= atoms.count())
        throw std::invalid_argument("atom index out of range");
      keep.assign(crystal.size(), 0);
      for (int t : atoms.atom(opt.atom).members) keep[t] = 1;
    }
    out << "digraph crystal {\n";
    for (int t = 0; t < crystal.size(); ++t)
      if (keep[t]) out << "  \"" << crystal.element(t).encoding() << "\";\n";
    for (int t = 0; t < crystal.size(); ++t) {
      if (!keep[t]) continue;
      for (int i = 1; i <= n; ++i) {
        int img = crystal.f(i, t);
        if (img != -1 && keep[img])
          out << "  \"" << crystal.element(t).encoding() << "\" -> \""
              << crystal.element(img).encoding() << "\" [label=\"f" << i
              << "\", color=" << edge_color(i) << "];\n";
      }
    }
    out << "}\n";
    return kOk;
  }

  MomentGraph graph = moment_graph(n, partition_weight(n, lambda));
  std::vector<AffineRoot> reversed;
  if (opt.twisted && opt.m > 0) {
    std::vector<AffineRoot> walls = wall_sequence(graph);
    if (opt.m > static_cast<int>(walls.size()))
      throw std::invalid_argument("m exceeds the number of walls");
    // The m not-yet-crossed walls are the tail of the crossing order.
    reversed.assign(walls.end() - opt.m, walls.end());
  }
  std::unordered_set<std::string> rev_keys;
  for (const AffineRoot& a : reversed) rev_keys.insert(to_string(a));
  out << "digraph moment {\n";
  for (const Weight& mu : graph.vertices)
    out << "  \"" << weight_key(mu) << "\";\n";
  for (const auto& e : graph.edges) {
    bool rev = rev_keys.count(to_string(e.label)) > 0;
    int src = rev ? e.dst : e.src;
    int dst = rev ? e.src : e.dst;
    out << "  \"" << weight_key(graph.vertices[src]) << "\" -> \""
        << weight_key(graph.vertices[dst]) << "\" [label=\""
        << to_string(e.label) << "\"";
    if (rev) out << ", reversed=true, style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Kostka-Foulkes polynomials via crystal charge statistics"};
  app.require_subcommand(1);

  KostkaOptions kopt;
  CLI::App* kostka = app.add_subcommand(
      "kostka", "Kostka-Foulkes polynomials, optionally against oracles");
  kostka->add_option("--rank", kopt.rank, "rank n of A_n")->required();
  kostka->add_option("--lambda", kopt.lambda_text, "partition, e.g. 2,1")
      ->required();
  kostka->add_option("--mu", kopt.mu_text,
                     "content vector of length n+1 (default: all dominant)");
  kostka->add_option("--oracle", kopt.oracle, "llt, kostant or both")
      ->check(CLI::IsMember({"llt", "kostant", "both"}));
  kostka->add_option("--format", kopt.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  kostka->add_option("--variable", kopt.variable, "v or q")
      ->check(CLI::IsMember({"v", "q"}));

  SimpleOptions aopt;
  CLI::App* atoms = app.add_subcommand(
      "atoms", "atomic decomposition and the N-basis expansion");
  atoms->add_option("--rank", aopt.rank, "rank n of A_n")->required();
  atoms->add_option("--lambda", aopt.lambda_text, "partition")->required();
  atoms->add_option("--format", aopt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  SimpleOptions wopt;
  CLI::App* wallcross = app.add_subcommand(
      "wallcross", "recharge trace from the MV to the KL chamber");
  wallcross->add_option("--rank", wopt.rank, "rank n of A_n")->required();
  wallcross->add_option("--lambda", wopt.lambda_text, "partition")->required();
  wallcross->add_option("--format", wopt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  GraphOptions gopt;
  CLI::App* graph = app.add_subcommand("graph", "DOT export of graphs");
  graph->add_option("--rank", gopt.rank, "rank n of A_n")->required();
  graph->add_option("--lambda", gopt.lambda_text, "partition")->required();
  graph->add_flag("--crystal", gopt.crystal, "crystal graph");
  graph->add_flag("--moment", gopt.moment, "moment graph");
  graph->add_flag("--twisted", gopt.twisted, "twisted graph");
  graph->add_option("--atom", gopt.atom, "one atom of the crystal graph");
  graph->add_option("--m", gopt.m, "walls not yet crossed (twisted)");

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (kostka->parsed()) return cmd_kostka(kopt, out);
    if (atoms->parsed()) return cmd_atoms(aopt, out);
    if (wallcross->parsed()) return cmd_wallcross(wopt, out);
    if (graph->parsed()) {
      int modes = (gopt.crystal ? 1 : 0) + (gopt.moment ? 1 : 0) +
                  (gopt.twisted ? 1 : 0) + (gopt.atom >= 0 ? 1 : 0);
      if (modes != 1)
        throw std::invalid_argument(
            "pick exactly one of --crystal, --moment, --twisted, --atom");
      return cmd_graph(gopt, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kVerifyFail;
  }
  return kUsage;
}

}  // namespace kfc
