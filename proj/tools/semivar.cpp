// semivar: command-line front end.
//
// Exit codes: 0 when every check passes, 1 when a check fails, 2 on usage or
// input errors. With --json a single report object is written to stdout:
//
//   {"command", "args", "checks": [{"name", "verdict", "detail"}],
//    "result", "elapsed_ms"}

#include <chrono>      // for steady_clock
#include <filesystem>  // for path, create_directories
#include <fstream>     // for ifstream, ofstream
#include <iostream>    // for cout, cerr
#include <sstream>     // for ostringstream
#include <string>      // for string
#include <vector>      // for vector

#include <CLI11.hpp>
#include <json.hpp>

#include "semivar/acceptance.hpp"
#include "semivar/conjugacy.hpp"
#include "semivar/epigroup.hpp"
#include "semivar/green.hpp"
#include "semivar/io.hpp"
#include "semivar/isomorphism.hpp"
#include "semivar/search.hpp"
#include "semivar/term.hpp"
#include "semivar/variants.hpp"
#include "semivar/varieties.hpp"

namespace fs = std::filesystem;
using json   = nlohmann::ordered_json;
using namespace semivar;

namespace {

  // Raised for unreadable or malformed input; maps to exit code 2.
  struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  struct Check {
    std::string name;
    bool        passed;
    std::string detail;
  };

  struct Report {
    std::string        command;
    json               args = json::object();
    std::vector<Check> checks;
    json               result = json::object();
    std::ostringstream text;  // human-readable body

    void check(std::string name, bool passed, std::string detail = {}) {
      checks.push_back({std::move(name), passed, std::move(detail)});
    }

    bool all_passed() const {
      for (auto const& c : checks) {
        if (!c.passed) {
          return false;
        }
      }
      return true;
    }
  };

  TableFile load_file(std::string const& path) {
    try {
      return read_table_file(path);
    } catch (ParseError const& e) {
      throw InputError(path + ": " + e.what());
    } catch (InvalidArgument const& e) {
      throw InputError(e.what());
    }
  }

  // A valid table with its stored unary map, or the pseudoinverse if none.
  UnarySemigroup load_semigroup(std::string const& path) {
    auto const file = load_file(path);
    try {
      return to_unary_semigroup(file);
    } catch (InvalidArgument const& e) {
      throw InputError(path + ": " + e.what());
    }
  }

  json to_json(CayleyTable const& t) {
    json rows = json::array();
    for (element_type a = 0; a < t.order(); ++a) {
      auto const r = t.row(a);
      rows.push_back(std::vector<element_type>(r.begin(), r.end()));
    }
    return rows;
  }

  json to_json(Assignment const& env) {
    json out = json::object();
    for (auto const& [var, value] : env) {
      out[std::string(1, var)] = value;
    }
    return out;
  }

  json to_json(VarietyReport const& r) {
    json out{{"name", r.name}, {"holds", r.holds}};
    if (r.failing_identity) {
      out["failing_identity"]   = r.failing_identity->to_string();
      out["failing_assignment"] = to_json(*r.failing_assignment);
    }
    return out;
  }

  std::string join(std::vector<element_type> const& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += (i ? " " : "") + std::to_string(v[i]);
    }
    return out;
  }

  std::vector<std::string> split_list(std::vector<std::string> const& raw) {
    std::vector<std::string> out;
    for (auto const& item : raw) {
      std::stringstream ss(item);
      std::string       part;
      while (std::getline(ss, part, ',')) {
        if (!part.empty()) {
          out.push_back(part);
        }
      }
    }
    return out;
  }

  std::string read_text(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InputError("cannot open " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  ////////////////////////////////////////////////////////////////////////////
  // Subcommands
  ////////////////////////////////////////////////////////////////////////////

  void cmd_validate(Report& rep, std::string const& path) {
    auto const file = load_file(path);
    auto const err  = validate(file.table);
    rep.result["order"] = file.table.order();
    rep.check("semigroup", !err, err ? describe(*err) : "");
    if (!err && file.unary) {
      auto const s = to_unary_semigroup(file);
      rep.result["unary_is_pseudoinverse"] = s.is_canonical();
    }
    rep.text << path << ": order " << file.table.order() << ", "
             << (err ? "not a semigroup (" + describe(*err) + ")"
                     : std::string("semigroup"))
             << '\n';
  }

  void cmd_green(Report& rep, std::string const& path) {
    auto const s = load_semigroup(path);
    auto const g = green(s.base());
    rep.result = {{"r_class", g.r_class},
                  {"l_class", g.l_class},
                  {"h_class", g.h_class},
                  {"d_class", g.d_class},
                  {"j_class", g.j_class},
                  {"idempotents", g.idempotents},
                  {"group_h_classes", g.group_h_classes}};
    rep.text << eggbox(g);
  }

  void cmd_epi(Report& rep, std::string const& path) {
    auto const s    = load_semigroup(path);
    auto const data = analyse_epigroup(s.base());
    rep.result["index"]         = data.index;
    rep.result["pseudoinverse"] = data.pseudoinverse;
    rep.result["unary"]         = s.unary();
    rep.result["canonical"]     = s.is_canonical();
    rep.text << "index:         " << join(std::vector<element_type>(
                                         data.index.begin(), data.index.end()))
             << "\npseudoinverse: " << join(data.pseudoinverse) << '\n';
    if (!s.is_canonical()) {
      rep.text << "unary (file):  " << join(s.unary()) << '\n';
    }
    for (auto const& o : verify_epigroup_identities(s).outcomes) {
      rep.check(o.name,
                o.holds,
                o.counterexample ? "at " + join(*o.counterexample) : "");
    }
  }

  void cmd_variety(Report&                         rep,
                   std::string const&              path,
                   std::vector<std::string> const& tests,
                   std::vector<std::string> const& identities) {
    auto const s       = load_semigroup(path);
    json       reports = json::array();
    for (auto const& name : split_list(tests)) {
      VarietyReport r;
      if (name == "W") {
        if (!s.is_canonical()) {
          throw InputError("W needs the pseudoinverse as unary operation");
        }
        r = in_W(s);
      } else if (name.size() >= 2 && (name[0] == 'E' || name[0] == 'V')
                 && name.find_first_not_of("0123456789", 1) == std::string::npos) {
        std::size_t const n = std::stoul(name.substr(1));
        if (n == 0) {
          throw InputError("variety index must be positive: " + name);
        }
        r = name[0] == 'E' ? in_E(s, n) : in_V(s, n);
      } else {
        throw InputError("unknown variety " + name + " (use E<n>, V<n> or W)");
      }
      reports.push_back(to_json(r));
      rep.check(name,
                r.holds,
                r.failing_identity ? r.failing_identity->to_string() + " at "
                                         + to_string(*r.failing_assignment)
                                   : "");
    }
    for (auto const& text : identities) {
      Identity id = [&] {
        try {
          return parse_identity(text);
        } catch (std::exception const& e) {
          throw InputError("cannot parse identity '" + text + "': " + e.what());
        }
      }();
      auto const env = find_counterexample(s, id);
      reports.push_back({{"name", id.to_string()}, {"holds", !env}});
      if (env) {
        reports.back()["failing_assignment"] = to_json(*env);
      }
      rep.check(id.to_string(), !env, env ? "at " + to_string(*env) : "");
    }
    rep.result["reports"] = reports;
  }

  void cmd_variant(Report&            rep,
                   std::string const& path,
                   element_type       c,
                   bool               unary) {
    auto const s = load_semigroup(path);
    if (c >= s.order()) {
      throw InputError("sandwich element " + std::to_string(c)
                       + " is out of range");
    }
    auto const u = unary_variant(s, c);
    rep.result["table"] = to_json(u.base());
    if (unary) {
      rep.result["unary"] = u.unary();
      rep.text << format_table_text(u);
    } else {
      rep.text << format_table_text(u.base());
    }
  }

  void cmd_conjugacy(Report&            rep,
                     std::string const& path,
                     bool               semigroup_only,
                     bool               force_adjoin,
                     bool               require_transitive) {
    auto const s    = load_semigroup(path);
    auto const mult = semigroup_only ? Multipliers::semigroup_only
                                     : Multipliers::adjoined_identity;
    auto const rel  = primary_conjugacy(s.base(), mult, force_adjoin);
    auto const rep2 = check_transitivity(s.base(), mult);
    std::size_t const n = s.order();
    json              matrix = json::array();
    for (element_type a = 0; a < n; ++a) {
      std::vector<int> row;
      for (element_type b = 0; b < n; ++b) {
        row.push_back(rel(a, b));
        rep.text << (rel(a, b) ? '1' : '.');
      }
      matrix.push_back(row);
      rep.text << '\n';
    }
    bool const transitive = rel.is_transitive();
    rep.result["relation"]   = matrix;
    rep.result["reflexive"]  = rel.is_reflexive();
    rep.result["symmetric"]  = rel.is_symmetric();
    rep.result["transitive"] = transitive;
    rep.text << "transitive: " << (transitive ? "yes" : "no") << '\n';
    if (!transitive && rep2.witness && rel == rep2.relation) {
      auto const [a, b, c] = *rep2.witness;
      rep.result["witness"] = {a, b, c};
      rep.text << "witness: " << a << " ~ " << b << ", " << b << " ~ " << c
               << ", not " << a << " ~ " << c << '\n';
    }
    if (rel.is_symmetric()) {
      auto const classes      = transitive_closure(rel);
      rep.result["classes"] = classes;
      rep.text << "classes:";
      for (auto const& block : classes) {
        rep.text << " {" << join(block) << "}";
      }
      rep.text << '\n';
    }
    if (require_transitive) {
      rep.check("transitive", transitive);
    }
  }

  struct EnumerateArgs {
    std::size_t              order = 1;
    bool                     all_orders = false;
    std::string              identities;
    std::vector<std::string> filters;
    std::string              out;
    unsigned                 jobs       = 1;
    bool                     merge_anti = false;
    bool                     free_unary = false;
    std::size_t              max_order  = 5;
    bool                     print      = false;
  };

  void cmd_enumerate(Report& rep, EnumerateArgs const& args) {
    SearchSpec spec;
    spec.order                 = args.order;
    spec.all_orders            = args.all_orders;
    spec.merge_anti_isomorphic = args.merge_anti;
    spec.free_unary            = args.free_unary;
    spec.max_order             = args.max_order;
    spec.jobs                  = args.jobs;
    spec.filters               = split_list(args.filters);
    try {
      if (!args.identities.empty()) {
        spec.identities = parse_identity_list(read_text(args.identities));
      }
      for (auto const& f : spec.filters) {
        static_cast<void>(make_filter(f));
      }
    } catch (InputError const&) {
      throw;
    } catch (std::exception const& e) {
      throw InputError(e.what());
    }
    SearchResult result;
    try {
      result = enumerate(spec);
    } catch (CapExceeded const& e) {
      throw InputError(e.what());
    }
    json counts = json::object();
    for (auto const& [n, k] : result.counts_by_order) {
      counts[std::to_string(n)] = k;
      rep.text << "order " << n << ": " << k << " models\n";
    }
    rep.result["counts_by_order"] = counts;
    rep.result["total"]           = result.models.size();
    rep.result["spec"]            = result.spec_echo;

    json models = json::array();
    for (std::size_t i = 0; i < result.models.size(); ++i) {
      auto const& m    = result.models[i];
      auto const  form = canonical_form(m);
      json entry{{"order", m.order()},
                 {"canonical_form", form.to_text()},
                 {"hash", form.hash()}};
      if (!args.out.empty()) {
        std::ostringstream name;
        name << "model_" << m.order() << '_' << i << ".sgp";
        entry["file"] = name.str();
        TableFile file{{" order " + std::to_string(m.order()) + ", hash "
                        + form.hash()},
                       m.base(),
                       m.unary()};
        write_table_file(fs::path(args.out) / name.str(), file);
      }
      if (args.print) {
        rep.text << "---\n" << format_table_text(m);
      }
      models.push_back(entry);
    }
    rep.result["models"] = models;
    if (!args.out.empty()) {
      json manifest{{"spec", result.spec_echo},
                    {"counts_by_order", counts},
                    {"models", models}};
      std::ofstream(fs::path(args.out) / "manifest.json") << manifest.dump(2)
                                                          << '\n';
      rep.text << "wrote " << result.models.size() << " models to "
               << args.out << '\n';
    }
  }

  void cmd_verify(Report&                  rep,
                  std::string const&       corpus,
                  unsigned                 jobs,
                  std::vector<std::size_t> only) {
    AcceptanceOptions opts;
    if (!corpus.empty()) {
      opts.corpus_dir = corpus;
    }
    opts.jobs = jobs;
    opts.only.insert(only.begin(), only.end());
    for (auto id : opts.only) {
      if (id == 0 || id > acceptance_criterion_count) {
        throw InputError("no criterion " + std::to_string(id));
      }
    }
    json criteria = json::array();
    for (auto const& r : run_acceptance(opts)) {
      std::string const name
          = "criterion " + std::to_string(r.id) + ": " + r.name;
      rep.check(name, r.passed, r.detail);
      criteria.push_back({{"id", r.id},
                          {"name", r.name},
                          {"passed", r.passed},
                          {"seconds", r.seconds}});
    }
    rep.result["criteria"] = criteria;
  }

  void emit(Report const& rep, bool as_json, double elapsed_ms) {
    if (as_json) {
      json checks = json::array();
      for (auto const& c : rep.checks) {
        checks.push_back({{"name", c.name},
                          {"verdict", c.passed ? "pass" : "fail"},
                          {"detail", c.detail}});
      }
      json out{{"command", rep.command},
               {"args", rep.args},
               {"checks", checks},
               {"result", rep.result},
               {"elapsed_ms", elapsed_ms}};
      std::cout << out.dump(2) << '\n';
      return;
    }
    std::cout << rep.text.str();
    for (auto const& c : rep.checks) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) {
        std::cout << ": " << c.detail;
      }
      std::cout << '\n';
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite semigroups, epigroups, variants and primary conjugacy"};
  app.require_subcommand(1);
  bool as_json = false;

  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", as_json, "Write a JSON report to stdout");
  };

  std::string file;
  auto*       validate_cmd = app.add_subcommand("validate", "Check associativity");
  validate_cmd->add_option("file", file, "Table file")->required();
  add_json(validate_cmd);

  auto* green_cmd = app.add_subcommand("green", "Green's relations (eggbox)");
  green_cmd->add_option("file", file, "Table file")->required();
  add_json(green_cmd);

  auto* epi_cmd = app.add_subcommand(
      "epi", "Indices, pseudoinverses and the epigroup identities");
  epi_cmd->add_option("file", file, "Table file")->required();
  add_json(epi_cmd);

  std::vector<std::string> tests{"E1,V1,W,E2,V2"};
  std::vector<std::string> identities;
  auto* variety_cmd = app.add_subcommand("variety", "Variety membership");
  variety_cmd->add_option("file", file, "Table file")->required();
  variety_cmd->add_option("--test", tests, "Comma-separated E<n>, V<n>, W")
      ->capture_default_str();
  variety_cmd->add_option("--identity", identities,
                          "Ad-hoc identity such as \"x*x' = x'*x\"");
  add_json(variety_cmd);

  element_type sandwich = 0;
  bool         unary    = false;
  auto* variant_cmd = app.add_subcommand("variant", "Variant at a sandwich element");
  variant_cmd->add_option("file", file, "Table file")->required();
  variant_cmd->add_option("--at", sandwich, "Sandwich element c")->required();
  variant_cmd->add_flag("--unary", unary, "Also emit the star operation");
  add_json(variant_cmd);

  bool semigroup_only = false, force_adjoin = false, require_transitive = false;
  auto* conj_cmd = app.add_subcommand("conjugacy", "Primary conjugacy");
  conj_cmd->add_option("file", file, "Table file")->required();
  conj_cmd->add_flag("--semigroup-only", semigroup_only,
                     "Take multipliers from S instead of S^1 (non-standard)");
  conj_cmd->add_flag("--force-adjoin", force_adjoin,
                     "Adjoin a new identity even if S is a monoid");
  conj_cmd->add_flag("--require-transitive", require_transitive,
                     "Fail unless the relation is transitive");
  add_json(conj_cmd);

  EnumerateArgs en;
  auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate models up to isomorphism");
  enum_cmd->add_option("--order", en.order, "Order")->required();
  enum_cmd->add_flag("--all-orders", en.all_orders, "Every order from 1 to --order");
  enum_cmd->add_option("--identities", en.identities, "File with one identity per line");
  enum_cmd->add_option("--filter", en.filters,
                       "Comma-separated filters, e.g. canonical_unary,V1,not:variant_of_CR");
  enum_cmd->add_option("--out", en.out, "Directory for model files and manifest.json");
  enum_cmd->add_option("--jobs", en.jobs, "Worker threads")->capture_default_str();
  enum_cmd->add_flag("--merge-anti", en.merge_anti, "Merge anti-isomorphic models");
  enum_cmd->add_flag("--free-unary", en.free_unary, "Search unary maps too");
  enum_cmd->add_option("--max-order", en.max_order, "Order cap")->capture_default_str();
  enum_cmd->add_flag("--print", en.print, "Print every model");
  add_json(enum_cmd);

  std::string              corpus;
  unsigned                 jobs = 1;
  std::vector<std::size_t> only;
  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance suite");
  verify_cmd->alias("verify-paper");
  verify_cmd->add_option("--corpus", corpus, "Directory with the .sgp files");
  verify_cmd->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  verify_cmd->add_option("--only", only, "Criterion ids to run")->delimiter(',');
  add_json(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto const start = std::chrono::steady_clock::now();
  Report     rep;
  CLI::App*  sub = app.get_subcommands().front();
  rep.command    = sub->get_name();
  for (auto const* opt : sub->get_options()) {
    if (opt->count() > 0 && opt->get_name() != "--help") {
      auto const results = opt->results();
      rep.args[opt->get_name(false, true)]
          = results.size() == 1 ? json(results.front()) : json(results);
    }
  }

  try {
    if (sub == validate_cmd) {
      cmd_validate(rep, file);
    } else if (sub == green_cmd) {
      cmd_green(rep, file);
    } else if (sub == epi_cmd) {
      cmd_epi(rep, file);
    } else if (sub == variety_cmd) {
      cmd_variety(rep, file, tests, identities);
    } else if (sub == variant_cmd) {
      cmd_variant(rep, file, sandwich, unary);
    } else if (sub == conj_cmd) {
      cmd_conjugacy(rep, file, semigroup_only, force_adjoin, require_transitive);
    } else if (sub == enum_cmd) {
      if (!en.out.empty()) {
        fs::create_directories(en.out);
      }
      cmd_enumerate(rep, en);
    } else if (sub == verify_cmd) {
      cmd_verify(rep, corpus, jobs, only);
    }
  } catch (InputError const& e) {
    std::cerr << "semivar " << rep.command << ": " << e.what() << '\n';
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "semivar " << rep.command << ": internal error: " << e.what()
              << '\n';
    return 2;
  }

  double const elapsed = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  emit(rep, as_json, elapsed);
  return rep.all_passed() ? 0 : 1;
}
