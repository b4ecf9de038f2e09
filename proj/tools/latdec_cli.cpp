// Command-line front end: parse a problem document, run comparisons and
// lattice operations, print exact-rational reports.
//
// Exit codes: 0 success, 1 usage error, 2 validation failure, 3 budget
// exceeded (including a counterexample search that exhausts its budget).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "latdec/latdec.hpp"

namespace {

using namespace latdec;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ProblemDocument load(const std::string& path) { return parse_problem(read_input(path)); }

struct CommonOpts {
  std::string file;
  bool json = false;
  std::optional<unsigned> decimal;
};

DecimalOpt decimals(const CommonOpts& o) { return DecimalOpt{o.decimal}; }

int run_validate(const CommonOpts& o) {
  ProblemDocument doc = load(o.file);
  std::cout << "ok\n" << render_document_summary(doc);
  return 0;
}

int run_partitions(const CommonOpts& o, bool list, std::size_t max_partitions) {
  ProblemDocument doc = load(o.file);
  EnumerationBudget budget;
  if (max_partitions) budget.max_partitions = max_partitions;
  std::size_t count = 0;
  for_each_partition(
      doc.lattice,
      [&](const Partition& p) {
        ++count;
        if (list) std::cout << p.to_string() << "\n";
      },
      budget);
  std::cout << count << " partitions\n";
  return 0;
}

int run_lattice_ops(const CommonOpts& o, const std::vector<std::string>& meet,
                    const std::vector<std::string>& join) {
  ProblemDocument doc = load(o.file);
  if (!meet.empty()) {
    Partition r = partition_meet(find_partition(doc, meet[0]), find_partition(doc, meet[1]));
    std::cout << "meet = " << r.to_string() << "\n";
  }
  if (!join.empty()) {
    Partition r = partition_join(find_partition(doc, join[0]), find_partition(doc, join[1]));
    std::cout << "join = " << r.to_string() << "\n";
  }
  return 0;
}

int run_expected(const CommonOpts& o, const std::string& act, const std::string& val, bool intrinsic) {
  ProblemDocument doc = load(o.file);
  const Act& a = find_act(doc, act);
  const Valuation& v = find_valuation(doc, val);
  std::cout << "exp(" << act << ") = " << fmt_rat(expected_value(a, v), decimals(o)) << "\n";
  if (intrinsic)
    std::cout << "intrinsic(" << act << ") = " << fmt_rat(intrinsic_exp(a, v), decimals(o)) << "\n";
  return 0;
}

int run_compare(const CommonOpts& o, const std::string& left, const std::string& right,
                const std::string& val) {
  ProblemDocument doc = load(o.file);
  const Act& a = find_act(doc, left);
  const Act& b = find_act(doc, right);
  const Valuation& v = find_valuation(doc, val);
  ComparisonResult r = compare_acts(a, b, v);
  if (o.json)
    std::cout << comparison_to_json(left, right, a, b, r).dump(2) << "\n";
  else
    std::cout << render_comparison(left, right, a, b, r, decimals(o));
  return 0;
}

int run_lottery(const CommonOpts& o, const std::string& to_act, const std::vector<std::string>& from_act) {
  ProblemDocument doc = load(o.file);
  if (!to_act.empty()) {
    ActBundle bundle = lottery_to_act(find_lottery(doc, to_act));
    std::cout << render_bundle(bundle, decimals(o));
  }
  if (!from_act.empty()) {
    Lottery l = act_to_lottery(find_act(doc, from_act[0]), find_valuation(doc, from_act[1]));
    std::cout << "lottery = " << l.to_string() << "\n";
    std::cout << "exp = " << fmt_rat(lottery_exp(l), decimals(o)) << "\n";
  }
  return 0;
}

int run_allais(const CommonOpts& o, const std::string& x, const std::string& y) {
  AllaisInstance inst = AllaisInstance::make(parse_rational(x), parse_rational(y));
  if (o.json)
    std::cout << allais_to_json(inst).dump(2) << "\n";
  else
    std::cout << render_allais(inst, decimals(o));
  return 0;
}

int run_counterexample(std::size_t atoms, std::uint64_t seed, std::size_t trials) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= atoms; ++i) names.push_back("s" + std::to_string(i));
  Lattice l = Lattice::boolean(names);
  std::map<std::string, Rat> weights;
  for (const auto& n : names) weights.emplace(n, Rat(1, static_cast<long>(atoms)));
  Valuation v = from_atom_weights(l, weights);
  SearchBudget budget;
  budget.seed = seed;
  if (trials) budget.max_trials = trials;
  auto witness = find_blacktriangle_nontransitivity(l, v, budget);
  if (!witness) {
    std::cout << "no witness found within " << budget.max_trials << " trials\n";
    return 3;
  }
  std::cout << "non-transitivity witness over " << atoms << " atoms (uniform valuation, seed " << seed
            << "):\n"
            << render_witness(*witness, v);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact decision theory over finite distributive lattices"};
  app.require_subcommand(1);

  CommonOpts opts;
  auto add_common = [&](CLI::App* cmd, bool with_file = true) {
    if (with_file)
      cmd->add_option("file", opts.file, "problem document (JSON), or '-' for stdin")->required();
    cmd->add_flag("--json", opts.json, "machine-readable output");
    cmd->add_option("--decimal", opts.decimal, "annotate rationals with N rounded decimal digits");
  };

  auto* validate = app.add_subcommand("validate", "parse and validate a problem document");
  add_common(validate);

  auto* partitions = app.add_subcommand("partitions", "enumerate the partitions of the lattice");
  add_common(partitions);
  bool list = false;
  bool count_only = false;
  std::size_t max_partitions = 0;
  partitions->add_flag("--list", list, "print every partition");
  partitions->add_flag("--count", count_only, "print only the count (default)");
  partitions->add_option("--max", max_partitions, "enumeration budget override");

  auto* lattice_ops = app.add_subcommand("lattice-ops", "partition meet and join by name");
  add_common(lattice_ops);
  std::vector<std::string> meet_names, join_names;
  lattice_ops->add_option("--meet", meet_names, "meet of two named partitions")->expected(2);
  lattice_ops->add_option("--join", join_names, "join of two named partitions")->expected(2);

  auto* expected = app.add_subcommand("expected", "expected value of a named act");
  add_common(expected);
  std::string act_name, val_name;
  bool intrinsic = false;
  expected->add_option("act", act_name, "act name")->required();
  expected->add_option("valuation", val_name, "valuation name")->required();
  expected->add_flag("--intrinsic", intrinsic, "also print the intrinsic expected value");

  auto* compare = app.add_subcommand("compare", "full relation matrix for two acts");
  add_common(compare);
  std::string left_name, right_name, cmp_val;
  compare->add_option("left", left_name, "first act")->required();
  compare->add_option("right", right_name, "second act")->required();
  compare->add_option("valuation", cmp_val, "valuation name")->required();

  auto* lottery = app.add_subcommand("lottery", "act/lottery conversions");
  add_common(lottery);
  std::string to_act;
  std::vector<std::string> from_act;
  lottery->add_option("--to-act", to_act, "realize the named lottery as an act bundle");
  lottery->add_option("--from-act", from_act, "ACT VALUATION: induced lottery of the act")->expected(2);

  auto* allais = app.add_subcommand("allais", "the two-choice paradox instance");
  add_common(allais, false);
  std::string x = "500000", y = "2500000";
  allais->add_option("--x", x, "sure stake (default 500000)");
  allais->add_option("--y", y, "long-shot prize (default 2500000)");

  auto* counterexample = app.add_subcommand("counterexample", "search for a join-comparison non-transitivity witness");
  std::size_t atoms = 4;
  std::uint64_t seed = SearchBudget{}.seed;
  std::size_t budget_trials = 0;
  counterexample->add_option("--atoms", atoms, "number of atoms (default 4)");
  counterexample->add_option("--seed", seed, "search seed");
  counterexample->add_option("--budget", budget_trials, "trial budget override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (validate->parsed()) return run_validate(opts);
    if (partitions->parsed()) return run_partitions(opts, list && !count_only, max_partitions);
    if (lattice_ops->parsed()) {
      if (meet_names.empty() && join_names.empty()) {
        std::cerr << "error: lattice-ops needs --meet or --join\n";
        return 1;
      }
      return run_lattice_ops(opts, meet_names, join_names);
    }
    if (expected->parsed()) return run_expected(opts, act_name, val_name, intrinsic);
    if (compare->parsed()) return run_compare(opts, left_name, right_name, cmp_val);
    if (lottery->parsed()) {
      if (to_act.empty() && from_act.empty()) {
        std::cerr << "error: lottery needs --to-act or --from-act\n";
        return 1;
      }
      return run_lottery(opts, to_act, from_act);
    }
    if (allais->parsed()) return run_allais(opts, x, y);
    if (counterexample->parsed()) return run_counterexample(atoms, seed, budget_trials);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::budget_exceeded ? 3 : 2;
  }
  return 1;
}
