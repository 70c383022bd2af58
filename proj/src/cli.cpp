#include "superdet/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "superdet/chartab.hpp"
#include "superdet/detfact.hpp"
#include "superdet/io.hpp"
#include "superdet/regrep.hpp"
#include "superdet/sct.hpp"

namespace superdet::cli {

using io::Json;

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::PartNotInvariant:
    case ErrorCode::NotClosed:
    case ErrorCode::IdentityFails:
    case ErrorCode::BlocksInconsistent:
    case ErrorCode::DegenerateFactors:
    case ErrorCode::MultiplicityNotIntegral:
    case ErrorCode::DegreeMismatch:
      return kExitRejected;
    case ErrorCode::CheckerDisagreement:
    case ErrorCode::FormulaMismatch:
    case ErrorCode::OrthogonalityViolation:
    case ErrorCode::EigensplitFailed:
      return kExitDisagreement;
    default:
      return kExitInput;
  }
}

namespace {

std::string format_complex(Complex z) {
  auto snap = [](double v) { return std::abs(v) < 1e-9 ? 0.0 : v; };
  std::ostringstream s;
  s.precision(6);
  const double re = snap(z.real()), im = snap(z.imag());
  if (im == 0.0) {
    s << re;
  } else if (re == 0.0) {
    s << im << "i";
  } else {
    s << re << (im < 0 ? "-" : "+") << std::abs(im) << "i";
  }
  return s.str();
}

Json header(const std::string& command, const FiniteGroup& group, const RunConfig& cfg) {
  Json j;
  j["command"] = command;
  j["group"] = group.name();
  j["order"] = group.order();
  j["seed"] = cfg.seed;
  j["tolerance"] = cfg.tolerance;
  j["trials"] = cfg.trials;
  j["symbolic_cap"] = cfg.symbolic_cap;
  return j;
}

VerifyOptions verify_options(const RunConfig& cfg) {
  VerifyOptions o;
  o.trials = cfg.trials;
  o.seed = cfg.seed;
  o.tolerance = cfg.tolerance;
  o.symbolic_cap = cfg.symbolic_cap;
  return o;
}

struct Emitted {
  Json json;
  std::string text;
};

Emitted cmd_info(const std::string& group_file, const RunConfig& cfg) {
  const FiniteGroup group = io::load_group(group_file);
  const ConjClasses classes = conjugacy_classes(group);
  const CharacterTable table = character_table(group, classes, cfg.seed);

  Json j = header("info", group, cfg);
  std::vector<std::string> reps;
  for (const auto& c : classes.classes) reps.push_back(group.labels()[c.front()]);
  j["abelian"] = group.is_abelian();
  j["class_sizes"] = classes.sizes;
  j["class_representatives"] = reps;
  j["character_table"] = io::to_json(table);
  j["orthogonality_residual"] = orthogonality_residual(table);

  std::ostringstream t;
  t << "group " << group.name() << ", order " << group.order() << ", " << classes.count()
    << " classes, seed " << cfg.seed << "\n";
  t << "class sizes:";
  for (auto s : classes.sizes) t << " " << s;
  t << "\nrepresentatives:";
  for (const auto& r : reps) t << " " << r;
  t << "\ncharacter table:\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    t << "  chi" << i << " (degree " << table.degrees[i] << "):";
    for (const auto& v : table.values[i]) t << " " << format_complex(v);
    t << "\n";
  }
  return {std::move(j), t.str()};
}

bool invariant(const ConjClasses& classes, const GPartition& p) {
  return is_invariant_partition(classes, p);
}

Emitted cmd_check(const std::string& group_file, const std::string& partition_file,
                  const RunConfig& cfg) {
  const FiniteGroup group = io::load_group(group_file);
  const GPartition partition = io::load_partition(partition_file, group.order());
  const ConjClasses classes = conjugacy_classes(group);
  const CharacterTable table = character_table(group, classes, cfg.seed);

  const bool inv = invariant(classes, partition);
  const bool schur = inv && check_schur_closure(group, classes, partition);
  std::optional<std::vector<std::vector<std::size_t>>> blocks;
  bool marginal = false;
  if (inv) {
    const auto grouping = omega_grouping(table, partition);
    marginal = grouping.marginal;
    if (grouping.groups.size() == partition.size()) blocks = grouping.groups;
  }
  const bool omega = blocks.has_value();

  Json j = header("check", group, cfg);
  j["parts"] = io::to_json(partition);
  j["invariant"] = inv;
  j["is_sct"] = schur && omega;
  j["route_schur"] = schur;
  j["route_omega"] = omega;
  j["blocks"] = blocks ? Json(*blocks) : Json(nullptr);
  j["marginal"] = marginal;

  std::ostringstream t;
  t << (schur && omega ? "supercharacter theory" : "not a supercharacter theory") << " ("
    << partition.size() << " parts; closure " << (schur ? "yes" : "no") << ", omega "
    << (omega ? "yes" : "no") << ")\n";
  if (!inv) t << "partition is not a union of conjugacy classes with {1} alone\n";
  if (schur != omega)
    throw Error(ErrorCode::CheckerDisagreement,
                "closure and omega routes disagree on " + partition_file);
  return {std::move(j), t.str()};
}

Emitted cmd_factor(const std::string& group_file, const std::string& partition_file,
                   const RunConfig& cfg) {
  const FiniteGroup group = io::load_group(group_file);
  const GPartition partition = io::load_partition(partition_file, group.order());
  const ConjClasses classes = conjugacy_classes(group);
  const CharacterTable table = character_table(group, classes, cfg.seed);

  if (!invariant(classes, partition))
    throw Error(ErrorCode::PartNotInvariant,
                "not a supercharacter theory: parts are not unions of conjugacy classes with "
                "{1} alone");
  const bool schur = check_schur_closure(group, classes, partition);
  const auto blocks = check_via_omega(table, partition);
  if (schur != blocks.has_value())
    throw Error(ErrorCode::CheckerDisagreement, "closure and omega routes disagree");
  if (!schur)
    throw Error(ErrorCode::NotClosed,
                "not a supercharacter theory: part sums do not span a subalgebra");

  const SuperTheory theory = build_theory(table, partition, *blocks);
  const auto labels = part_labels(group, partition);
  const VerifyOptions opts = verify_options(cfg);
  const VarMatrix matrix = collapsed_matrix(group, partition);

  const LinearFactorization predicted = predicted_factorization(theory, labels);
  const VerificationReport predicted_report = verify_factorization(matrix, predicted, opts);
  require_verified(predicted_report);

  const auto spectral = spectral_factorization(group, partition, opts);
  if (!spectral)
    throw Error(ErrorCode::CheckerDisagreement,
                "spectral route found a different number of factors than parts");
  const VerificationReport spectral_report = verify_factorization(matrix, *spectral, opts);
  const auto pairing = match_factors(predicted, *spectral);
  if (!pairing)
    throw Error(ErrorCode::CheckerDisagreement, "predicted and spectral factors do not match");
  const ClassFunctionTable recovered = recover_characters(*spectral, partition);

  Json j = header("factor", group, cfg);
  j["variables"] = labels;
  j["theory"] = io::to_json(theory);
  j["predicted"] = io::to_json(predicted, predicted_report);
  j["spectral"] = io::to_json(*spectral, spectral_report);
  j["pairing"] = *pairing;
  Json rc;
  Json rows = Json::array();
  for (const auto& row : recovered.values) rows.push_back(io::complex_vector_json(row));
  rc["values"] = std::move(rows);
  rc["degrees"] = recovered.degrees;
  j["recovered_characters"] = std::move(rc);

  std::ostringstream t;
  t << "det of the collapsed group matrix (" << partition.size() << " variables, seed "
    << cfg.seed << ", tolerance " << cfg.tolerance << "):\n";
  for (const auto& f : predicted.factors) {
    t << "  (";
    for (std::size_t k = 0; k < f.xi.size(); ++k)
      t << (k ? " + " : "") << "(" << format_complex(f.xi[k]) << ")*x" << labels[k];
    t << ")^" << f.multiplicity << "\n";
  }
  t << "verified: " << (predicted_report.passed ? "yes" : "no") << ", max relative error "
    << predicted_report.max_rel_error << " over " << predicted_report.trials << " trials"
    << (predicted_report.symbolic_checked ? ", symbolic match" : "") << "\n";
  t << "spectral route agrees: yes\n";
  return {std::move(j), t.str()};
}

Emitted cmd_enumerate(const std::string& group_file, const RunConfig& cfg) {
  const FiniteGroup group = io::load_group(group_file);
  const CharacterTable table = character_table(group, cfg.seed);
  const Enumeration found = enumerate_theories(group, table);

  Json j = header("enumerate", group, cfg);
  j["count"] = found.theories.size();
  j["candidates"] = found.candidates;
  j["marginal"] = found.marginal;
  std::map<std::size_t, std::size_t> by_parts;
  Json theories = Json::array();
  for (const auto& th : found.theories) {
    ++by_parts[th.size()];
    theories.push_back(io::to_json(th));
  }
  Json summary = Json::object();
  for (auto [n, c] : by_parts) summary[std::to_string(n)] = c;
  j["by_parts"] = std::move(summary);
  j["theories"] = std::move(theories);

  std::ostringstream t;
  t << found.theories.size() << " supercharacter theories of " << group.name() << " (order "
    << group.order() << ", " << found.candidates << " candidate partitions)\n";
  for (auto [n, c] : by_parts) t << "  " << n << " parts: " << c << "\n";
  return {std::move(j), t.str()};
}

Emitted cmd_groupdet(const std::string& group_file, const std::string& partition_file,
                     const RunConfig& cfg, std::ostream& err) {
  const FiniteGroup group = io::load_group(group_file);
  std::vector<std::vector<Element>> singletons;
  for (Element g = 0; g < group.order(); ++g) singletons.push_back({g});
  const GPartition partition =
      partition_file.empty() ? GPartition::from_parts(group.order(), std::move(singletons))
                             : io::load_partition(partition_file, group.order());
  const VarMatrix matrix = collapsed_matrix(group, partition);
  const auto labels = part_labels(group, partition);

  Json j = header("groupdet", group, cfg);
  j["variables"] = labels;
  std::ostringstream t;
  try {
    const SparsePoly det = det_symbolic(matrix, cfg.symbolic_cap);
    const std::string text = to_string(det, labels);
    j["degree"] = det.degree();
    j["polynomial"] = text;
    t << text << "\n";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DimTooLargeForSymbolic) throw;
    err << "warning: " << e.what() << "; evaluating at " << cfg.trials << " points instead\n";
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> coord(-5, 5);
    Json evals = Json::array();
    std::vector<Complex> x(matrix.nvars());
    for (std::size_t i = 0; i < cfg.trials; ++i) {
      for (auto& v : x) v = Complex(coord(rng), coord(rng));
      const Complex value = det_eval(matrix, x);
      Json e;
      e["point"] = io::complex_vector_json(x);
      e["value"] = io::complex_json(value);
      evals.push_back(std::move(e));
      t << "det(";
      for (std::size_t k = 0; k < x.size(); ++k) t << (k ? ", " : "") << format_complex(x[k]);
      t << ") = " << format_complex(value) << "\n";
    }
    j["evaluations"] = std::move(evals);
  }
  return {std::move(j), t.str()};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv("SUPERDET_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: SUPERDET_SEED is not an integer: " << env << "\n";
      return kExitInput;
    }
  }

  CLI::App app{"Group determinants and supercharacter theories of finite groups", "superdet"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--tolerance", cfg.tolerance, "relative tolerance for identity checks")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for random combinations and test points");
  app.add_option("--trials", cfg.trials, "random evaluation points")->check(CLI::PositiveNumber);
  app.add_option("--symbolic-cap", cfg.symbolic_cap, "largest dimension expanded symbolically")
      ->check(CLI::PositiveNumber);
  app.add_flag("--text", cfg.text, "human-readable output");
  app.add_option("--output", cfg.output, "write the report to this path");

  std::string group_file, partition_file;
  std::function<Emitted()> action;

  auto* info = app.add_subcommand("info", "order, classes and character table");
  info->add_option("group", group_file)->required();
  info->callback([&] { action = [&] { return cmd_info(group_file, cfg); }; });

  auto* check = app.add_subcommand("check", "decide whether a partition is a supercharacter theory");
  check->add_option("group", group_file)->required();
  check->add_option("partition", partition_file)->required();
  check->callback([&] { action = [&] { return cmd_check(group_file, partition_file, cfg); }; });

  auto* factor = app.add_subcommand("factor", "factor the collapsed group determinant");
  factor->add_option("group", group_file)->required();
  factor->add_option("partition", partition_file)->required();
  factor->callback([&] { action = [&] { return cmd_factor(group_file, partition_file, cfg); }; });

  auto* enumerate = app.add_subcommand("enumerate", "list every supercharacter theory");
  enumerate->add_option("group", group_file)->required();
  enumerate->callback([&] { action = [&] { return cmd_enumerate(group_file, cfg); }; });

  auto* groupdet = app.add_subcommand("groupdet", "expand the (collapsed) group determinant");
  groupdet->add_option("group", group_file)->required();
  groupdet->add_option("partition", partition_file);
  groupdet->callback(
      [&] { action = [&] { return cmd_groupdet(group_file, partition_file, cfg, err); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    Emitted result = action();
    std::string body = cfg.text ? result.text : result.json.dump(2) + "\n";
    if (cfg.output.empty()) {
      out << body;
    } else {
      std::ofstream file(cfg.output, std::ios::binary);
      if (!file) {
        err << "error: cannot write " << cfg.output << "\n";
        return kExitInput;
      }
      file << body;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  }
}

}  // namespace superdet::cli
