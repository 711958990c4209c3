#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "goedel/goedel.hpp"

namespace goedel::cli {

namespace {

constexpr std::size_t kDecimalPlaces = 30;
constexpr std::size_t kDefaultDepth = 10;

struct RunConfig {
  std::string formula;
  std::string formula_file;
  std::string valuation_file;
  std::size_t depth = kDefaultDepth;
  std::string mode = "+";
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  std::vector<std::string> digits;
  std::vector<std::string> premises;
  std::string stream;
  std::string out;
};

/// A usage problem detected after CLI11 parsing; reported with exit code 2.
struct UsageError : Error {
  using Error::Error;
};

std::size_t depth_default() {
  const char* env = std::getenv("GOEDEL_OMEGA_DEPTH");
  if (!env || !*env) return kDefaultDepth;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size() && v >= 1) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("GOEDEL_OMEGA_DEPTH must be a positive integer, got '") + env +
                   "'");
}

Mode parse_mode(const std::string& text) {
  if (text == "+" || text == "plus") return Mode::Plus;
  if (text == "-" || text == "minus") return Mode::Minus;
  throw UsageError("--mode must be + or -");
}

StreamRegistry make_registry(const RunConfig& cfg) {
  StreamRegistry registry = builtin_registry();
  for (const std::string& entry : cfg.digits) {
    const std::size_t eq = entry.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == entry.size())
      throw UsageError("--digits expects <name>=<file>, got '" + entry + "'");
    const std::string name = entry.substr(0, eq);
    if (!is_identifier(name)) throw UsageError("malformed stream name '" + name + "'");
    if (registry.has_digits(name)) throw UsageError("stream name '" + name + "' already taken");
    registry.add_digits(name, file_stream(entry.substr(eq + 1)));
  }
  return registry;
}

/// Formula texts for this run: the inline formula, or each line of the file.
std::vector<std::string> formula_texts(const RunConfig& cfg, bool& batch) {
  batch = !cfg.formula_file.empty();
  if (batch) {
    if (!cfg.formula.empty()) throw UsageError("give either a formula or --formula-file");
    return formula_lines(read_text_file(cfg.formula_file));
  }
  if (cfg.formula.empty()) throw UsageError("no formula given");
  return {cfg.formula};
}

void print_interval(std::ostream& out, const TruthInterval& v) {
  const Rational width = v.width();
  out << "lo\thi\twidth\n";
  out << v.lo() << '\t' << v.hi() << '\t' << width << '\n';
  out << v.lo().to_decimal(kDecimalPlaces) << '\t' << v.hi().to_decimal(kDecimalPlaces) << '\t'
      << width.to_decimal(kDecimalPlaces) << '\n';
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

int print_verdict(std::ostream& out, const Verdict& verdict) {
  if (const auto* none = std::get_if<NoCounterexampleFound>(&verdict)) {
    out << "verdict\tno-counterexample\n";
    out << "samples\t" << none->samples << '\n';
    out << "note\tsampling is one-sided; no counterexample does not establish validity\n";
    return kOk;
  }
  const auto& cx = std::get<Counterexample>(verdict);
  out << "verdict\tcounterexample\n";
  out << "source\t" << (cx.source() == SampleSource::Grid ? "grid" : "random") << '\t'
      << cx.sample_index() << '\n';
  out << "interval\t" << cx.interval().lo() << '\t' << cx.interval().hi() << '\n';
  out << "valuation\n" << format_valuation(cx.valuation());
  return kCounterexample;
}

SamplerConfig sampler_of(const RunConfig& cfg) {
  SamplerConfig s;
  s.seed = cfg.seed;
  s.sample_count = cfg.samples;
  return s;
}

int cmd_eval(const RunConfig& cfg, std::ostream& out) {
  const StreamRegistry registry = make_registry(cfg);
  const Valuation valuation = cfg.valuation_file.empty()
                                  ? Valuation()
                                  : parse_valuation(read_text_file(cfg.valuation_file));
  bool batch = false;
  for (const std::string& text : formula_texts(cfg, batch)) {
    if (batch) out << "# formula\t" << text << '\n';
    print_interval(out, eval(parse(text, registry), valuation, EvalConfig(cfg.depth)));
  }
  return kOk;
}

int cmd_translate(const RunConfig& cfg, std::ostream& out) {
  const StreamRegistry registry = make_registry(cfg);
  const Mode mode = parse_mode(cfg.mode);
  bool batch = false;
  for (const std::string& text : formula_texts(cfg, batch)) {
    if (batch) out << "# formula\t" << text << '\n';
    const Formula translated = translate(parse(text, registry), mode);
    const Rendering r = render(translated, cfg.depth);
    out << r.text << '\n';
    if (!r.reparseable) out << "note\tdisplay-only preview of anonymous streams\n";
    const FragmentReport f = fragment_report(translated, cfg.depth);
    out << "fragment\tcount_conj=" << yes_no(f.uses_count_conj)
        << "\tcount_disj=" << yes_no(f.uses_count_disj)
        << "\treal_const=" << yes_no(f.uses_real_const) << '\n';
  }
  return kOk;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const StreamRegistry registry = make_registry(cfg);
  bool batch = false;
  int code = kOk;
  for (const std::string& text : formula_texts(cfg, batch)) {
    if (batch) out << "# formula\t" << text << '\n';
    const Verdict v = check_tautology(parse(text, registry), EvalConfig(cfg.depth), sampler_of(cfg));
    code = std::max(code, print_verdict(out, v));
  }
  return code;
}

int cmd_entail(const RunConfig& cfg, std::ostream& out) {
  const StreamRegistry registry = make_registry(cfg);
  std::vector<Formula> premises;
  for (const std::string& p : cfg.premises) premises.push_back(parse(p, registry));
  bool batch = false;
  int code = kOk;
  for (const std::string& text : formula_texts(cfg, batch)) {
    if (batch) out << "# formula\t" << text << '\n';
    const Verdict v = check_entailment(premises, parse(text, registry), EvalConfig(cfg.depth),
                                       sampler_of(cfg));
    code = std::max(code, print_verdict(out, v));
  }
  return code;
}

int cmd_converge(const RunConfig& cfg, std::ostream& out) {
  const StreamRegistry registry = make_registry(cfg);
  if (cfg.stream.empty()) throw UsageError("converge needs --stream <name>");
  const DigitStream& d = registry.digits(cfg.stream);
  std::vector<Mode> modes{Mode::Plus, Mode::Minus};
  if (!cfg.mode.empty()) modes = {parse_mode(cfg.mode)};
  const Valuation valuation;
  bool first = true;
  for (Mode m : modes) {
    if (!first) out << '\n';
    first = false;
    const Formula f = real_const_formula(d, m);
    out << "# stream\t" << d.name() << "\tmode\t" << to_string(m) << '\n';
    out << "n\tlo\thi\twidth\n";
    for (std::size_t n = 1; n <= cfg.depth; ++n) {
      const TruthInterval v = eval(f, valuation, EvalConfig(n));
      out << n << '\t' << v.lo() << '\t' << v.hi() << '\t' << v.width() << '\n';
    }
  }
  return kOk;
}

int cmd_roundtrip(const RunConfig& cfg, std::ostream& out) {
  constexpr std::size_t kCompareDepth = 20;
  const StreamRegistry registry = make_registry(cfg);
  bool batch = false;
  int code = kOk;
  for (const std::string& text : formula_texts(cfg, batch)) {
    if (batch) out << "# formula\t" << text << '\n';
    const Formula phi = parse(text, registry);
    const Rendering r = render(phi, cfg.depth);
    out << r.text << '\n';
    const bool ok = r.reparseable &&
                    structural_eq_to_depth(parse(r.text, registry), phi, kCompareDepth);
    out << "roundtrip\t" << (ok ? "ok" : "mismatch") << '\n';
    if (!ok) code = kCounterexample;
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg.depth = depth_default();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  CLI::App app{"Infinitary Goedel logic with rational and real constants", "goedel-omega"};
  app.require_subcommand(1);

  auto add_formula = [&cfg](CLI::App* sub) {
    sub->add_option("formula,--formula", cfg.formula, "Formula text");
    sub->add_option("--formula-file", cfg.formula_file, "One formula per line; '#' comments");
  };
  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--depth", cfg.depth, "Stream elements examined per infinitary connective")
        ->check(CLI::PositiveNumber);
    sub->add_option("--digits", cfg.digits, "Register a digit file as <name>=<file>");
    sub->add_option("--out", cfg.out, "Write the report to this file");
  };
  auto add_sampling = [&cfg](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Seed of the random valuation sequence");
    sub->add_option("--samples", cfg.samples, "Random valuations after the boundary grid");
  };

  CLI::App* eval_cmd = app.add_subcommand("eval", "Interval value of a formula");
  add_formula(eval_cmd);
  add_common(eval_cmd);
  eval_cmd->add_option("--valuation", cfg.valuation_file, "Valuation file");

  CLI::App* translate_cmd = app.add_subcommand("translate", "Replace real constants");
  add_formula(translate_cmd);
  add_common(translate_cmd);
  translate_cmd->add_option("--mode", cfg.mode, "+ (disjunctive) or - (conjunctive)");

  CLI::App* check_cmd = app.add_subcommand("check", "Search for a counter-valuation");
  add_formula(check_cmd);
  add_common(check_cmd);
  add_sampling(check_cmd);

  CLI::App* entail_cmd = app.add_subcommand("entail", "Search for an entailment counterexample");
  add_formula(entail_cmd);
  add_common(entail_cmd);
  add_sampling(entail_cmd);
  entail_cmd->add_option("--premise", cfg.premises, "Premise formula (repeatable)");

  CLI::App* converge_cmd = app.add_subcommand("converge", "Enclosure table of a real constant");
  add_common(converge_cmd);
  converge_cmd->add_option("--stream", cfg.stream, "Registered digit stream name")->required();
  converge_cmd->add_option("--mode", cfg.mode, "Restrict to + or -");

  CLI::App* roundtrip_cmd = app.add_subcommand("roundtrip", "Parse, print and reparse");
  add_formula(roundtrip_cmd);
  add_common(roundtrip_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  if (converge_cmd->parsed() && converge_cmd->count("--mode") == 0) cfg.mode.clear();

  std::ostringstream report;
  int code = kOk;
  try {
    if (eval_cmd->parsed()) code = cmd_eval(cfg, report);
    else if (translate_cmd->parsed()) code = cmd_translate(cfg, report);
    else if (check_cmd->parsed()) code = cmd_check(cfg, report);
    else if (entail_cmd->parsed()) code = cmd_entail(cfg, report);
    else if (converge_cmd->parsed()) code = cmd_converge(cfg, report);
    else if (roundtrip_cmd->parsed()) code = cmd_roundtrip(cfg, report);
  } catch (const IoError& e) {
    out << report.str();
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::filesystem::filesystem_error& e) {
    out << report.str();
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    out << report.str();
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  if (cfg.out.empty()) {
    out << report.str();
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    file << report.str();
    if (!file) {
      err << "error: cannot write " << cfg.out << '\n';
      return kIoError;
    }
  }
  return code;
}

}  // namespace goedel::cli
