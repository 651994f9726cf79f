#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "semico/cli.hpp"
#include "semico/format.hpp"
#include "semico/reliability.hpp"
#include "semico/signature.hpp"
#include "semico/transform.hpp"
#include "semico/verify.hpp"

namespace semico::cli {

namespace {

using ojson = nlohmann::ordered_json;

ojson family_json(const SetFamily& f) {
  ojson out = ojson::array();
  for (SubsetMask m : f) out.push_back(m.components());
  return out;
}

ojson form_json(const MultilinearForm& f) {
  ojson terms = ojson::array();
  for (const auto& [mask, c] : f.terms())
    terms.push_back({{"subset", mask.components()}, {"coefficient", c}});
  return {{"text", format_simple_form(f)}, {"terms", std::move(terms)}};
}

ojson diagonal_json(const DiagonalPoly& d) {
  return {{"text", format_diagonal(d)}, {"coefficients", d.coefficients()}};
}

ojson signature_json(const SignatureVector& s) {
  ojson out = ojson::array();
  for (const Rational& q : s.values()) out.push_back(format_rational(q));
  return out;
}

ojson counts_json(const SmallCounts& c) {
  return {{"alpha1", c.alpha1},
          {"alpha2", c.alpha2},
          {"beta1", c.beta1},
          {"beta2", c.beta2}};
}

std::string counts_text(const SmallCounts& c) {
  return "alpha = (" + std::to_string(c.alpha1) + ", " +
         std::to_string(c.alpha2) + ")\nbeta = (" + std::to_string(c.beta1) +
         ", " + std::to_string(c.beta2) + ")\n";
}

// Everything `analyze` reports, computed once from the table.
struct Analysis {
  TruthTable table;
  TruthTable dual;
  MultilinearForm form;
  MultilinearForm dual_form;
  SetFamily paths;
  SetFamily cuts;
  DiagonalPoly diagonal;
  DiagonalPoly dual_diagonal;
  SignatureVector signature;
  SmallCounts counts;
};

Analysis analyze(const TruthTable& t) {
  TruthTable dual = dualize_table(t);
  MultilinearForm form = mobius_transform(t);
  MultilinearForm dual_form = mobius_transform(dual);
  DiagonalPoly diagonal = diagonal_coefficients(form);
  DiagonalPoly dual_diagonal = diagonal_coefficients(dual_form);
  SignatureVector signature = signature_from_diagonal(diagonal);
  SmallCounts counts = small_counts_from_coefficients(
      {diagonal.coefficient(1), t.n() >= 2 ? diagonal.coefficient(2) : 0,
       dual_diagonal.coefficient(1),
       t.n() >= 2 ? dual_diagonal.coefficient(2) : 0});
  return {t,
          dual,
          form,
          dual_form,
          minimal_path_sets(t),
          minimal_cut_sets(t),
          std::move(diagonal),
          std::move(dual_diagonal),
          std::move(signature),
          counts};
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(15) << v;
  return os.str();
}

std::vector<Rational> probabilities(const Options& options, int n) {
  if (options.p.empty())
    throw InputError("reliability needs --p <common> or --p <p1,...,pn>");
  std::vector<Rational> p;
  for (const std::string& s : options.p) p.push_back(parse_rational(s));
  if (p.size() == 1) p.assign(static_cast<std::size_t>(n), p.front());
  if (p.size() != static_cast<std::size_t>(n))
    throw InputError("--p needs 1 or " + std::to_string(n) + " values, got " +
                     std::to_string(options.p.size()));
  return p;
}

Report render(const ojson& json, std::string text, const Options& options,
              int exit_code = kSuccess) {
  if (options.format == Format::kJson) return {json.dump(2) + "\n", exit_code};
  return {std::move(text), exit_code};
}

}  // namespace

Report run_command(const SystemSpec& spec, std::string_view command,
                   const Options& options) {
  options.limits.validate();
  const TruthTable table = to_table(spec, options.limits);
  const std::string label = spec.name.empty() ? "system" : spec.name;

  if (command == "analyze") {
    const Analysis a = analyze(table);
    ojson j;
    j["name"] = spec.name;
    j["n"] = spec.n;
    j["table"] = a.table.to_bit_string();
    j["simple_form"] = form_json(a.form);
    j["dual_simple_form"] = form_json(a.dual_form);
    j["minimal_path_sets"] = family_json(a.paths);
    j["minimal_cut_sets"] = family_json(a.cuts);
    j["diagonal"] = diagonal_json(a.diagonal);
    j["dual_diagonal"] = diagonal_json(a.dual_diagonal);
    j["signature"] = signature_json(a.signature);
    j["counts"] = counts_json(a.counts);

    std::string text;
    text += "system: " + label + "\n";
    text += "components: " + std::to_string(spec.n) + "\n";
    text += "table: " + a.table.to_bit_string() + "\n";
    text += "simple form: " + format_simple_form(a.form) + "\n";
    text += "dual simple form: " + format_simple_form(a.dual_form) + "\n";
    text += "minimal path sets: " + a.paths.to_string() + "\n";
    text += "minimal cut sets: " + a.cuts.to_string() + "\n";
    text += "diagonal: " + format_diagonal(a.diagonal) + "\n";
    text += "dual diagonal: " + format_diagonal(a.dual_diagonal) + "\n";
    text += "signature: s = " + a.signature.to_string() + "\n";
    text += counts_text(a.counts);
    return render(j, std::move(text), options);
  }

  if (command == "dual") {
    const TruthTable dual = dualize_table(table);
    const MultilinearForm form = mobius_transform(dual);
    const SetFamily paths = minimal_path_sets(dual);
    ojson j{{"n", spec.n},
            {"table", dual.to_bit_string()},
            {"simple_form", form_json(form)},
            {"minimal_path_sets", family_json(paths)}};
    std::string text = "dual table: " + dual.to_bit_string() + "\n" +
                       "dual simple form: " + format_simple_form(form) + "\n" +
                       "dual minimal path sets: " + paths.to_string() + "\n";
    return render(j, std::move(text), options);
  }

  if (command == "paths" || command == "cuts") {
    const bool want_paths = command == "paths";
    const SetFamily family =
        want_paths ? minimal_path_sets(table) : minimal_cut_sets(table);
    const char* key = want_paths ? "minimal_path_sets" : "minimal_cut_sets";
    const char* title = want_paths ? "minimal path sets" : "minimal cut sets";
    return render(ojson{{key, family_json(family)}},
                  std::string(title) + ": " + family.to_string() + "\n",
                  options);
  }

  if (command == "simple-form") {
    const MultilinearForm form = mobius_transform(table);
    return render(ojson{{"simple_form", form_json(form)}},
                  "simple form: " + format_simple_form(form) + "\n", options);
  }

  if (command == "signature") {
    const SignatureVector s = signature_boland(table);
    return render(ojson{{"signature", signature_json(s)}},
                  "s = " + s.to_string() + "\n", options);
  }

  if (command == "counts") {
    const SmallCounts c = small_counts_from_signature(signature_boland(table));
    return render(ojson{{"counts", counts_json(c)}}, counts_text(c), options);
  }

  if (command == "reliability") {
    const std::vector<Rational> p = probabilities(options, spec.n);
    const MultilinearForm form = mobius_transform(table);
    ojson j;
    std::string value;
    if (options.exact) {
      const Rational r = evaluate_reliability<Rational>(form, p);
      value = format_rational(r);
      j["reliability"] = value;
    } else {
      std::vector<double> pd;
      for (const Rational& q : p) pd.push_back(q.convert_to<double>());
      const double r = evaluate_reliability<double>(form, pd);
      value = format_double(r);
      j["reliability"] = r;
    }
    return render(j, "reliability: " + value + "\n", options);
  }

  if (command == "verify") {
    const VerificationReport report = verify_system(table, options.limits);
    ojson checks = ojson::array();
    std::string text;
    for (const Check& c : report.checks) {
      checks.push_back(
          {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      text += (c.passed ? "ok   " : "FAIL ") + c.name;
      if (!c.passed) text += ": " + c.detail;
      text += "\n";
    }
    for (const std::string& why : report.skipped) text += "skip " + why + "\n";
    const std::size_t passed = report.checks.size() - report.failures();
    text += "verify " + label + ": " + std::to_string(passed) + "/" +
            std::to_string(report.checks.size()) + " checks passed\n";
    ojson j{{"name", spec.name},
            {"passed", report.all_passed()},
            {"checks", std::move(checks)},
            {"skipped", report.skipped}};
    return render(j, std::move(text), options,
                  report.all_passed() ? kSuccess : kVerificationMismatch);
  }

  throw InputError("unknown command \"" + std::string(command) + "\"");
}

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of semicoherent system structure functions",
               "semico"};
  std::string command;
  std::string path;
  std::string format = "text";
  std::vector<std::string> p;
  Options options;

  app.add_option("command", command, "What to compute")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(kCommands),
                                                     std::end(kCommands))));
  app.add_option("file", path, "System document (JSON), or - for stdin")
      ->required();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--p", p,
                 "Component reliabilities: one common value or n values, "
                 "comma separated; decimals or fractions")
      ->delimiter(',');
  app.add_flag("--exact", options.exact, "Exact rational reliability output");
  app.add_option("--max-r", options.limits.max_r,
                 "Largest family for inclusion-exclusion")
      ->check(CLI::Range(1, kMaxFamilySize));
  app.add_option("--max-n", options.limits.max_n,
                 "Largest component count for table operations")
      ->check(CLI::Range(1, kMaxComponents));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }
  options.format = format == "json" ? Format::kJson : Format::kText;
  options.p = std::move(p);

  try {
    std::string text;
    if (path == "-") {
      text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
      std::ifstream file(path, std::ios::binary);
      if (!file) throw InputError("cannot open " + path);
      text.assign(std::istreambuf_iterator<char>(file), {});
    }
    const Report report = run_command(parse_spec(text), command, options);
    out << report.output;
    return report.exit_code;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kCapacityError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace semico::cli
