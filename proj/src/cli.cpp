#include "utlab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "utlab/errors.hpp"
#include "utlab/schwarz.hpp"
#include "utlab/search.hpp"
#include "utlab/series.hpp"

namespace utlab::cli {

using nlohmann::json;

namespace {

double parse_real(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError("cannot parse complex number '" + std::string(whole) + "'");
  }
  return value;
}

json rational_json(const Rational& r) { return {{"num", r.num()}, {"den", r.den()}}; }

std::string fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

/// Left-aligned text table.
void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      out << cells[c];
      if (c + 1 < cells.size()) out << std::string(width[c] - cells[c].size() + 2, ' ');
    }
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

void print_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << cells[c];
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

json params_json(const SchurParams& g) {
  return {{"gamma0", format_complex(g.gamma0)},
          {"gamma1", format_complex(g.gamma1)},
          {"gamma2", format_complex(g.gamma2)}};
}

struct LemmaPair {
  double mu;
  double nu;
  std::string label;
};

const std::array<LemmaPair, 4>& builtin_pairs() {
  static const std::array<LemmaPair, 4> pairs = {{{-14.0 / 3.0, 13.0 / 3.0, "-14/3, 13/3"},
                                                  {22.0 / 9.0, -25.0 / 9.0, "22/9, -25/9"},
                                                  {-10.0 / 3.0, 21.0, "-10/3, 21"},
                                                  {35.0 / 3.0, -33.0 / 2.0, "35/3, -33/2"}}};
  return pairs;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  const std::string_view v = s;
  if (v.empty()) throw UsageError("empty complex number");
  if (v.back() != 'i') return {parse_real(v, text), 0.0};

  const std::string_view body = v.substr(0, v.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string_view re = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view im = split == std::string_view::npos ? body : body.substr(split);
  double imag = 1.0;
  if (im == "-") {
    imag = -1.0;
  } else if (!im.empty() && im != "+") {
    imag = parse_real(im, text);
  }
  return {re.empty() ? 0.0 : parse_real(re, text), imag};
}

std::vector<Complex> parse_complex_list(std::string_view text) {
  std::vector<Complex> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(parse_complex(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string format_complex(Complex z) {
  const double re = z.real();
  const double im = z.imag();
  auto imag_part = [](double y) {
    if (y == 1.0) return std::string("i");
    if (y == -1.0) return std::string("-i");
    return format_double(y) + "i";
  };
  if (im == 0.0) return format_double(re);
  if (re == 0.0) return imag_part(im);
  std::string s = format_double(re);
  const std::string tail = imag_part(im);
  return tail.front() == '-' ? s + tail : s + "+" + tail;
}

unsigned threads_from_env() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("UTLAB_THREADS")) {
    unsigned cap = 0;
    const std::string_view v(env);
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), cap);
    if (ec == std::errc{} && ptr == v.data() + v.size() && cap > 0) hw = std::min(hw, cap);
  }
  return hw;
}

int cmd_verify_extremal(const RunConfig& cfg, std::ostream& out, const std::vector<ExtremalEntry>& catalog) {
  std::vector<std::vector<std::string>> rows;
  json jrows = json::array();
  int mismatches = 0;
  for (const auto& entry : catalog) {
    for (const auto& [fn, exact] : entry.attained) {
      const double attained = bound_quantity(fn, evaluate(fn, entry.inverse));
      const double diff = std::abs(attained - exact.value());
      const bool ok = diff <= kExtremalTolerance;
      mismatches += ok ? 0 : 1;
      rows.push_back({entry.label, std::string(to_string(entry.cls)), std::string(to_string(fn)),
                      format_double(attained), exact.str(), format_double(diff), ok ? "ok" : "MISMATCH"});
      jrows.push_back({{"entry", entry.label},
                       {"class", to_string(entry.cls)},
                       {"functional", to_string(fn)},
                       {"attained", attained},
                       {"bound", rational_json(exact)},
                       {"abs_diff", diff},
                       {"ok", ok}});
    }
  }

  switch (cfg.format) {
    case Format::Json:
      out << json{{"command", "verify-extremal"},
                  {"tolerance", kExtremalTolerance},
                  {"rows", jrows},
                  {"mismatches", mismatches}}
                 .dump(2)
          << '\n';
      break;
    case Format::Csv:
      for (auto& row : rows) row.pop_back();
      print_csv(out, {"entry", "class", "functional", "attained", "bound", "abs_diff"}, rows);
      break;
    case Format::Text:
      print_table(out, {"entry", "class", "functional", "attained", "bound", "|diff|", "status"}, rows);
      out << mismatches << " mismatch(es)\n";
      break;
  }
  return mismatches == 0 ? exit_code::kSuccess : exit_code::kVerificationFailure;
}

int cmd_search(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.cls || !cfg.functional) throw UsageError("search requires --class and --functional");
  SearchProblem problem;
  problem.cls = *cfg.cls;
  problem.functional = *cfg.functional;
  problem.starts = cfg.starts;
  problem.max_iters = cfg.iters;
  problem.seed = cfg.seed;
  problem.threads = cfg.threads;
  validate(problem);

  const SearchResult result = maximize(problem);
  const Rational bound = *exact_bound(problem.cls, problem.functional);
  const double rel_gap = result.gap / bound.value();
  const bool within = std::abs(rel_gap) <= cfg.tol && result.max_observed <= bound.value() + 1e-9;

  switch (cfg.format) {
    case Format::Json:
      out << json{{"command", "search"},
                  {"class", to_string(problem.cls)},
                  {"functional", to_string(problem.functional)},
                  {"seed", problem.seed},
                  {"starts", problem.starts},
                  {"max_iters", problem.max_iters},
                  {"best_value", result.best_value},
                  {"exact_bound", rational_json(bound)},
                  {"gap", result.gap},
                  {"relative_gap", rel_gap},
                  {"max_observed", result.max_observed},
                  {"argmax", params_json(result.argmax)},
                  {"evaluations", result.evaluations},
                  {"converged", result.converged},
                  {"per_start_bests", result.per_start_bests}}
                 .dump(2)
          << '\n';
      break;
    case Format::Csv:
      print_csv(out,
                {"class", "functional", "best_value", "exact_bound_num", "exact_bound_den", "gap", "evaluations",
                 "converged"},
                {{std::string(to_string(problem.cls)), std::string(to_string(problem.functional)),
                  format_double(result.best_value), std::to_string(bound.num()), std::to_string(bound.den()),
                  format_double(result.gap), std::to_string(result.evaluations), result.converged ? "true" : "false"}});
      break;
    case Format::Text:
      out << "class       " << to_string(problem.cls) << '\n'
          << "functional  " << to_string(problem.functional) << '\n'
          << "best        " << fixed(result.best_value) << '\n'
          << "exact       " << bound.str() << " = " << fixed(bound.value()) << '\n'
          << "gap         " << fixed(result.gap) << " (relative " << fixed(rel_gap) << ")\n"
          << "argmax      " << format_complex(result.argmax.gamma0) << ", " << format_complex(result.argmax.gamma1)
          << ", " << format_complex(result.argmax.gamma2) << '\n'
          << "evaluations " << result.evaluations << '\n'
          << "converged   " << (result.converged ? "yes" : "no") << '\n';
      break;
  }
  if (!result.converged) return exit_code::kNonConverged;
  return within ? exit_code::kSuccess : exit_code::kVerificationFailure;
}

int cmd_lemma(const RunConfig& cfg, std::ostream& out) {
  if (cfg.samples < 1) throw UsageError("--samples must be >= 1");
  if (cfg.mu.has_value() != cfg.nu.has_value()) throw UsageError("--mu and --nu must be given together");
  std::vector<LemmaPair> pairs;
  if (cfg.mu) {
    pairs.push_back({*cfg.mu, *cfg.nu, format_double(*cfg.mu) + ", " + format_double(*cfg.nu)});
  } else {
    pairs.assign(builtin_pairs().begin(), builtin_pairs().end());
  }

  std::vector<double> maxima(pairs.size(), 0.0);
  for (std::int64_t i = 0; i < cfg.samples; ++i) {
    const SchwarzCoeffs c = schur_to_coeffs(sample_param(cfg.seed, static_cast<std::uint64_t>(i)));
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      maxima[p] = std::max(maxima[p], ps_functional(c, pairs[p].mu, pairs[p].nu));
    }
  }

  bool all_ok = true;
  std::vector<std::vector<std::string>> rows;
  json jrows = json::array();
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto region = region_member(pairs[p].mu, pairs[p].nu);
    const double bound = std::abs(pairs[p].nu);
    const bool ok = maxima[p] <= bound + kLemmaTolerance;
    all_ok = all_ok && ok;
    const std::string region_name = region ? std::string(to_string(*region)) : "none";
    rows.push_back({pairs[p].label, region_name, fixed(maxima[p]), fixed(bound), ok ? "ok" : "VIOLATED"});
    jrows.push_back({{"mu", pairs[p].mu},
                     {"nu", pairs[p].nu},
                     {"region", region ? json(to_string(*region)) : json(nullptr)},
                     {"max", maxima[p]},
                     {"bound", bound},
                     {"ok", ok}});
  }

  switch (cfg.format) {
    case Format::Json:
      out << json{{"command", "lemma"}, {"samples", cfg.samples}, {"seed", cfg.seed}, {"pairs", jrows}}.dump(2)
          << '\n';
      break;
    case Format::Csv: {
      std::vector<std::vector<std::string>> csv;
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        csv.push_back({format_double(pairs[p].mu), format_double(pairs[p].nu), rows[p][1], format_double(maxima[p]),
                       format_double(std::abs(pairs[p].nu)), rows[p][4] == "ok" ? "true" : "false"});
      }
      print_csv(out, {"mu", "nu", "region", "max", "bound", "ok"}, csv);
      break;
    }
    case Format::Text:
      out << "samples " << cfg.samples << ", seed " << cfg.seed << '\n';
      print_table(out, {"(mu, nu)", "region", "max |c3+mu c1c2+nu c1^3|", "|nu|", "status"}, rows);
      break;
  }
  return all_ok ? exit_code::kSuccess : exit_code::kVerificationFailure;
}

int cmd_invert(const RunConfig& cfg, std::ostream& out) {
  const std::vector<Complex> tail = parse_complex_list(cfg.coeffs);
  const int order = static_cast<int>(tail.size()) + 1;
  const TruncatedSeries inverse = reverse(TruncatedSeries::normalized(tail, order));

  std::vector<std::string> coeffs;
  for (int k = 2; k <= order; ++k) coeffs.push_back(format_complex(inverse[k]));

  switch (cfg.format) {
    case Format::Json: {
      std::vector<std::string> input;
      for (Complex z : tail) input.push_back(format_complex(z));
      out << json{{"command", "invert"}, {"input", input}, {"inverse", coeffs}}.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      std::vector<std::vector<std::string>> rows;
      for (int k = 2; k <= order; ++k) {
        rows.push_back({std::to_string(k), format_double(inverse[k].real()), format_double(inverse[k].imag())});
      }
      print_csv(out, {"k", "re", "im"}, rows);
      break;
    }
    case Format::Text:
      for (std::size_t k = 0; k < coeffs.size(); ++k) out << (k ? ", " : "") << coeffs[k];
      out << '\n';
      break;
  }
  return exit_code::kSuccess;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out) {
  RefutationSettings settings;
  settings.starts = cfg.starts;
  settings.max_iters = cfg.iters;
  settings.seed = cfg.seed;
  settings.threads = cfg.threads;
  const auto report = refutation_report(settings);

  bool converged = true;
  std::vector<std::vector<std::string>> rows;
  json jrows = json::array();
  for (const auto& row : report) {
    const auto& rec = row.record;
    converged = converged && row.search.converged;
    const std::string cls(to_string(rec.cls));
    const std::string fn(to_string(rec.functional));
    const std::string verdict(to_string(row.verdict));
    switch (cfg.format) {
      case Format::Text:
        rows.push_back({cls, fn, format_double(*rec.prior_claim), rec.exact_bound.str(),
                        fixed(row.search.best_value), fixed(row.search.gap), verdict});
        break;
      case Format::Csv:
        rows.push_back({cls, fn, format_double(*rec.prior_claim), std::to_string(rec.exact_bound.num()),
                        std::to_string(rec.exact_bound.den()), format_double(row.search.best_value),
                        format_double(row.search.gap), verdict});
        break;
      case Format::Json:
        jrows.push_back({{"class", cls},
                         {"functional", fn},
                         {"prior_claim", *rec.prior_claim},
                         {"exact_bound", rational_json(rec.exact_bound)},
                         {"numeric_max", row.search.best_value},
                         {"gap", row.search.gap},
                         {"witness", row.witness_label},
                         {"witness_value", row.witness_value},
                         {"converged", row.search.converged},
                         {"verdict", verdict}});
        break;
    }
  }

  switch (cfg.format) {
    case Format::Json:
      out << json{{"command", "compare"}, {"seed", cfg.seed}, {"rows", jrows}}.dump(2) << '\n';
      break;
    case Format::Csv:
      print_csv(out,
                {"class", "functional", "prior_claim", "exact_bound_num", "exact_bound_den", "numeric_max", "gap",
                 "verdict"},
                rows);
      break;
    case Format::Text:
      print_table(out, {"class", "functional", "prior claim", "corrected", "numeric max", "gap", "verdict"}, rows);
      break;
  }
  return converged ? exit_code::kSuccess : exit_code::kNonConverged;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (cfg.output_path) {
    file.open(*cfg.output_path);
    if (!file) {
      err << "error: cannot open " << *cfg.output_path << " for writing\n";
      return exit_code::kUsage;
    }
    sink = &file;
  }
  try {
    switch (cfg.command) {
      case Command::VerifyExtremal: return cmd_verify_extremal(cfg, *sink);
      case Command::Search: return cmd_search(cfg, *sink);
      case Command::Lemma: return cmd_lemma(cfg, *sink);
      case Command::Invert: return cmd_invert(cfg, *sink);
      case Command::Compare: return cmd_compare(cfg, *sink);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  }
  return exit_code::kUsage;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coefficient bounds for inverses of univalent functions"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.threads = threads_from_env();
  std::string format = "text";
  std::string cls;
  std::string functional;
  std::string output;

  const std::map<std::string, Format> formats = {{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("-o,--output", output, "Write the report to a file instead of stdout");
  };
  auto budget = [&](CLI::App* sub) {
    sub->add_option("--starts", cfg.starts, "Number of seeded restarts")->check(CLI::PositiveNumber);
    sub->add_option("--iters", cfg.iters, "Nelder-Mead iterations per restart")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "Random seed");
  };

  auto* verify = app.add_subcommand("verify-extremal", "Check catalog extremal functions against exact bounds");
  common(verify);

  auto* search = app.add_subcommand("search", "Maximize a symmetric Toeplitz determinant over a class");
  common(search);
  budget(search);
  search->add_option("--class", cls, "r | star | convex")->required();
  search->add_option("--functional", functional, "ts22 | ts23 | ts32")->required();
  search->add_option("--tol", cfg.tol, "Relative tolerance on the gap to the exact bound");

  auto* lemma = app.add_subcommand("lemma", "Fuzz the |c3 + mu c1 c2 + nu c1^3| <= |nu| inequality");
  common(lemma);
  lemma->add_option("--samples", cfg.samples, "Number of Schur samples");
  lemma->add_option("--seed", cfg.seed, "Random seed");
  lemma->add_option("--mu", cfg.mu, "Custom mu (requires --nu)");
  lemma->add_option("--nu", cfg.nu, "Custom nu (requires --mu)");

  auto* invert = app.add_subcommand("invert", "Invert z + a2 z^2 + a3 z^3 + ...");
  common(invert);
  invert->add_option("--coeffs", cfg.coeffs, "Comma-separated a2,a3,... in a+bi form")->required();

  auto* compare = app.add_subcommand("compare", "Judge prior published bounds against the corrected ones");
  common(compare);
  budget(compare);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kSuccess : exit_code::kUsage;
  }

  cfg.format = formats.at(format);
  if (!output.empty()) cfg.output_path = output;
  if (verify->parsed()) cfg.command = Command::VerifyExtremal;
  if (lemma->parsed()) cfg.command = Command::Lemma;
  if (invert->parsed()) cfg.command = Command::Invert;
  if (compare->parsed()) cfg.command = Command::Compare;
  if (search->parsed()) {
    cfg.command = Command::Search;
    cfg.cls = parse_class(cls);
    cfg.functional = parse_functional(functional);
    if (!cfg.cls || !cfg.functional) {
      err << "error: unknown --class or --functional\n";
      return exit_code::kUsage;
    }
  }
  return run(cfg, out, err);
}

}  // namespace utlab::cli
