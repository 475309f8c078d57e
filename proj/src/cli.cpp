#include "niep/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

#include "niep/constructions.hpp"
#include "niep/digraph.hpp"
#include "niep/error.hpp"
#include "niep/lowdim.hpp"
#include "niep/structure.hpp"
#include "niep/text_io.hpp"
#include "niep/tracezero.hpp"
#include "niep/verify.hpp"

namespace niep::cli {
namespace {

using nlohmann::ordered_json;

Classification unknown(std::string reason, std::string anchor) {
  return {Verdict::Unknown, std::move(reason), std::move(anchor), std::nullopt};
}

template <typename Build>
std::optional<Classification> attempt(Verdict v, const char* reason, const char* anchor, Build build) {
  try {
    return Classification{v, reason, anchor, build()};
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<Classification> via_tracezero(const MonicPolynomial& poly, const Tolerance& tol) {
  const auto p = tracezero_order(poly, tol);
  if (!p) return std::nullopt;
  return classify_tracezero(poly, *p, tol);
}

Classification classify_spectrum(const Spectrum& s, const Tolerance& tol) {
  const StructureReport r = check_necessary(s, tol);
  if (!r.self_conjugate) return {Verdict::NotRealizable, "list is not closed under conjugation", "necessary-conditions", {}};
  if (!r.perron_ok) return {Verdict::NotRealizable, "no nonnegative entry attains the spectral radius", "necessary-conditions", {}};
  if (!r.trace_ok) return {Verdict::NotRealizable, "trace is negative", "necessary-conditions", {}};
  if (s.size() <= 4) return classify_lowdim(s, tol);

  if (s.is_real(tol)) {
    if (auto c = attempt(Verdict::PositiveR, "simple top entry and lambda_n above (max(lambda_2, 0) - lambda_1)/(n - 1)",
                         "triangular-lift", [&] { return realize_real_positive(s, tol); })) {
      return *c;
    }
    if (auto c = attempt(Verdict::PositiveR, "top entry plus the nonpositive entries is positive",
                         "block-suleimanova-lift", [&] { return realize_suleimanova_plus(s, tol); })) {
      return *c;
    }
    if (auto c = attempt(Verdict::IR, "one positive entry, the rest nonpositive, nonnegative trace", "suleimanova",
                         [&] { return realize_suleimanova(s, tol); })) {
      return *c;
    }
  }
  if (auto c = attempt(Verdict::IR, "list equals its negation and the squared half is realizable",
                       "negation-invariant", [&] { return realize_negation_invariant(s, tol); })) {
    return *c;
  }
  if (std::abs(s.trace().real()) <= tol.eq(s.spectral_radius())) {
    try {
      if (auto c = via_tracezero(poly_from_spectrum(s, tol), tol)) return *c;
    } catch (const Error&) {
    }
  }
  if (r.perron_multiplicity >= 2) {
    return unknown("repeated Perron root rules out irreducibility; realizability is not decided here",
                   "perron-multiplicity");
  }
  if (s.is_real(tol)) {
    return unknown("real list outside the triangular-lift and Suleimanova hypotheses", "suleimanova");
  }
  return unknown("complex list of size " + std::to_string(s.size()) +
                     " with nonzero trace; no construction applies",
                 "trace-zero-realizability");
}

MonicPolynomial target_of(const Input& input, const Tolerance& tol) {
  if (const auto* poly = std::get_if<MonicPolynomial>(&input)) return *poly;
  return poly_from_spectrum(std::get<Spectrum>(input), tol);
}

std::string flag(bool b) { return b ? "true" : "false"; }

std::string report_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "residual: " << format_number(r.residual) << '\n'
      << "nonnegative: " << flag(r.nonnegative) << '\n'
      << "positive: " << flag(r.positive) << '\n'
      << "irreducible: " << flag(r.irreducible) << '\n'
      << "symmetric: " << flag(r.symmetric) << '\n'
      << "row_sums_constant: " << (r.row_sums_constant ? format_number(*r.row_sums_constant) : "none") << '\n'
      << "perron_multiplicity: " << r.perron_multiplicity << '\n';
  return out.str();
}

ordered_json report_json(const VerificationReport& r) {
  ordered_json j;
  j["residual"] = r.residual;
  j["nonnegative"] = r.nonnegative;
  j["positive"] = r.positive;
  j["irreducible"] = r.irreducible;
  j["symmetric"] = r.symmetric;
  j["row_sums_constant"] = r.row_sums_constant ? ordered_json(*r.row_sums_constant) : ordered_json(nullptr);
  j["perron_multiplicity"] = r.perron_multiplicity;
  return j;
}

ordered_json matrix_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

struct Outcome {
  std::optional<Classification> classification;
  std::optional<Matrix> matrix;
  std::optional<VerificationReport> report;
  std::string construction;
  std::string dot;
  int exit_code = kExitDecided;
};

std::string render(const Outcome& o, Mode mode, Format format) {
  if (format == Format::Structured) {
    ordered_json j;
    j["verdict"] = o.classification ? ordered_json(to_string(o.classification->verdict)) : ordered_json(nullptr);
    j["reason"] = o.classification ? ordered_json(o.classification->reason) : ordered_json(nullptr);
    j["anchor"] = o.classification ? ordered_json(o.classification->anchor) : ordered_json(nullptr);
    j["construction"] = o.construction.empty() ? ordered_json(nullptr) : ordered_json(o.construction);
    j["matrix"] = o.matrix && mode != Mode::Classify ? matrix_json(*o.matrix) : ordered_json(nullptr);
    j["report"] = o.report && mode != Mode::Classify ? report_json(*o.report) : ordered_json(nullptr);
    if (mode == Mode::Dot) j["dot"] = o.dot;
    return j.dump(2) + "\n";
  }
  if (mode == Mode::Dot && !o.dot.empty()) return o.dot;
  std::ostringstream out;
  if (o.classification) {
    out << "verdict: " << to_string(o.classification->verdict) << '\n'
        << "reason: " << o.classification->reason << '\n'
        << "anchor: " << o.classification->anchor << '\n';
  }
  if (mode == Mode::Classify) return out.str();
  if (!o.construction.empty()) out << "construction: " << o.construction << '\n';
  if (o.matrix) out << "matrix:\n" << format_matrix(*o.matrix);
  if (o.report) out << report_text(*o.report);
  return out.str();
}

Outcome decide(const Request& request) {
  Outcome o;
  const Tolerance& tol = request.tol;
  const MonicPolynomial target = target_of(request.input, tol);

  if (request.mode == Mode::Verify && request.matrix) {
    RealizationCertificate cert{*request.matrix, "user matrix", {true, false, false}, target, 0.0};
    o.matrix = *request.matrix;
    o.report = verify(cert, target, tol);
    const bool ok = o.report->nonnegative && o.report->residual <= tol.eq(target.max_abs_coeff());
    o.exit_code = ok ? kExitDecided : kExitVerification;
    return o;
  }

  o.classification = dispatch(request.input, tol);
  const Classification& c = *o.classification;
  o.exit_code = c.verdict == Verdict::Unknown ? kExitUnknown : kExitDecided;
  if (!c.witness) return o;

  o.matrix = c.witness->matrix;
  o.construction = c.witness->construction;
  o.report = verify(*c.witness, target, tol);
  if (!accepts(*c.witness, *o.report, tol)) o.exit_code = kExitVerification;
  if (request.mode == Mode::Dot) o.dot = export_dot(from_matrix(c.witness->matrix, tol));
  return o;
}

Input parse_input(const std::string& text) {
  std::string_view view(text);
  while (!view.empty() && std::isspace(static_cast<unsigned char>(view.front()))) view.remove_prefix(1);
  if (view.starts_with("poly:")) return parse_polynomial(view);
  return parse_spectrum(view);
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Classification dispatch(const Input& input, const Tolerance& tol) {
  if (const auto* poly = std::get_if<MonicPolynomial>(&input)) {
    if (poly->degree() == 0) return {Verdict::NotRealizable, "empty polynomial", "necessary-conditions", {}};
    try {
      if (auto c = via_tracezero(*poly, tol)) return *c;
    } catch (const Error&) {
    }
    return classify_spectrum(poly->roots(tol), tol);
  }
  const Spectrum& s = std::get<Spectrum>(input);
  if (s.empty()) return {Verdict::NotRealizable, "empty list", "necessary-conditions", {}};
  return classify_spectrum(s, tol);
}

Response run(const Request& request) {
  try {
    const Outcome o = decide(request);
    return {o.exit_code, render(o, request.mode, request.format)};
  } catch (const Error& e) {
    return {kExitParse, std::string("error: ") + e.what() + "\n"};
  }
}

Response run_command_line(int argc, const char* const* argv) {
  CLI::App app{"Nonnegative inverse eigenvalue problem: classify lists and build witness matrices"};
  app.require_subcommand(1);

  std::string positional, poly_text, spectrum_text, format_text = "text", out_path, matrix_path;
  double tol_eq = Tolerance{}.eq_rel;
  Request request;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", positional, "spectrum \"a, b+ci, ...\" or \"poly: 1, k1, ..., kn\"");
    sub->add_option("--poly", poly_text, "monic polynomial \"1, k1, ..., kn\"");
    sub->add_option("--spectrum", spectrum_text, "spectrum \"a, b+ci, ...\"");
    sub->add_option("--tol", tol_eq, "relative equality tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--format", format_text, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--out", out_path, "write output to this file");
  };
  CLI::App* classify = app.add_subcommand("classify", "verdict, reason and anchor");
  CLI::App* realize = app.add_subcommand("realize", "witness matrix and verification report");
  CLI::App* verify_cmd = app.add_subcommand("verify", "verify a matrix (or the built witness) against the input");
  CLI::App* dot = app.add_subcommand("dot", "Graphviz export of the witness digraph");
  for (CLI::App* sub : {classify, realize, verify_cmd, dot}) add_common(sub);
  verify_cmd->add_option("--matrix", matrix_path, "matrix file, one row per line ('-' reads stdin)");

  std::vector<std::string> args;
  for (int i = argc - 1; i >= 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    return {kExitDecided, app.help()};
  } catch (const CLI::ParseError& e) {
    return {kExitParse, std::string("error: ") + e.what() + "\n" + app.help()};
  }

  if (classify->parsed()) request.mode = Mode::Classify;
  if (realize->parsed()) request.mode = Mode::Realize;
  if (verify_cmd->parsed()) request.mode = Mode::Verify;
  if (dot->parsed()) request.mode = Mode::Dot;
  request.format = format_text == "structured" ? Format::Structured : Format::Text;
  request.tol.eq_rel = tol_eq;

  const int given = !positional.empty() + !poly_text.empty() + !spectrum_text.empty();
  if (given != 1) return {kExitParse, "error: give exactly one of input, --poly, --spectrum\n"};
  try {
    if (!poly_text.empty()) {
      request.input = parse_polynomial(poly_text);
    } else if (!spectrum_text.empty()) {
      request.input = parse_spectrum(spectrum_text);
    } else {
      request.input = parse_input(positional);
    }
    if (const auto* s = std::get_if<Spectrum>(&request.input); s && !s->is_self_conjugate(request.tol)) {
      return {kExitParse, "error: list is not closed under conjugation\n"};
    }
    if (!matrix_path.empty()) request.matrix = parse_matrix(read_text(matrix_path));
  } catch (const Error& e) {
    return {kExitParse, std::string("error: ") + e.what() + "\n"};
  }

  Response response = run(request);
  if (!out_path.empty() && response.exit_code != kExitParse) {
    std::ofstream out(out_path);
    if (!out) return {kExitParse, "error: cannot write '" + out_path + "'\n"};
    out << response.output;
    response.output.clear();
  }
  return response;
}

}  // namespace niep::cli
