#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "duval/classifier.hpp"
#include "duval/errors.hpp"
#include "duval/fundamental_cycle.hpp"
#include "duval/graph_io.hpp"
#include "duval/hypersurface.hpp"
#include "duval/polynomial.hpp"
#include "duval/quadrature.hpp"

namespace duval::cli {

namespace {

enum class Format { plain, structured, csv };

struct Options {
  Format format = Format::plain;
  bool format_given = false;
  double tol = 1e-4;
  std::size_t max_subregions = QuadratureSettings{}.max_subregions;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string sci(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.16e", x);
  return buffer;
}

unsigned workers_from_env() {
  const char* raw = std::getenv("WORKERS");
  if (raw == nullptr || *raw == '\0') return 1;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value < 1 || value > 1024) {
    throw UsageError(std::string("WORKERS must be a positive integer, got '") + raw + "'");
  }
  return static_cast<unsigned>(value);
}

QuadratureSettings settings_for(const Options& opt) {
  return QuadratureSettings{workers_from_env(), opt.max_subregions};
}

void reject_csv(const Options& opt, const char* command) {
  if (opt.format == Format::csv) throw UsageError(std::string("csv output is only available for integral-table, not ") + command);
}

void check_tol(double tol) {
  if (!(tol >= kMinRelTol && tol < 1.0)) {
    std::ostringstream os;
    os << "--tol must lie in [" << kMinRelTol << ", 1), got " << tol;
    throw UsageError(os.str());
  }
}

struct DynkinArgs {
  std::string letter;
  int index = 0;
  bool given() const { return !letter.empty(); }
  DynkinType type() const { return parse_dynkin_type(letter); }
};

void add_dynkin_positionals(CLI::App* cmd, DynkinArgs& args, bool required) {
  auto* t = cmd->add_option("type", args.letter, "ADE type letter (A, D or E)");
  auto* i = cmd->add_option("index", args.index, "ADE index");
  if (required) {
    t->required();
    i->required();
  }
}

void print_caret(std::ostream& err, const std::string& text, std::size_t position) {
  err << "  " << text << "\n  " << std::string(position, ' ') << "^\n";
}

int cmd_classify(const Options& opt, const DynkinArgs& dynkin, const std::string& graph_path, bool numerics,
                 std::ostream& out) {
  reject_csv(opt, "classify");
  ClassificationReport report = [&] {
    if (!graph_path.empty()) {
      if (dynkin.given()) throw UsageError("classify takes either --graph or a type and index, not both");
      if (numerics) throw UsageError("--numerics is only available for a type and index");
      return classify_graph(load_graph_file(graph_path));
    }
    if (!dynkin.given()) throw UsageError("classify needs a type and index, or --graph");
    check_tol(opt.tol);
    return classify(dynkin.type(), dynkin.index, numerics, opt.tol, settings_for(opt));
  }();
  out << (opt.format == Format::structured ? report_structured(report) : report_plain(report));
  return kOk;
}

int cmd_fundamental_cycle(const Options& opt, const DynkinArgs& dynkin, const std::string& graph_path,
                          std::ostream& out) {
  reject_csv(opt, "fundamental-cycle");
  if (!graph_path.empty() && dynkin.given()) {
    throw UsageError("fundamental-cycle takes either --graph or a type and index, not both");
  }
  if (graph_path.empty() && !dynkin.given()) throw UsageError("fundamental-cycle needs a type and index, or --graph");
  const DualGraph g = graph_path.empty() ? (check_dynkin_range(dynkin.type(), dynkin.index),
                                            build_dynkin(dynkin.type(), dynkin.index))
                                         : load_graph_file(graph_path);
  const Cycle z = fundamental_cycle(g);
  const bool reduced = is_reduced(z);
  if (opt.format == Format::structured) {
    nlohmann::ordered_json doc;
    nlohmann::ordered_json cycle = nlohmann::ordered_json::array();
    for (const auto& c : z.coefficients()) cycle.push_back(c.convert_to<std::int64_t>());
    doc["fundamental_cycle"] = cycle;
    doc["reduced"] = reduced;
    out << doc.dump(2) << '\n';
  } else {
    out << z.to_string() << ", " << (reduced ? "reduced" : "not reduced") << '\n';
  }
  return kOk;
}

int cmd_integral_table(const Options& opt, const std::string& type_letter, int n, int kmax, std::ostream& out,
                       std::ostream& err) {
  if (parse_dynkin_type(type_letter) != DynkinType::A) throw UsageError("integral table defined only for A_n");
  if (n < 1) throw UsageError("--n must be >= 1");
  if (kmax < 1 || kmax > kMaxAnnulusLevel) {
    throw UsageError("--kmax must lie in [1, " + std::to_string(kMaxAnnulusLevel) + "]");
  }
  check_tol(opt.tol);
  const Format format = opt.format_given ? opt.format : Format::csv;
  const QuadratureSettings settings = settings_for(opt);

  struct Row {
    int k;
    QuadratureResult r;
    bool complete;
  };
  std::vector<Row> rows;
  bool exhausted = false;
  for (int k = 1; k <= kmax; ++k) {
    try {
      rows.push_back(Row{k, integral_Ik(n, k, opt.tol, settings), true});
    } catch (const BudgetExceededError& e) {
      err << "error: k=" << k << ": " << e.what() << '\n';
      rows.push_back(Row{k, e.partial(), false});
      exhausted = true;
    }
  }

  auto status = [](const Row& row) { return row.complete ? "ok" : "budget_exceeded"; };
  if (format == Format::csv) {
    out << "n,k,value,error,truncation_bound,subregions,status\n";
    for (const auto& row : rows) {
      out << n << ',' << row.k << ',' << sci(row.r.value) << ',' << sci(row.r.error_estimate) << ','
          << sci(row.r.truncation_bound) << ',' << row.r.subregions_used << ',' << status(row) << '\n';
    }
  } else if (format == Format::structured) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      doc.push_back({{"n", n},
                     {"k", row.k},
                     {"value", row.r.value},
                     {"error_estimate", row.r.error_estimate},
                     {"truncation_bound", row.r.truncation_bound},
                     {"subregions_used", row.r.subregions_used},
                     {"status", status(row)}});
    }
    out << doc.dump(2) << '\n';
  } else {
    out << "A_" << n << "  rel_tol " << sci(opt.tol) << '\n';
    out << "k  I_k                      error                    truncation               subregions  status\n";
    for (const auto& row : rows) {
      out << row.k << "  " << sci(row.r.value) << "  " << sci(row.r.error_estimate) << "  "
          << sci(row.r.truncation_bound) << "  " << row.r.subregions_used << "  " << status(row) << '\n';
    }
  }
  return exhausted ? kBudgetExceeded : kOk;
}

int cmd_residue(const Options& opt, const DynkinArgs& dynkin, const std::optional<std::string>& equation,
                std::ostream& out, std::ostream& err) {
  reject_csv(opt, "residue");
  if (equation && dynkin.given()) throw UsageError("residue takes either --equation or a type and index, not both");
  if (!equation && !dynkin.given()) throw UsageError("residue needs a type and index, or --equation");

  std::string label;
  Polynomial3 f, df;
  if (equation) {
    try {
      f = Polynomial3::parse(*equation);
    } catch (const ParseError& e) {
      err << "error: " << e.what() << '\n';
      print_caret(err, *equation, e.position());
      return kBadInput;
    }
    df = f.differentiate(Variable::z);
  } else {
    const HypersurfaceGerm germ = duval_equation(dynkin.type(), dynkin.index);
    label = germ.label.to_string();
    f = germ.equation;
    df = germ.residue_denominator;
  }
  if (opt.format == Format::structured) {
    nlohmann::ordered_json doc;
    if (!label.empty()) doc["label"] = label;
    doc["equation"] = f.to_string();
    doc["residue_denominator"] = df.to_string();
    doc["residue"] = "dx^dy / (" + df.to_string() + ")";
    out << doc.dump(2) << '\n';
  } else {
    out << "f = " << f.to_string() << '\n' << "df/dz = " << df.to_string() << '\n';
    out << "residue = dx^dy / (" << df.to_string() << ")\n";
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"du Val singularities: ADE kind verdicts, fundamental cycles, residues and annulus integrals", "duval"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  const std::map<std::string, Format> formats{
      {"plain", Format::plain}, {"structured", Format::structured}, {"csv", Format::csv}};
  auto* format_opt = app.add_option("--format", opt.format, "plain | structured | csv")
                         ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--tol", opt.tol, "relative tolerance of the quadrature");
  app.add_option("--max-subregions", opt.max_subregions, "subregion budget per integral")
      ->check(CLI::PositiveNumber);

  DynkinArgs classify_args, cycle_args, residue_args;
  std::string classify_graph_path, cycle_graph_path;
  bool numerics = false;
  auto* classify_cmd = app.add_subcommand("classify", "kind verdict and K_X^s formula");
  add_dynkin_positionals(classify_cmd, classify_args, false);
  classify_cmd->add_option("--graph", classify_graph_path, "graph document instead of a type");
  classify_cmd->add_flag("--numerics", numerics, "attach the I_k table (A_n only)");

  auto* cycle_cmd = app.add_subcommand("fundamental-cycle", "fundamental cycle and reducedness");
  add_dynkin_positionals(cycle_cmd, cycle_args, false);
  cycle_cmd->add_option("--graph", cycle_graph_path, "graph document instead of a type");

  std::string table_type;
  int table_n = 0, table_kmax = 0;
  auto* table_cmd = app.add_subcommand("integral-table", "annulus integrals I_k for k = 1..kmax");
  table_cmd->add_option("--type", table_type, "must be A")->required();
  table_cmd->add_option("--n", table_n, "A_n index")->required();
  table_cmd->add_option("--kmax", table_kmax, "largest annulus level (<= 4)")->required();

  std::optional<std::string> equation;
  auto* residue_cmd = app.add_subcommand("residue", "equation and residue denominator df/dz");
  add_dynkin_positionals(residue_cmd, residue_args, false);
  residue_cmd->add_option("--equation", equation, "polynomial in x, y, z");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  opt.format_given = format_opt->count() > 0;

  try {
    if (*classify_cmd) return cmd_classify(opt, classify_args, classify_graph_path, numerics, out);
    if (*cycle_cmd) return cmd_fundamental_cycle(opt, cycle_args, cycle_graph_path, out);
    if (*table_cmd) return cmd_integral_table(opt, table_type, table_n, table_kmax, out, err);
    if (*residue_cmd) return cmd_residue(opt, residue_args, equation, out, err);
    err << "error: no subcommand\n";
    return kBadInput;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const GraphError& e) {
    err << "error: invalid graph: " << e.what() << '\n';
    return kBadInput;
  } catch (const NotNegativeDefiniteError& e) {
    err << "error: " << e.what() << '\n';
    return kNotNegativeDefinite;
  } catch (const BudgetExceededError& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace duval::cli
