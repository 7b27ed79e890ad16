#include "geographer/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "geographer/document.hpp"

namespace geographer::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

RealizeOptions options_from_environment() {
  RealizeOptions options;
  if (const char* env = std::getenv("GEOGRAPHER_GENUS_DEFAULT"); env != nullptr && *env != '\0') {
    const std::string value(env);
    int genus = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), genus);
    if (ec != std::errc{} || ptr != value.data() + value.size() || genus < 2)
      throw UsageError("GEOGRAPHER_GENUS_DEFAULT must be an integer >= 2, got '" + value + "'");
    options.minimum_genus = genus;
  }
  return options;
}

void emit_document(std::ostream& os, const CertificateDocument& doc, const std::string& format) {
  if (format == "tsv") {
    os << tsv_header() << '\n' << tsv_row(doc) << '\n';
  } else {
    os << to_json(doc).dump(2) << '\n';
  }
}

struct RealizeArgs {
  Int a = 0, b = 0, c = 0;
  bool null_mode = false;
  int genus = 0;
  std::string format = "json";
};

int cmd_realize(const RealizeArgs& args, bool genus_given, std::ostream& os, std::ostream& err) {
  RealizeOptions options = options_from_environment();
  if (genus_given) options.genus = args.genus;
  const Triple t{args.a, args.b, args.c};
  if (!args.null_mode) {
    emit_document(os, make_document(realize(t, options), "realize"), args.format);
    return kSuccess;
  }
  NullRealization result = realize_null(t, options);
  if (const auto* open = std::get_if<OpenCase>(&result)) {
    os << to_json(*open).dump(2) << '\n';
    err << open->question << '\n';
    return kOpen;
  }
  emit_document(os, make_document(std::get<Recipe>(result), "realize --null"), args.format);
  return kSuccess;
}

struct InvariantsArgs {
  std::vector<int> bundle, fibersum, dolgachev;
  std::string format = "json";
};

int cmd_invariants(const InvariantsArgs& args, std::ostream& os) {
  if (!args.bundle.empty()) {
    const auto& v = args.bundle;
    const InvariantCertificate cert = construct(bundle_spec(v[0], v[1], v[2], v[3]));
    emit_document(os,
                  make_document(cert, "invariants", "bundle", {{"d", v[0]}, {"k", v[1]}, {"g", v[2]}, {"e", v[3]}}),
                  args.format);
  } else if (!args.fibersum.empty()) {
    const auto& v = args.fibersum;
    const InvariantCertificate cert = fiber_sum_invariants(FiberSumSpec{EllipticSurface{v[0]}, v[1], v[2], v[3]});
    emit_document(
        os, make_document(cert, "invariants", "fiber_sum", {{"n", v[0]}, {"d", v[1]}, {"k", v[2]}, {"g", v[3]}}),
        args.format);
  } else if (!args.dolgachev.empty()) {
    const auto& v = args.dolgachev;
    const InvariantCertificate cert =
        fiber_sum_invariants(FiberSumSpec{DolgachevSurface{v[0], v[1]}, v[2], v[3], v[4]});
    emit_document(os,
                  make_document(cert, "invariants", "dolgachev_sum",
                                {{"p", v[0]}, {"q", v[1]}, {"d", v[2]}, {"k", v[3]}, {"g", v[4]}}),
                  args.format);
  } else {
    throw UsageError("invariants needs one of --bundle, --fibersum or --dolgachev");
  }
  return kSuccess;
}

struct EnumerateArgs {
  Int sigma_min = 0;
  Int b1_max = 0;
  std::string format = "tsv";
};

int cmd_enumerate(const EnumerateArgs& args, std::ostream& os) {
  if (args.sigma_min > 0) throw UsageError("--sigma-min must be non-positive");
  if (args.b1_max < 0) throw UsageError("--b1-max must be non-negative");
  const auto rows = enumerate_region(args.sigma_min, args.b1_max, options_from_environment());
  if (args.format == "tsv") os << tsv_header() << '\n';
  for (const auto& row : rows) {
    const CertificateDocument doc = make_document(row.recipe, "enumerate");
    if (args.format == "tsv") os << tsv_row(doc) << '\n';
    else os << to_json(doc).dump() << '\n';
  }
  return kSuccess;
}

int cmd_verify(int grid_max, const std::string& mutate, std::ostream& os) {
  const PairingMutation mutation = mutate == "sign-flip" ? PairingMutation::SignFlip : PairingMutation::None;
  const GridReport report = verify_bundle_grid(grid_max, mutation);
  os << "verify: grid-max " << grid_max << ", " << report.cases << " cases\n";
  for (const auto& [name, count] : report.passes) os << "  " << name << ": " << count << "/" << report.cases << '\n';
  os << "failures: " << report.failures.size() << '\n';
  for (const auto& f : report.failures)
    os << "  (d,k,g,e) = (" << f.d << "," << f.k << "," << f.g << "," << static_cast<int>(f.e) << "): " << f.reason
       << '\n';
  os << "verify: " << (report.ok() ? "PASS" : "FAIL") << '\n';
  return report.ok() ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Realize (signature, b1, degeneracy) triples by certified examples with kappa = 1",
               "geographer"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  RealizeArgs realize_args;
  auto* realize_cmd = app.add_subcommand("realize", "Construct a manifold realizing an admissible triple");
  realize_cmd->add_option("a", realize_args.a, "Signature")->required();
  realize_cmd->add_option("b", realize_args.b, "First Betti number")->required();
  realize_cmd->add_option("c", realize_args.c, "Degeneracy (nullity with --null)")->required();
  realize_cmd->add_flag("--null", realize_args.null_mode, "Treat c as the nullity");
  auto* genus_opt = realize_cmd->add_option("--genus", realize_args.genus, "Fiber genus (at least max(k, 2))");
  realize_cmd->add_option("--format", realize_args.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  realize_cmd->add_option("--out", out_path, "Write output to this file instead of stdout");

  InvariantsArgs inv_args;
  auto* inv_cmd = app.add_subcommand("invariants", "Certificate of a bundle manifold or fiber sum");
  inv_cmd->alias("inspect");
  auto* bundle_opt = inv_cmd->add_option("--bundle", inv_args.bundle, "d k g e")->expected(4);
  auto* fibersum_opt = inv_cmd->add_option("--fibersum", inv_args.fibersum, "n d k g")->expected(4);
  auto* dolgachev_opt = inv_cmd->add_option("--dolgachev", inv_args.dolgachev, "p q d k g")->expected(5);
  bundle_opt->excludes(fibersum_opt)->excludes(dolgachev_opt);
  fibersum_opt->excludes(dolgachev_opt);
  inv_cmd->add_option("--format", inv_args.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  inv_cmd->add_option("--out", out_path, "Write output to this file instead of stdout");

  EnumerateArgs enum_args;
  auto* enum_cmd = app.add_subcommand("enumerate", "Realize every admissible triple in a region");
  enum_cmd->add_option("--sigma-min", enum_args.sigma_min, "Smallest signature (<= 0)")->required();
  enum_cmd->add_option("--b1-max", enum_args.b1_max, "Largest first Betti number (>= 0)")->required();
  enum_cmd->add_option("--format", enum_args.format, "tsv or json (JSON lines)")
      ->check(CLI::IsMember({"json", "tsv"}));
  enum_cmd->add_option("--out", out_path, "Write output to this file instead of stdout");

  int grid_max = 0;
  std::string mutate;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check closed forms against the pairing oracle");
  verify_cmd->add_option("--grid-max", grid_max, "Largest genus in the grid (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--mutate", mutate, "")->check(CLI::IsMember({"sign-flip"}))->group("");
  verify_cmd->add_option("--out", out_path, "Write output to this file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  std::ostringstream buffer;
  int code = kSuccess;
  try {
    if (realize_cmd->parsed()) code = cmd_realize(realize_args, genus_opt->count() > 0, buffer, err);
    else if (inv_cmd->parsed()) code = cmd_invariants(inv_args, buffer);
    else if (enum_cmd->parsed()) code = cmd_enumerate(enum_args, buffer);
    else if (verify_cmd->parsed()) code = cmd_verify(grid_max, mutate, buffer);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const InadmissibleTriple& e) {
    err << "inadmissible: " << e.what() << '\n';
    return kInadmissible;
  } catch (const InvalidParameter& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kInadmissible;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << '\n';
    return kVerificationFailed;
  }

  if (out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << out_path << " for writing\n";
      return kUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace geographer::cli
