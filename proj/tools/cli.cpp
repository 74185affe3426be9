#include "cli.hpp"

#include "pentaflag/census.hpp"
#include "pentaflag/certificate.hpp"
#include "pentaflag/cut_metric.hpp"
#include "pentaflag/extremal.hpp"
#include "pentaflag/graph.hpp"
#include "pentaflag/parallel.hpp"

#include <CLI11.hpp>
#include <openssl/sha.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#ifndef PENTAFLAG_VERSION
#define PENTAFLAG_VERSION "0.0.0"
#endif

namespace pentaflag::cli {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string str(const Rational& r) { return r.to_string(); }
std::string str(const BigInt& z) { return z.get_str(); }

RunReport start(const std::string& subcommand) {
  RunReport r;
  r.subcommand = subcommand;
  r.engine_version = engine_version();
  static const std::string asset_hash = sha256_hex(bundled_certificate_text());
  r.certificate_asset_sha256 = asset_hash;
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object() || j.is_array()) {
    if (j.empty()) {
      out << prefix << '\t' << (j.is_object() ? "{}" : "[]") << '\n';
      return;
    }
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      const std::string key = j.is_object() ? it.key() : std::to_string(i);
      flatten(*it, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  out << prefix << '\t' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

Json graph_info(const DenseGraph& g) {
  return Json{{"graph6", to_graph6(g)}, {"order", g.order()}, {"edges", g.edge_count()}};
}

// Reads `count` whitespace-separated graph6 tokens from stdin when the arguments are missing.
std::vector<std::string> graphs_from(std::vector<std::string> given, std::size_t count, std::istream& in) {
  if (given.empty()) {
    std::string tok;
    while (given.size() < count && in >> tok) given.push_back(tok);
  }
  if (given.size() != count) {
    throw InputError("expected " + std::to_string(count) + " graph6 argument(s), got " +
                     std::to_string(given.size()));
  }
  return given;
}

}  // namespace

Json RunReport::stable_json() const {
  return Json{{"subcommand", subcommand},
              {"engine_version", engine_version},
              {"certificate_asset_sha256", certificate_asset_sha256},
              {"inputs", inputs},
              {"result", result},
              {"exit_code", exit_code}};
}

Json RunReport::to_json() const {
  Json j = stable_json();
  j["timing_us"] = timing_us;
  return j;
}

std::string engine_version() { return std::string("pentaflag ") + PENTAFLAG_VERSION; }

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size(), digest);
  std::string hex;
  char buf[3];
  for (unsigned char b : digest) {
    std::snprintf(buf, sizeof buf, "%02x", b);
    hex += buf;
  }
  return hex;
}

std::string bundled_certificate_text() {
  static const std::string text = save_certificate(bundled_pentagon_certificate());
  return text;
}

RunReport cmd_verify(const std::string& source, unsigned workers) {
  RunReport r = start("verify");
  const std::string text = source == "bundled" ? bundled_certificate_text() : read_file(source);
  r.inputs = {{"certificate", source}, {"certificate_sha256", sha256_hex(text)}};
  const Certificate cert = load_certificate(text);
  const VerificationReport v = verify(cert, workers);

  Json blocks = Json::array();
  for (const auto& b : v.blocks) {
    blocks.push_back({{"name", b.name}, {"dimension", b.dimension}, {"symmetric", b.symmetric}, {"psd", b.psd}});
  }
  Json coefficients = Json::array();
  for (std::size_t i = 0; i < v.coefficients.size(); ++i) {
    coefficients.push_back({{"graph6", to_graph6(v.coefficients[i].model)},
                            {"coefficient", str(v.coefficients[i].coefficient)},
                            {"slack", str(v.slack[i])}});
  }
  r.result = {{"pass", v.pass},
              {"level", v.level},
              {"bound", str(v.bound)},
              {"target_coefficient", str(v.target_coefficient)},
              {"derived_bound", str(v.derived_bound)},
              {"max_coefficient", str(v.max_coefficient)},
              {"all_psd", v.all_psd},
              {"coefficients_within_bound", v.coefficients_within_bound},
              {"failure", v.failure ? Json(*v.failure) : Json(nullptr)},
              {"blocks", blocks},
              {"coefficients", coefficients}};
  r.exit_code = v.pass ? kExitPass : kExitFailure;
  return r;
}

RunReport cmd_enumerate(int n, bool count_only, unsigned workers) {
  RunReport r = start("enumerate");
  r.inputs = {{"n", n}, {"count_only", count_only}};
  Json graphs = Json::array();
  std::size_t count = 0;
  enumerate_models_stream(
      n,
      [&](const SmallGraph& g) {
        ++count;
        if (!count_only) graphs.push_back(to_graph6(g));
      },
      workers);
  r.result = {{"count", count}};
  if (!count_only) r.result["graphs"] = std::move(graphs);
  return r;
}

RunReport cmd_pentagons(const std::string& graph6) {
  RunReport r = start("pentagons");
  r.inputs = {{"graph6", graph6}};
  const DenseGraph g = dense_from_graph6(graph6);
  if (g.order() > kMaxPentagonGraphOrder) {
    throw std::out_of_range("pentagon counting is capped at " + std::to_string(kMaxPentagonGraphOrder) +
                            " vertices");
  }
  r.result = {{"order", g.order()}, {"edges", g.edge_count()}, {"pentagons", count_pentagons(g)}};
  return r;
}

RunReport cmd_extremal(int n, unsigned workers) {
  RunReport r = start("extremal");
  r.inputs = {{"n", n}};
  if (n < kMinExhaustiveOrder || n > kMaxExhaustiveOrder) {
    throw std::out_of_range("exhaustive search supports " + std::to_string(kMinExhaustiveOrder) +
                            " <= n <= " + std::to_string(kMaxExhaustiveOrder));
  }
  const ExtremalReport e = exhaustive_max_pentagons(n, workers);
  r.result = {{"max_pentagons", e.max_pentagons},
              {"chi", str(e.chi)},
              {"max_equals_chi", BigInt(static_cast<unsigned long>(e.max_pentagons)) == e.chi},
              {"models_scanned", e.models_scanned},
              {"extremal_graph6", e.extremal_graph6},
              {"sporadic_graph6", e.sporadic_graph6},
              {"sporadic", e.sporadic_present},
              {"all_almost_balanced", e.all_almost_balanced}};
  return r;
}

RunReport cmd_blowup(const std::string& spec_text) {
  RunReport r = start("blowup");
  r.inputs = {{"spec", spec_text}};
  const BlowupSpec spec = parse_blowup_spec(spec_text);
  const DenseGraph g = blowup(spec);
  r.result = graph_info(g);
  const bool triangle_free = is_triangle_free(g);
  r.result["triangle_free"] = triangle_free;
  if (triangle_free && g.order() <= kMaxPentagonGraphOrder) {
    r.result["pentagons"] = count_pentagons(g);
  } else {
    r.result["pentagons"] = nullptr;
  }
  return r;
}

RunReport cmd_cutnorm(const std::string& g1_text, const std::string& g2_text, unsigned workers) {
  RunReport r = start("cutnorm");
  r.inputs = {{"g1", g1_text}, {"g2", g2_text}};
  const SmallGraph g1 = from_graph6(g1_text);
  const SmallGraph g2 = from_graph6(g2_text);
  if (g1.order() != g2.order()) throw std::invalid_argument("graphs must have the same number of vertices");
  const int n = g1.order();
  const CutNormResult d = cut_norm(SignedMatrix::adjacency_difference(g1, g2), workers);
  r.result = {{"n", n},
              {"d_box", str(d.value)},
              {"S", mask_string(d.rows, n)},
              {"T", mask_string(d.cols, n)}};
  if (n <= kMaxDeltaHatOrder) {
    const DeltaHatResult h = delta_hat(g1, g2, workers);
    r.result["delta_hat"] = {{"value", str(h.value)},
                             {"relabeling", h.relabeling},
                             {"S", mask_string(h.witness.rows, n)},
                             {"T", mask_string(h.witness.cols, n)}};
  } else {
    r.result["delta_hat"] = nullptr;
  }
  return r;
}

RunReport cmd_density(const std::string& h_text, const std::string& g_text) {
  RunReport r = start("density");
  r.inputs = {{"h", h_text}, {"g", g_text}};
  const SmallGraph h = from_graph6(h_text);
  const SmallGraph g = from_graph6(g_text);
  r.result = {{"induced_count", count_induced(h, g)},
              {"density", str(density(h, g))},
              {"blowup_limit_density", str(phi_blowup_density(h, g))}};
  return r;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact flag-algebra certificate checker and pentagon toolkit for triangle-free graphs",
               "pentaflag"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned workers = default_workers();
  std::string output = "json";
  std::string certificate;
  app.add_option("--workers", workers, "Worker threads (default: available cores)")->check(CLI::PositiveNumber);
  auto* output_opt = app.add_option("--output", output, "Report format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--certificate", certificate, "Certificate file for verify");
  app.set_version_flag("--version", engine_version());

  std::string verify_source;
  auto* verify_cmd = app.add_subcommand("verify", "Check an SOS certificate (\"bundled\" or a JSON path)");
  verify_cmd->add_option("source", verify_source);

  int n = 0;
  bool count_only = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Triangle-free graphs on n vertices as graph6 lines");
  enumerate_cmd->add_option("n", n)->required();
  enumerate_cmd->add_flag("--count-only", count_only, "Print a report with the count only");

  std::vector<std::string> graphs;
  auto* pentagons_cmd = app.add_subcommand("pentagons", "Count 5-cycles of a triangle-free graph");
  pentagons_cmd->add_option("graph6", graphs);

  auto* extremal_cmd = app.add_subcommand("extremal", "Exhaustive maximum pentagon count on n vertices");
  extremal_cmd->add_option("n", n)->required();

  std::string spec;
  auto* blowup_cmd = app.add_subcommand("blowup", "Build a blow-up from graph6:k1,k2,...");
  blowup_cmd->add_option("spec", spec);

  auto* cutnorm_cmd = app.add_subcommand("cutnorm", "Cut distance between two graphs of equal order");
  cutnorm_cmd->add_option("graphs", graphs)->expected(0, 2);

  auto* density_cmd = app.add_subcommand("density", "Induced density of H in G and its blow-up limit");
  density_cmd->add_option("graphs", graphs)->expected(0, 2);

  auto* certificate_cmd = app.add_subcommand("certificate", "Print the bundled certificate document");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForVersion& e) {
    out << engine_version() << '\n';
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "pentaflag: " << e.what() << '\n';
    return kExitInputError;
  }

  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (certificate_cmd->parsed()) {
      out << bundled_certificate_text();
      return kExitPass;
    }
    // enumerate without an explicit report request streams graph6 lines.
    if (enumerate_cmd->parsed() && !count_only && output_opt->count() == 0) {
      enumerate_models_stream(n, [&](const SmallGraph& g) { out << to_graph6(g) << '\n'; }, workers);
      return kExitPass;
    }

    RunReport report;
    if (verify_cmd->parsed()) {
      if (!certificate.empty() && !verify_source.empty() && certificate != verify_source) {
        throw InputError("both --certificate and a positional certificate were given");
      }
      std::string source = !certificate.empty() ? certificate : verify_source;
      report = cmd_verify(source.empty() ? "bundled" : source, workers);
    } else if (enumerate_cmd->parsed()) {
      report = cmd_enumerate(n, count_only, workers);
    } else if (pentagons_cmd->parsed()) {
      report = cmd_pentagons(graphs_from(graphs, 1, in)[0]);
    } else if (extremal_cmd->parsed()) {
      report = cmd_extremal(n, workers);
    } else if (blowup_cmd->parsed()) {
      if (spec.empty() && !(in >> spec)) throw InputError("missing blow-up spec");
      report = cmd_blowup(spec);
    } else if (cutnorm_cmd->parsed()) {
      const auto g = graphs_from(graphs, 2, in);
      report = cmd_cutnorm(g[0], g[1], workers);
    } else if (density_cmd->parsed()) {
      const auto g = graphs_from(graphs, 2, in);
      report = cmd_density(g[0], g[1]);
    }
    report.inputs["workers"] = workers;
    report.timing_us =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
    if (output == "tsv") {
      flatten(report.to_json(), "", out);
    } else {
      out << report.to_json().dump(2) << '\n';
    }
    return report.exit_code;
  } catch (const InputError& e) {
    err << "pentaflag: " << e.what() << '\n';
    return kExitInputError;
  } catch (const CertificateError& e) {
    err << "pentaflag: malformed certificate: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Graph6Error& e) {
    err << "pentaflag: malformed graph6: " << e.what() << '\n';
    return kExitInputError;
  } catch (const RationalParseError& e) {
    err << "pentaflag: malformed rational: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    err << "pentaflag: out of range: " << e.what() << '\n';
    return kExitRange;
  } catch (const std::invalid_argument& e) {
    err << "pentaflag: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "pentaflag: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace pentaflag::cli
