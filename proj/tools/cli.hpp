#pragma once

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pentaflag::cli {

// Exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;       // verification failed
inline constexpr int kExitInputError = 2;    // malformed graph6 / certificate / arguments / unreadable file
inline constexpr int kExitPrecondition = 3;  // well-formed input violating a precondition (triangle, size mismatch)
inline constexpr int kExitRange = 4;         // outside the exact regime or supported n
inline constexpr int kExitInternal = 5;

using Json = nlohmann::ordered_json;

struct RunReport {
  std::string subcommand;
  Json inputs = Json::object();
  Json result = Json::object();
  std::string engine_version;
  std::string certificate_asset_sha256;  // of the bundled certificate document
  std::int64_t timing_us = 0;
  int exit_code = kExitPass;

  Json to_json() const;
  /// The report without timing, for determinism checks.
  Json stable_json() const;
};

std::string engine_version();
std::string sha256_hex(const std::string& bytes);
std::string bundled_certificate_text();

// Subcommands. Errors surface as exceptions; run() maps them to exit codes.
RunReport cmd_verify(const std::string& source, unsigned workers);  // "bundled" or a path
RunReport cmd_enumerate(int n, bool count_only, unsigned workers);
RunReport cmd_pentagons(const std::string& graph6);
RunReport cmd_extremal(int n, unsigned workers);
RunReport cmd_blowup(const std::string& spec);
RunReport cmd_cutnorm(const std::string& g1, const std::string& g2, unsigned workers);
RunReport cmd_density(const std::string& h, const std::string& g);

/// Full command line (without argv[0]). Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pentaflag::cli
