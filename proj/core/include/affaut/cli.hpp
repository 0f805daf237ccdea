#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace affaut {

/// One CLI invocation, already parsed. run() is a pure function of this
/// struct: identical requests produce identical output bytes.
struct Request {
  std::string subcommand;
  std::vector<std::string> inputs;     // inline expressions or @file paths
  std::string field_tag = "QQ";
  std::optional<std::uint64_t> seed;
  std::optional<long long> grid;       // witness grid height override
  std::vector<std::string> samples;    // t0 values for certificates
  std::optional<int> stratum;          // J for vmember
  std::optional<int> dimension;        // n for census
  std::optional<long long> random_n;   // verify-identities --random
  bool grid_mode = false;              // verify-identities --grid
  bool pipeline = false;               // degenerate --pipeline
  bool mod_linear = false;             // rho --mod-linear
  bool pretty = false;
  std::string alpha, beta, u;          // nagata parameters
  std::string point_p, point_q;        // sln-extract points
};

struct Response {
  std::string body;  // serialized JSON report
  int exit_code;     // 0 verified/true, 1 mathematical negative, 2 input error
};

Response run(const Request& request);

}  // namespace affaut
