#include <cstdio>

#include "CLI11.hpp"
#include "affaut/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact computation in polynomial automorphism groups"};
  app.require_subcommand(1);

  affaut::Request req;
  std::uint64_t seed = 0;
  long long grid = 0, random_n = 0;
  int stratum = 0, dimension = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", req.field_tag, "coefficient field: QQ or GF(p^r)");
    sub->add_flag("--pretty", req.pretty, "indent the JSON report");
  };

  auto* compose = app.add_subcommand("compose", "compose two maps (second acts first)");
  compose->add_option("inputs", req.inputs)->expected(2);
  add_common(compose);

  for (const char* name : {"invert", "jacobian", "decompose", "alexander", "sign", "rho"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("inputs", req.inputs)->expected(1);
    add_common(sub);
  }
  app.get_subcommand("invert")->description("exact inverse with a roundtrip check");
  app.get_subcommand("jacobian")->description("determinant of the derivative matrix");
  app.get_subcommand("decompose")->description("affine/triangular factorization on the plane");
  app.get_subcommand("alexander")->description("scaling family joining a map to its linear part");
  app.get_subcommand("sign")->description("permutation action on the points of GF(q)^n");
  app.get_subcommand("rho")->description("quotient class of a plane Jacobian-1 map over GF(q)");
  app.get_subcommand("rho")->add_flag("--mod-linear", req.mod_linear,
                                      "also reduce modulo the span of x (GF(2) target)");

  auto* degenerate = app.add_subcommand("degenerate", "translation limits of parameter families");
  degenerate->add_option("inputs", req.inputs)->expected(1);
  degenerate->add_flag("--pipeline", req.pipeline,
                       "treat the input as a Jacobian-1 map and build the commutator family");
  degenerate->add_option("--grid", grid, "witness grid height override");
  degenerate->add_option("--samples", req.samples, "t0 values for the sample checks")->delimiter(',');
  add_common(degenerate);

  auto* sln = app.add_subcommand("sln-extract", "elementary-matrix limit from a point-moving map");
  sln->add_option("inputs", req.inputs)->expected(1);
  sln->add_option("--p", req.point_p, "source point, comma separated")->required();
  sln->add_option("--q", req.point_q, "target point, comma separated")->required();
  add_common(sln);

  auto* census = app.add_subcommand("census", "parity census of translations and elementary maps");
  census->add_option("-n,--dimension", dimension, "ambient dimension")->required();
  add_common(census);

  auto* vmember = app.add_subcommand("vmember", "membership in the subspace V of k[x]");
  vmember->add_option("inputs", req.inputs)->expected(1);
  vmember->add_option("--stratum", stratum, "stratum bound J");
  add_common(vmember);

  auto* verify = app.add_subcommand("verify-identities", "generator identity reports");
  verify->add_flag("--grid", req.grid_mode, "exhaustive grid over the (finite) field");
  verify->add_option("--random", random_n, "number of random QQ instances");
  verify->add_option("--seed", seed, "RNG seed (required with --random)");
  add_common(verify);

  auto* nagata = app.add_subcommand("nagata", "the five exact identities of the Nagata family");
  nagata->add_option("--alpha", req.alpha);
  nagata->add_option("--beta", req.beta);
  nagata->add_option("--u", req.u);
  add_common(nagata);

  CLI11_PARSE(app, argc, argv);

  auto* picked = app.get_subcommands().front();
  req.subcommand = picked->get_name();
  if (picked->count("--seed")) req.seed = seed;
  if (picked->count("--grid") && req.subcommand == "degenerate") req.grid = grid;
  if (picked->count("--random")) req.random_n = random_n;
  if (picked->count("--stratum")) req.stratum = stratum;
  if (picked->count("-n") || picked->count("--dimension")) req.dimension = dimension;

  affaut::Response res = affaut::run(req);
  std::fputs(res.body.c_str(), stdout);
  return res.exit_code;
}
