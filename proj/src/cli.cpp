// Copyright 2026 The indist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "indist/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "indist/audit.hpp"
#include "indist/construction.hpp"
#include "indist/errors.hpp"
#include "indist/games.hpp"
#include "indist/serialize.hpp"
#include "indist/subsets.hpp"

namespace indist::cli {
namespace {

struct Globals {
  std::size_t workers = 1;
  std::string format = "text";
};

std::uint64_t default_cap() {
  if (const char* env = std::getenv(kEnumerationCapEnv)) {
    const BigInt v = parse_bigint(env);
    if (sgn(v) <= 0 || !v.fits_ulong_p()) throw DomainError("bad value for INDIST_ENUMERATION_CAP");
    return v.get_ui();
  }
  return 10'000'000;
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot open " + path + " for writing");
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Scalar results in the requested format. text prints the values alone.
void emit_scalars(std::ostream& out, const Globals& g,
                  const std::vector<std::pair<std::string, Json>>& fields) {
  if (g.format == "json") {
    Json j;
    for (const auto& [k, v] : fields) j[k] = v;
    out << j.dump() << '\n';
  } else if (g.format == "csv") {
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i].first;
    out << '\n';
    for (std::size_t i = 0; i < fields.size(); ++i) {
      const Json& v = fields[i].second;
      out << (i ? "," : "") << (v.is_string() ? v.get<std::string>() : v.dump());
    }
    out << '\n';
  } else {
    for (const auto& [k, v] : fields) out << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
}

SubsetIndex parse_positions(const std::string& text) {
  SubsetIndex s;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const BigInt v = parse_bigint(part);
    if (sgn(v) <= 0 || !v.fits_ulong_p()) throw DomainError("positions must be positive integers");
    s.push_back(v.get_ui());
  }
  if (s.empty()) throw DomainError("no positions given");
  return s;
}

struct Injection {
  Rational eps_star;
  int n = 0;
  BigInt max_value;
};

Injection parse_injection(const std::string& text) {
  Injection inj;
  bool have_eps = false, have_n = false, have_max = false;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value in --inject");
    const std::string key = part.substr(0, eq);
    const std::string value = part.substr(eq + 1);
    if (key == "eps_star") {
      inj.eps_star = parse_rational(value);
      have_eps = true;
    } else if (key == "n") {
      const BigInt n = parse_bigint(value);
      if (!n.fits_sint_p()) throw DomainError("n out of range");
      inj.n = static_cast<int>(n.get_si());
      have_n = true;
    } else if (key == "max") {
      inj.max_value = parse_bigint(value);
      have_max = true;
    } else {
      throw ParseError("unknown --inject key '" + key + "'");
    }
  }
  if (!have_eps || !have_n || !have_max) throw ParseError("--inject needs eps_star, n and max");
  return inj;
}

int construct_cmd(std::ostream& out, int n, const std::string& eps_text,
                  const std::string& mode, std::uint64_t samples, std::uint64_t seed,
                  const std::string& path) {
  ConstructionParams p;
  p.n = n;
  p.eps = parse_rational(eps_text);
  p.seed = seed;
  p.enumeration_cap = default_cap();
  if (mode == "exact") {
    p.mode = ConstructionMode::kExact;
    std::ostringstream s;
    write_dist(s, exact_joint(p));
    emit(out, path, s.str());
    return kExitOk;
  }
  p.mode = ConstructionMode::kSample;
  std::ostringstream s;
  for (std::uint64_t i = 0; i < samples; ++i) {
    Json line;
    line["tuple"] = to_json(sample_tuple(p, i));
    line["seed"] = seed;
    line["index"] = i;
    s << line.dump() << '\n';
  }
  emit(out, path, s.str());
  return kExitOk;
}

int audit_cmd(std::ostream& out, const Globals& g, const std::string& dist,
              const std::string& inject, const std::string& path) {
  if (dist.empty() == inject.empty()) throw DomainError("audit needs exactly one of --dist and --inject");
  AuditReport r;
  if (!dist.empty()) {
    SubsetOptions opt;
    opt.workers = g.workers;
    r = audit_distribution(load_dist(dist), opt);
  } else {
    const Injection inj = parse_injection(inject);
    r = audit_injected(inj.eps_star, inj.n, inj.max_value);
  }
  const Json j = to_json(r);
  if (g.format == "csv") {
    emit_scalars(out, g, {{"n", j["n"]},
                          {"eps_star", j["eps_star"]},
                          {"max_value", j["max_value"]},
                          {"applicable", j["applicable"]},
                          {"verdict", j["verdict"]}});
    if (!path.empty()) emit(out, path, dump(j));
  } else {
    emit(out, path, dump(j));
  }
  return r.verdict == AuditVerdict::kViolation ? kExitViolation : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact distributions with indistinguishable subsets", "indist"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--workers", g.workers, "Concurrent workers (results do not depend on it)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Output format for scalar reports")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  int n = 2;
  std::string eps = "1", mode = "exact", out_path;
  std::uint64_t samples = 1, seed = 0;
  auto* construct = app.add_subcommand("construct", "Build the level-n construction");
  construct->add_option("--n", n)->required();
  construct->add_option("--eps", eps)->required();
  construct->add_option("--mode", mode)->check(CLI::IsMember({"exact", "sample"}));
  construct->add_option("--samples", samples);
  construct->add_option("--seed", seed);
  construct->add_option("--out", out_path);

  auto* cert = app.add_subcommand("certificate", "Print the construction certificate");
  cert->add_option("--n", n)->required();
  cert->add_option("--eps", eps)->required();

  std::string file_a, file_b;
  auto* tvd_cmd = app.add_subcommand("tvd", "Exact total variation distance");
  tvd_cmd->add_option("--a", file_a)->required();
  tvd_cmd->add_option("--b", file_b)->required();

  std::string dist_path, positions;
  auto* project_cmd = app.add_subcommand("project", "Marginal on a set of positions");
  project_cmd->add_option("--dist", dist_path)->required();
  project_cmd->add_option("--positions", positions, "Comma-separated, 1-based")->required();
  project_cmd->add_option("--out", out_path);

  int game = 2, horizon = 3;
  std::string tol = "1/1000", method = "double-oracle";
  std::size_t max_iters = 100'000;
  auto* solve = app.add_subcommand("solve", "Solve Game 1 or Game 2 at a small horizon");
  solve->add_option("--game", game)->required()->check(CLI::IsMember({1, 2}));
  solve->add_option("--n", n)->required();
  solve->add_option("--N-horizon", horizon)->required();
  solve->add_option("--tol", tol);
  solve->add_option("--max-iters", max_iters);
  solve->add_option("--method", method)->check(CLI::IsMember({"double-oracle", "mwu"}));
  solve->add_option("--out", out_path);

  std::uint64_t trials = 100'000;
  auto* bet = app.add_subcommand("bet", "Simulate the MAP guesser between two distributions");
  bet->add_option("--dist-a", file_a)->required();
  bet->add_option("--dist-b", file_b)->required();
  bet->add_option("--trials", trials);
  bet->add_option("--seed", seed);

  std::string inject;
  auto* audit = app.add_subcommand("audit", "Check a distribution against the tower bound");
  audit->add_option("--dist", dist_path);
  audit->add_option("--inject", inject, "eps_star=P/Q,n=K,max=M");
  audit->add_option("--out", out_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "indist: " << e.what() << '\n';
    return kExitDomain;
  }

  try {
    if (*construct) return construct_cmd(out, n, eps, mode, samples, seed, out_path);
    if (*cert) {
      out << dump(to_json(certificate(n, parse_rational(eps))));
      return kExitOk;
    }
    if (*tvd_cmd) {
      emit_scalars(out, g, {{"tvd", to_json(tvd(load_dist(file_a), load_dist(file_b)))}});
      return kExitOk;
    }
    if (*project_cmd) {
      std::ostringstream s;
      write_dist(s, project(load_dist(dist_path), parse_positions(positions)));
      emit(out, out_path, s.str());
      return kExitOk;
    }
    if (*solve) {
      SolveOptions opt;
      opt.tolerance = parse_rational(tol);
      opt.max_iters = max_iters;
      opt.method = method == "mwu" ? SolverMethod::kMultiplicativeWeights
                                   : SolverMethod::kDoubleOracle;
      const ValueReport r = game == 1 ? solve_game1(n, horizon, opt) : solve_game2(n, horizon, opt);
      const Json j = to_json(r);
      if (g.format == "csv" || (g.format == "text" && out_path.empty())) {
        emit_scalars(out, g, {{"lower", j["lower"]}, {"upper", j["upper"]}, {"value", j["value"]}});
      }
      if (!out_path.empty() || g.format == "json") emit(out, out_path, dump(j));
      return kExitOk;
    }
    if (*bet) {
      const ExactDist a = load_dist(file_a);
      const ExactDist b = load_dist(file_b);
      const MonteCarloEstimate e =
          play_betting_game(a, b, optimal_guesser(a, b), trials, seed, g.workers);
      Json exact = to_json(tvd(a, b));
      if (g.format == "text") {
        Json j;
        j["estimate"] = e.mean;
        j["stderr"] = e.std_error;
        j["exact_tvd_if_computable"] = exact;
        out << j.dump() << '\n';
      } else {
        emit_scalars(out, g, {{"estimate", e.mean}, {"stderr", e.std_error},
                              {"exact_tvd_if_computable", exact}});
      }
      return kExitOk;
    }
    if (*audit) return audit_cmd(out, g, dist_path, inject, out_path);
  } catch (const CapacityError& e) {
    err << "indist: capacity: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const std::exception& e) {
    err << "indist: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitDomain;
}

}  // namespace indist::cli
