// Copyright 2026 The plbr Authors
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

#include "cli.h"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "plbr/br_engine.h"
#include "plbr/dynamics.h"
#include "plbr/game_spec.h"
#include "plbr/io.h"
#include "plbr/mc_oracle.h"

namespace plbr::cli {
namespace {

// Bad flag values; reported with kUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational ParseNumber(const std::string& text, const std::string& flag) {
  try {
    return Rational::Parse(text);
  } catch (const std::exception&) {
    throw UsageError(flag + ": not a number: '" + text + "'");
  }
}

struct GameArgs {
  std::string game;
  std::vector<std::string> params;
};

void AddGameArgs(CLI::App* cmd, GameArgs* args) {
  cmd->add_option("game", args->game, "Registry name or game spec file")
      ->required();
  cmd->add_option("--param", args->params,
                  "Registry parameter override NAME=VALUE (repeatable)");
}

GameDefinition LoadGame(const GameArgs& args) {
  if (std::filesystem::is_regular_file(args.game)) {
    if (!args.params.empty()) {
      throw UsageError("--param applies to registry games, not spec files");
    }
    return LoadGameFile(args.game);
  }
  Parameters params;
  for (const std::string& p : args.params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("--param expects NAME=VALUE, got '" + p + "'");
    }
    params[p.substr(0, eq)] = ParseNumber(p.substr(eq + 1), "--param");
  }
  return Registry(args.game, params);
}

Strategy ResolveSeed(const std::string& name, const GameDefinition& game,
                     int player) {
  if (std::filesystem::is_regular_file(name)) return LoadStrategyFile(name);
  return Seed(name, game, player);
}

Profile ResolveProfile(const std::string& name, const GameDefinition& game) {
  if (std::filesystem::is_regular_file(name)) {
    const Strategy s = LoadStrategyFile(name);
    return {s, s};
  }
  return NamedProfile(name, game);
}

std::string Params(const GameDefinition& game) {
  std::string out;
  for (const auto& [key, value] : game.parameters) {
    out += (out.empty() ? "" : ", ") + key + "=" + value.ToString();
  }
  return out;
}

void PrintHeader(std::ostream& out, const std::string& command,
                 const GameDefinition& game) {
  out << "game: " << game.name;
  if (!game.parameters.empty()) out << " (" << Params(game) << ")";
  out << "\ncommand: " << command << "\n";
}

std::string Exact(const Rational& x) {
  return x.ToString() + " (" + FormatDecimal(x, 12) + ")";
}

std::string Vector(const std::vector<Rational>& v, bool decimal) {
  std::string out = "<";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += decimal ? FormatDecimal(v[i], 12) : v[i].ToString();
  }
  return out + ">";
}

void PrintLabeled(std::ostream& out, const std::string& label,
                  const Strategy& s, const PiecewiseUniform& dist) {
  out << label << ":\n";
  std::ostringstream body;
  PrintStrategy(body, s, dist.lo(), dist.hi());
  std::istringstream lines(body.str());
  for (std::string line; std::getline(lines, line);) out << "  " << line << "\n";
}

// One CSV row per grid point; the value at the support's low end is the
// right limit, where zero-extended strategies still read 0.
void WriteCurve(std::ostream& out, const Strategy& s, const PiecewiseUniform& dist,
                std::size_t grid, int precision,
                const std::vector<EmpiricalPoint>* mc) {
  out << "t,action" << (mc ? ",mc_action,mc_stderr" : "") << "\n";
  const std::vector<Rational> ts = GridPoints(dist.lo(), dist.hi(), grid + 1);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const Rational a = i == 0 ? s.RightLimit(ts[i]) : s(ts[i]);
    out << FormatDecimal(ts[i], precision) << "," << FormatDecimal(a, precision);
    if (mc) {
      const EmpiricalPoint& p = (*mc)[i];
      out << "," << FormatDecimal(Rational::FromDouble(p.action), precision)
          << "," << FormatDecimal(Rational::FromDouble(p.std_error), precision);
    }
    out << "\n";
  }
}

std::string WithSuffix(const std::string& path, std::size_t index) {
  const std::filesystem::path p(path);
  return (p.parent_path() /
          (p.stem().string() + "." + std::to_string(index) + p.extension().string()))
      .string();
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double Millis() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

int CmdList(std::ostream& out) {
  for (const std::string& name : RegistryNames()) out << name << "\n";
  return kOk;
}

int CmdShow(const GameArgs& ga, std::ostream& out) {
  out << GameToJson(LoadGame(ga)) << "\n";
  return kOk;
}

struct BrArgs {
  GameArgs game;
  std::string seed = "truthful";
  int player = 0;
  std::string out_path;
  std::string csv_path;
  std::size_t grid = 100;
  int precision = 12;
};

int CmdBestResponse(const BrArgs& args, bool timing, std::ostream& out) {
  const Timer timer;
  const GameDefinition game = LoadGame(args.game);
  if (args.player != 0 && args.player != 1) throw UsageError("--player is 0 or 1");
  const Strategy opp = ResolveSeed(args.seed, game, 1 - args.player);
  BestResponseOptions opts;
  opts.action_clip = game.action_clip;
  const Strategy br = BestResponse(game, args.player, opp, opts);

  PrintHeader(out, "best-response", game);
  out << "opponent: " << args.seed << "\n";
  PrintLabeled(out, "best response of player " + std::to_string(args.player),
               br, game.dist(args.player));
  if (!args.out_path.empty()) {
    SaveStrategyFile(args.out_path, br);
    out << "wrote " << args.out_path << "\n";
  }
  if (!args.csv_path.empty()) {
    std::ofstream csv(args.csv_path);
    if (!csv) throw UsageError("cannot write '" + args.csv_path + "'");
    WriteCurve(csv, br, game.dist(args.player), args.grid, args.precision, nullptr);
    out << "wrote " << args.csv_path << "\n";
  }
  if (timing) out << "time: " << timer.Millis() << " ms\n";
  return kOk;
}

struct SolveArgs {
  GameArgs game;
  std::string seed = "truthful";
  std::string seed1;
  std::string tol = "1/1000";
  std::size_t max_iters = 100;
  std::size_t max_period = 8;
  std::size_t max_bits = 1024;
  std::size_t verify_grid = 512;
  bool asymmetric = false;
  std::string out_path;
};

int CmdSolve(const SolveArgs& args, bool timing, std::ostream& out) {
  const Timer timer;
  const GameDefinition game = LoadGame(args.game);
  IterationConfig cfg;
  cfg.tolerance = ParseNumber(args.tol, "--tol");
  cfg.max_iters = args.max_iters;
  cfg.max_cycle_period = args.max_period;
  cfg.max_coefficient_bits = args.max_bits;
  cfg.verify_grid = args.verify_grid;
  try {
    cfg.Validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const bool asymmetric = args.asymmetric || !game.symmetric || !args.seed1.empty();
  IterationOutcome result;
  if (asymmetric) {
    Profile seeds = args.seed1.empty()
                        ? ResolveProfile(args.seed, game)
                        : Profile{ResolveSeed(args.seed, game, 0),
                                  ResolveSeed(args.seed1, game, 1)};
    result = IterateAsymmetric(game, seeds, cfg);
  } else {
    result = IterateSymmetric(game, ResolveSeed(args.seed, game, 0), cfg);
  }

  PrintHeader(out, asymmetric ? "solve (asymmetric)" : "solve", game);
  out << "seed: " << args.seed << (args.seed1.empty() ? "" : ", " + args.seed1)
      << "\ntolerance: " << cfg.tolerance.ToString() << "\n";
  out << "outcome: " << ToString(result.kind);
  if (result.kind == IterationOutcome::Kind::kFixedPoint) {
    out << (result.exact ? " (exact)" : " (within tolerance)");
  } else if (result.kind == IterationOutcome::Kind::kCycle) {
    out << " of period " << result.period;
  } else if (result.size_limited) {
    out << " (coefficients exceeded " << cfg.max_coefficient_bits << " bits)";
  }
  out << " after " << result.iterations << " rounds\n";
  out << "history (round: sup-distance to previous):\n";
  for (std::size_t i = 1; i < result.history.size(); ++i) {
    out << "  " << i << ": " << Exact(result.history[i].distance) << "\n";
  }

  const std::size_t per_step = asymmetric ? 2 : 1;
  for (std::size_t i = 0; i < result.profile.size(); ++i) {
    std::string label;
    const int player = asymmetric ? static_cast<int>(i % 2) : 0;
    if (result.kind == IterationOutcome::Kind::kCycle) {
      label = "cycle member " + std::to_string(i / per_step + 1);
      if (asymmetric) label += ", player " + std::to_string(player);
    } else {
      label = asymmetric ? "player " + std::to_string(player) : "strategy";
    }
    PrintLabeled(out, label, result.profile[i], game.dist(player));
  }
  if (result.epsilon) out << "epsilon: " << Exact(*result.epsilon) << "\n";
  if (!args.out_path.empty()) {
    for (std::size_t i = 0; i < result.profile.size(); ++i) {
      const std::string path = result.profile.size() == 1
                                   ? args.out_path
                                   : WithSuffix(args.out_path, i);
      SaveStrategyFile(path, result.profile[i]);
      out << "wrote " << path << "\n";
    }
  }
  if (timing) out << "time: " << timer.Millis() << " ms\n";
  return result.kind == IterationOutcome::Kind::kExhausted ? kExhausted : kOk;
}

struct VerifyArgs {
  GameArgs game;
  std::vector<std::string> profile;
  std::size_t grid = 512;
};

int CmdVerify(const VerifyArgs& args, bool timing, std::ostream& out) {
  const Timer timer;
  const GameDefinition game = LoadGame(args.game);
  if (args.profile.empty() || args.profile.size() > 2) {
    throw UsageError("--profile takes one name/file or two files");
  }
  if (args.grid == 0) throw UsageError("--grid must be positive");
  const Profile profile =
      args.profile.size() == 1
          ? ResolveProfile(args.profile[0], game)
          : Profile{ResolveSeed(args.profile[0], game, 0),
                    ResolveSeed(args.profile[1], game, 1)};
  const VerifyResult v = Verify(game, profile, args.grid);

  PrintHeader(out, "verify", game);
  for (int p = 0; p < 2; ++p) {
    PrintLabeled(out, "player " + std::to_string(p), profile[p], game.dist(p));
  }
  for (int p = 0; p < 2; ++p) {
    out << "epsilon[player " << p << "]: " << Exact(v.player_epsilon[p]) << "\n";
  }
  out << "epsilon: " << Exact(v.epsilon) << " (grid of " << args.grid
      << " intervals, a lower bound)\n";
  if (timing) out << "time: " << timer.Millis() << " ms\n";
  return kOk;
}

struct PlotArgs {
  GameArgs game;
  std::string seed = "truthful";
  bool best_response = false;
  int player = 0;
  std::size_t grid = 100;
  int precision = 12;
  bool mc = false;
  std::size_t mc_samples = 100000;
  std::uint64_t mc_seed = 1;
  std::size_t mc_action_grid = 41;
  std::string mc_action_lo;
  std::string mc_action_hi;
  std::string out_path;
};

int CmdExportPlot(const PlotArgs& args, std::ostream& out) {
  const GameDefinition game = LoadGame(args.game);
  if (args.player != 0 && args.player != 1) throw UsageError("--player is 0 or 1");
  if (args.grid == 0) throw UsageError("--grid must be positive");
  if (args.precision < 1) throw UsageError("--precision must be positive");
  const PiecewiseUniform& dist = game.dist(args.player);
  // The seed is read as the opponent's strategy when a response is asked
  // for, otherwise as this player's own curve.
  const int seed_player = args.best_response ? 1 - args.player : args.player;
  const Strategy seed = ResolveSeed(args.seed, game, seed_player);
  Strategy curve = seed;
  if (args.best_response) {
    BestResponseOptions opts;
    opts.action_clip = game.action_clip;
    curve = BestResponse(game, args.player, seed, opts);
  }

  std::optional<std::vector<EmpiricalPoint>> mc;
  if (args.mc) {
    McConfig cfg;
    cfg.samples_per_cell = args.mc_samples;
    cfg.type_grid = args.grid + 1;
    cfg.action_grid = args.mc_action_grid;
    cfg.rng_seed = args.mc_seed;
    // Default action range: the type support widened to cover the curve.
    Rational lo = dist.lo();
    Rational hi = dist.hi();
    for (const Rational& t : GridPoints(dist.lo(), dist.hi(), args.grid + 1)) {
      const Rational a = t == dist.lo() ? curve.RightLimit(t) : curve(t);
      lo = Min(lo, a);
      hi = Max(hi, a);
    }
    cfg.action_lo = args.mc_action_lo.empty()
                        ? lo
                        : ParseNumber(args.mc_action_lo, "--mc-action-lo");
    cfg.action_hi = args.mc_action_hi.empty()
                        ? hi
                        : ParseNumber(args.mc_action_hi, "--mc-action-hi");
    try {
      cfg.Validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    // The empirical column answers the opponent strategy: the seed itself
    // when plotting a best response, otherwise the same curve played by the
    // opponent (a self-best-response check).
    mc = EmpiricalBestResponse(game, args.player, seed, cfg);
  }

  if (args.out_path.empty()) {
    WriteCurve(out, curve, dist, args.grid, args.precision, mc ? &*mc : nullptr);
  } else {
    std::ofstream file(args.out_path);
    if (!file) throw UsageError("cannot write '" + args.out_path + "'");
    WriteCurve(file, curve, dist, args.grid, args.precision, mc ? &*mc : nullptr);
  }
  return kOk;
}

}  // namespace

std::string FormatDecimal(const Rational& x, int digits) {
  if (x.IsZero()) return "0";
  if (digits < 1) digits = 1;
  const Rational mag = x.Abs();
  // Decimal exponent e with 10^e <= mag < 10^(e+1).
  long e = static_cast<long>(std::floor(std::log10(mag.ToDouble())));
  auto pow10 = [](long k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
    return k < 0 ? Rational(mpq_class(mpz_class(1), p)) : Rational(mpq_class(p));
  };
  while (pow10(e) > mag) --e;
  while (pow10(e + 1) <= mag) ++e;
  // Round mag * 10^(digits - 1 - e) half up to an integer.
  const Rational scaled = mag * pow10(digits - 1 - e) + Rational(1, 2);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.mpq().get_num_mpz_t(),
             scaled.mpq().get_den_mpz_t());
  std::string s = q.get_str();
  if (static_cast<long>(s.size()) > digits) {  // rounding carried to 10^digits
    s.pop_back();
    ++e;
  }
  std::string body;
  if (e >= 0 && e < digits) {
    body = s.substr(0, static_cast<std::size_t>(e) + 1);
    std::string frac = s.substr(static_cast<std::size_t>(e) + 1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) body += "." + frac;
  } else if (e < 0 && e >= -6) {
    std::string frac = std::string(static_cast<std::size_t>(-e - 1), '0') + s;
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    body = "0." + frac;
  } else {
    std::string frac = s.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    body = s.substr(0, 1) + (frac.empty() ? "" : "." + frac) + "e" +
           std::to_string(e);
  }
  return (x.Sign() < 0 ? "-" : "") + body;
}

void PrintStrategy(std::ostream& out, const Strategy& s, const Rational& lo,
                   const Rational& hi) {
  const Strategy simple = Simplify(s);
  const auto& c = simple.boundaries();
  for (std::size_t k = 0; k < simple.num_pieces(); ++k) {
    const Rational left = k == 0 ? lo : Max(lo, c[k - 1]);
    const Rational right = k == c.size() ? hi : Min(hi, c[k]);
    if (!(left < right)) continue;
    out << "a(t) = " << ToString(simple.pieces()[k]) << " on (" << left.ToString()
        << ", " << right.ToString() << "]\n";
  }
  std::vector<Rational> m;
  std::vector<Rational> b;
  for (const LinearFunc& f : simple.pieces()) {
    m.push_back(f.slope);
    b.push_back(f.intercept);
  }
  out << "c = " << Vector(c, false) << "\n"
      << "m = " << Vector(m, false) << "\n"
      << "b = " << Vector(b, false) << "\n";
  out << "c ~ " << Vector(c, true) << "\n"
      << "m ~ " << Vector(m, true) << "\n"
      << "b ~ " << Vector(b, true) << "\n";
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact piecewise-linear best responses for two-player games "
               "of incomplete information"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "Report wall-clock time");

  app.add_subcommand("list", "List registry games");

  GameArgs show;
  auto* show_cmd = app.add_subcommand("show", "Print a game as a JSON spec");
  AddGameArgs(show_cmd, &show);

  BrArgs br;
  auto* br_cmd = app.add_subcommand("best-response",
                                    "Best response to one opponent strategy");
  AddGameArgs(br_cmd, &br.game);
  br_cmd->add_option("--seed", br.seed,
                     "Opponent strategy: truthful, constant:C, linear:M,B, supply-start, "
                     "file:PATH or a strategy file")
      ->capture_default_str();
  br_cmd->add_option("--player", br.player, "Responding player (0 or 1)")
      ->capture_default_str();
  br_cmd->add_option("--out", br.out_path, "Write the response as a strategy file");
  br_cmd->add_option("--csv", br.csv_path, "Write the response curve as CSV");
  br_cmd->add_option("--grid", br.grid, "CSV grid intervals")->capture_default_str();
  br_cmd->add_option("--precision", br.precision, "CSV significant digits")
      ->capture_default_str();

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Iterate best responses");
  AddGameArgs(solve_cmd, &solve.game);
  solve_cmd->add_option("--seed", solve.seed,
                        "Seed strategy, or a profile name for asymmetric runs")
      ->capture_default_str();
  solve_cmd->add_option("--seed1", solve.seed1,
                        "Separate seed for player 1 (implies --asymmetric)");
  solve_cmd->add_option("--tol", solve.tol, "Sup-distance tolerance")
      ->capture_default_str();
  solve_cmd->add_option("--max-iters", solve.max_iters, "Round limit")
      ->capture_default_str();
  solve_cmd->add_option("--max-period", solve.max_period, "Longest cycle checked")
      ->capture_default_str();
  solve_cmd->add_option("--max-bits", solve.max_bits,
                        "Stop once coefficients exceed this many bits (0: never)")
      ->capture_default_str();
  solve_cmd->add_option("--verify-grid", solve.verify_grid,
                        "Grid for the epsilon certificate (0: skip)")
      ->capture_default_str();
  solve_cmd->add_flag("--asymmetric", solve.asymmetric,
                      "Update both players' strategies separately");
  solve_cmd->add_option("--out", solve.out_path,
                        "Write the resulting strategies (numbered when several)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Epsilon certificate for a profile");
  AddGameArgs(verify_cmd, &verify.game);
  verify_cmd->add_option("--profile", verify.profile,
                         "Profile name (truthful, supply-symmetric, shared-good, "
                         "vicious-vickrey, bargaining-linear, demand:X, fpsb, any "
                         "seed) or one/two strategy files")
      ->required();
  verify_cmd->add_option("--grid", verify.grid, "Grid intervals")
      ->capture_default_str();

  PlotArgs plot;
  auto* plot_cmd = app.add_subcommand("export-plot", "Write a strategy curve as CSV");
  AddGameArgs(plot_cmd, &plot.game);
  plot_cmd->add_option("--seed", plot.seed, "Strategy to plot (or to answer)")
      ->capture_default_str();
  plot_cmd->add_flag("--best-response", plot.best_response,
                     "Plot the best response to --seed instead of --seed itself");
  plot_cmd->add_option("--player", plot.player, "Player whose curve is plotted")
      ->capture_default_str();
  plot_cmd->add_option("--grid", plot.grid, "Grid intervals (rows = grid + 1)")
      ->capture_default_str();
  plot_cmd->add_option("--precision", plot.precision, "Significant digits")
      ->capture_default_str();
  plot_cmd->add_flag("--mc", plot.mc,
                     "Add the Monte Carlo best response to --seed per row");
  plot_cmd->add_option("--mc-samples", plot.mc_samples, "Samples per row")
      ->capture_default_str();
  plot_cmd->add_option("--mc-seed", plot.mc_seed, "Random seed")
      ->capture_default_str();
  plot_cmd->add_option("--mc-action-grid", plot.mc_action_grid,
                       "Action grid points")
      ->capture_default_str();
  plot_cmd->add_option("--mc-action-lo", plot.mc_action_lo, "Action grid start");
  plot_cmd->add_option("--mc-action-hi", plot.mc_action_hi, "Action grid end");
  plot_cmd->add_option("--out", plot.out_path, "Output file (default stdout)");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (app.got_subcommand("list")) return CmdList(out);
    if (show_cmd->parsed()) return CmdShow(show, out);
    if (br_cmd->parsed()) return CmdBestResponse(br, timing, out);
    if (solve_cmd->parsed()) return CmdSolve(solve, timing, out);
    if (verify_cmd->parsed()) return CmdVerify(verify, timing, out);
    if (plot_cmd->parsed()) return CmdExportPlot(plot, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return kBadSpec;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace plbr::cli
