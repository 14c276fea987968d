// Command-line front end. Talks to the library only through bineq.h.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "bineq.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct CliError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{"cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{"cannot write " + path.string()};
  out << text;
  if (!out) throw CliError{"write failed for " + path.string()};
}

// Owns a char* handed out by the library.
struct LibString {
  char* p = nullptr;
  ~LibString() { bineq_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

void check_status(bineq_status s) {
  if (s != BINEQ_OK)
    throw CliError{std::string(bineq_status_name(s)) + ": " + bineq_last_error()};
}

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw CliError{what + ": " + e.what()};
  }
}

// "re", "re,im" or a JSON [re, im]
Json complex_arg(const std::string& s) {
  const auto comma = s.find(',');
  try {
    if (s.find('[') != std::string::npos) return Json::parse(s);
    if (comma == std::string::npos) return Json::array({std::stod(s), 0.0});
    return Json::array({std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))});
  } catch (const std::exception&) {
    throw CliError{"bad complex value '" + s + "'"};
  }
}

int run_verify(const std::string& config_path, std::optional<std::uint64_t> seed,
               const std::string& out_dir) {
  std::string config;
  if (!config_path.empty()) config = read_file(config_path);
  LibString summary, lines;
  int exit_class = 0;
  double wall = 0.0;
  const std::uint64_t seed_value = seed.value_or(0);
  check_status(bineq_run_suite(config_path.empty() ? nullptr : config.c_str(),
                               seed ? &seed_value : nullptr, &summary.p,
                               out_dir.empty() ? nullptr : &lines.p, &exit_class, &wall));
  const Json report = Json::parse(summary.str());
  if (out_dir.empty()) {
    std::cout << summary.str();
  } else {
    std::filesystem::create_directories(out_dir);
    const std::filesystem::path dir(out_dir);
    write_file(dir / "suite_report.json", summary.str());
    write_file(dir / "reports.jsonl", lines.str());
    const Json info{{"seed", report.at("seed")},
                    {"wall_time_seconds", wall},
                    {"exit_status", exit_class},
                    {"library_version", bineq_version()}};
    write_file(dir / "run_info.json", info.dump(2) + "\n");
  }
  std::fprintf(stderr, "verify: seed %s, %s in %.2f s\n", report.at("seed").dump().c_str(),
               exit_class == 0 ? "pass" : "VIOLATION", wall);
  return exit_class == 0 ? kExitPass : kExitViolation;
}

int run_scan(const std::string& config_path, const std::string& out_path) {
  std::string config;
  if (!config_path.empty()) config = read_file(config_path);
  LibString csv;
  check_status(bineq_scan(config_path.empty() ? nullptr : config.c_str(), &csv.p));
  if (out_path.empty())
    std::cout << csv.str();
  else
    write_file(out_path, csv.str());
  return kExitPass;
}

struct RequestArgs {
  std::string statement;
  std::string poly_path;
  std::string params_path;
  std::string alpha, beta;
  std::optional<double> R, r, k;
  bool no_gates = false;
};

Json build_request(const RequestArgs& a) {
  Json req{{"statement", a.statement},
           {"poly", parse_json_text(read_file(a.poly_path), a.poly_path)}};
  if (!a.params_path.empty())
    req["params"] = parse_json_text(read_file(a.params_path), a.params_path);
  if (!a.alpha.empty()) req["alpha"] = complex_arg(a.alpha);
  if (!a.beta.empty()) req["beta"] = complex_arg(a.beta);
  if (a.R) req["R"] = *a.R;
  if (a.r) req["r"] = *a.r;
  if (a.k) req["k"] = *a.k;
  if (a.no_gates) req["gates"] = false;
  return req;
}

int run_sharpness(const RequestArgs& a) {
  LibString out;
  check_status(bineq_tightness_json(build_request(a).dump().c_str(), &out.p));
  std::cout << Json::parse(out.str()).dump(2) << '\n';
  return kExitPass;
}

int run_check(const RequestArgs& a) {
  LibString out;
  check_status(bineq_check_json(build_request(a).dump().c_str(), &out.p));
  const Json rep = Json::parse(out.str());
  std::cout << rep.dump(2) << '\n';
  return rep.at("verdict") == "violated" ? kExitViolation : kExitPass;
}

int run_roots(const std::string& poly_path) {
  const std::string text = read_file(poly_path);
  bineq_poly* p = nullptr;
  check_status(bineq_poly_from_json(text.c_str(), &p));
  LibString out;
  const bineq_status s = bineq_roots_json(p, &out.p);
  bineq_poly_destroy(p);
  check_status(s);
  std::cout << Json::parse(out.str()).dump(2) << '\n';
  return kExitPass;
}

void add_request_options(CLI::App* cmd, RequestArgs& a, bool with_statement) {
  if (with_statement) cmd->add_option("--statement", a.statement, "statement id")->required();
  cmd->add_option("--poly", a.poly_path, "polynomial JSON file")->required();
  cmd->add_option("--params", a.params_path, "operator parameter JSON file");
  cmd->add_option("--alpha", a.alpha, "complex alpha as re,im");
  cmd->add_option("--beta", a.beta, "complex beta as re,im");
  cmd->add_option("--R", a.R, "dilation radius R >= 1");
  cmd->add_option("--r", a.r, "evaluation radius r >= 1");
  cmd->add_option("--k", a.k, "root radius k in (0, 1]");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of operator inequalities for complex polynomials"};
  app.require_subcommand(1);

  std::string config_path, out_path, out_dir, poly_path;
  std::optional<std::uint64_t> seed;

  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  verify->add_option("--config", config_path, "suite config JSON");
  verify->add_option("--seed", seed, "master seed");
  verify->add_option("--out", out_dir, "directory for suite_report.json and reports.jsonl");

  auto* scan = app.add_subcommand("scan", "tightness scan over a parameter grid");
  scan->add_option("--config", config_path, "grid config JSON");
  scan->add_option("--out", out_path, "CSV output file");

  RequestArgs sharp_args;
  auto* sharp = app.add_subcommand("sharpness", "tightness ratio of one statement");
  add_request_options(sharp, sharp_args, true);

  RequestArgs check_args;
  auto* chk = app.add_subcommand("check", "verdict for one statement");
  add_request_options(chk, check_args, true);
  chk->add_flag("--no-gates", check_args.no_gates, "disable hypothesis gates");

  auto* roots = app.add_subcommand("roots", "all zeros of a polynomial");
  roots->add_option("--poly", poly_path, "polynomial JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) return run_verify(config_path, seed, out_dir);
    if (*scan) return run_scan(config_path, out_path);
    if (*sharp) return run_sharpness(sharp_args);
    if (*chk) return run_check(check_args);
    if (*roots) return run_roots(poly_path);
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
