#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "h10m/curve/endo.hpp"
#include "h10m/encoder/encoder.hpp"
#include "h10m/errors.hpp"
#include "h10m/verify/campaign.hpp"

namespace {

using namespace h10m;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f || !(f << text)) throw Error("cannot write " + path);
}

int run_verify(const std::string& suites, verify::CampaignConfig cfg) {
  cfg.suites = verify::parse_suites(suites);
  cfg.validate();
  if (cfg.max_n > 12)
    std::cerr << "warning: max-n " << cfg.max_n << " above 12; xn has degree n^2 and the curve suite slows down sharply\n";
  auto certs = verify::run_campaign(cfg);
  if (!cfg.out.empty()) verify::save_certificates(certs, cfg.out);
  std::cout << verify::report(certs);
  return verify::any_fail(certs) ? 1 : 0;
}

int run_compute(int n, bool tilde, const std::string& format) {
  auto& table = curve::shared_endo_table();
  algebra::RatFunc x, y;
  if (tilde) std::tie(x, y) = table.tilde(n);
  else {
    auto p = table.get(n);
    x = p.x;
    y = p.y;
  }
  if (format == "json") {
    nlohmann::json j{{"n", n}, {"tilde", tilde}, {"x", x.to_string()}, {"y", y.to_string()}};
    std::cout << j.dump(1) << "\n";
  } else {
    const std::string suffix = (tilde ? "~" : "") + std::string("_") + std::to_string(n);
    std::cout << "x" << suffix << " = " << x << "\n" << "y" << suffix << " = " << y << "\n";
  }
  return 0;
}

int run_encode(const std::string& input, const std::string& dialect, const std::string& out, const std::string& format) {
  auto d = encoder::parse_dialect(dialect);
  if (!d) throw DomainError("unknown dialect '" + dialect + "'");
  auto f = encoder::encode_system(encoder::parse_diophantine(read_input(input)), *d);
  write_output(out, encoder::render_formula(f, format == "json" ? encoder::RenderFormat::Json : encoder::RenderFormat::Text));
  return 0;
}

int run_report(const std::string& in) {
  auto certs = verify::load_certificates(in);
  std::cout << verify::report(certs);
  return verify::any_fail(certs) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the Manin-Denef curve computations, and the Diophantine encoder"};
  app.require_subcommand(1);

  verify::CampaignConfig cfg;
  cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string suites = "all";
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites and print a report");
  verify_cmd->add_option("--suite", suites, "Comma-separated suites or 'all' (curve, orders, series, uniformization, encoder)")
      ->capture_default_str();
  verify_cmd->add_option("--max-n", cfg.max_n, "Largest multiple n of (z, 1) to check")->capture_default_str();
  verify_cmd->add_option("--trunc", cfg.trunc, "Series truncation order")->capture_default_str();
  verify_cmd->add_option("--seed", cfg.seed, "Seed for the randomized checks")->capture_default_str();
  verify_cmd->add_option("--out", cfg.out, "Write certificates as JSON to this path");
  verify_cmd->add_option("--jobs", cfg.jobs, "Worker threads")->group("");
  verify_cmd->add_flag("--mutate", cfg.mutate, "Corrupt the addition law (harness self-test)")->group("");

  auto* compute_cmd = app.add_subcommand("compute", "Compute curve data");
  compute_cmd->require_subcommand(1);
  int n = 1;
  bool tilde = false;
  std::string format = "text";
  auto* xn_cmd = compute_cmd->add_subcommand("xn", "The pair (xn, yn) of n(z, 1)");
  xn_cmd->add_option("--n", n, "Multiple, nonzero")->required();
  xn_cmd->add_flag("--tilde", tilde, "Specialize to delta = -2");
  xn_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  std::string input, dialect, out, enc_format = "text";
  auto* encode_cmd = app.add_subcommand("encode", "Encode a Diophantine system as a positive-existential formula");
  encode_cmd->add_option("--input", input, "System file, '-' for stdin")->required();
  encode_cmd->add_option("--dialect", dialect, "meromorphic, analytic or entire-cm")
      ->required()
      ->check(CLI::IsMember({"meromorphic", "analytic", "entire-cm"}));
  encode_cmd->add_option("--out", out, "Output path (default stdout)");
  encode_cmd->add_option("--format", enc_format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  std::string report_in;
  auto* report_cmd = app.add_subcommand("report", "Print the report for a certificate file");
  report_cmd->add_option("--in", report_in, "Certificate JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify_cmd) return run_verify(suites, cfg);
    if (*xn_cmd) return run_compute(n, tilde, format);
    if (*encode_cmd) return run_encode(input, dialect, out, enc_format);
    if (*report_cmd) return run_report(report_in);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
