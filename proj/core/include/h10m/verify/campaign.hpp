#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace h10m::verify {

enum class Status { Pass, Fail, Undefined };
const char* to_string(Status s);

// One executed check. `residual` is "0" exactly when status is PASS.
struct Certificate {
  std::string check_id;
  std::map<std::string, std::string> params;
  Status status = Status::Undefined;
  std::string residual;
  long elapsed_ms = 0;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct CampaignConfig {
  std::vector<std::string> suites;
  int max_n = 12;
  int trunc = 32;
  std::uint64_t seed = 0;
  std::string out;
  unsigned jobs = 1;
  // Run with the doubling slope's δ term sign-flipped; some check must fail.
  bool mutate = false;

  // Throws DomainError on max_n < 1, trunc < 8, jobs == 0 or an unknown suite.
  void validate() const;
};

// curve, orders, series, uniformization, encoder
const std::vector<std::string>& all_suites();
// "all" or a comma-separated list; whitespace around names is ignored.
std::vector<std::string> parse_suites(const std::string& list);

// A kind of check the campaign emits: certificates for it have ids
// starting with `prefix` + ".".
struct CheckFamily {
  std::string prefix;
  std::string lemma;  // report row label
  std::string suite;
  std::string exercises;  // library operations it drives
};
const std::vector<CheckFamily>& check_families();

// Runs every selected suite. Certificates come back sorted by check_id
// (digit runs compare numerically), independent of `jobs`.
std::vector<Certificate> run_campaign(const CampaignConfig& cfg);

bool any_fail(const std::vector<Certificate>& certs);
// Orders ids so that "n=2" precedes "n=10".
bool natural_less(const std::string& a, const std::string& b);

std::string certificates_to_json(const std::vector<Certificate>& certs);
// Throws ParseError on malformed input.
std::vector<Certificate> certificates_from_json(const std::string& json);
// Throws Error when the file cannot be written or read.
void save_certificates(const std::vector<Certificate>& certs, const std::string& path);
std::vector<Certificate> load_certificates(const std::string& path);

// Plain-text table grouped by lemma: FAIL rows first, then UNDEFINED, then
// one PASS row per lemma.
std::string report(const std::vector<Certificate>& certs);

}  // namespace h10m::verify
