#include <algorithm>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "h10m/errors.hpp"
#include "h10m/verify/campaign.hpp"

namespace h10m::verify {

using nlohmann::json;

std::string certificates_to_json(const std::vector<Certificate>& certs) {
  json out = json::array();
  for (const auto& c : certs) {
    out.push_back({{"check_id", c.check_id},
                   {"params", c.params},
                   {"status", to_string(c.status)},
                   {"residual", c.residual},
                   {"elapsed_ms", c.elapsed_ms}});
  }
  return out.dump(1) + "\n";
}

std::vector<Certificate> certificates_from_json(const std::string& text) {
  std::vector<Certificate> out;
  try {
    json in = json::parse(text);
    if (!in.is_array()) throw ParseError("certificate file is not a JSON array", 1, 1);
    for (const auto& j : in) {
      Certificate c;
      c.check_id = j.at("check_id").get<std::string>();
      c.params = j.at("params").get<std::map<std::string, std::string>>();
      const std::string status = j.at("status").get<std::string>();
      if (status == "PASS") c.status = Status::Pass;
      else if (status == "FAIL") c.status = Status::Fail;
      else if (status == "UNDEFINED") c.status = Status::Undefined;
      else throw ParseError("unknown status '" + status + "' in " + c.check_id, 1, 1);
      c.residual = j.at("residual").get<std::string>();
      c.elapsed_ms = j.at("elapsed_ms").get<long>();
      out.push_back(std::move(c));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad certificate JSON: ") + e.what(), 1, 1);
  }
  return out;
}

void save_certificates(const std::vector<Certificate>& certs, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw Error("cannot open " + path + " for writing");
  f << certificates_to_json(certs);
  if (!f.flush()) throw Error("write to " + path + " failed");
}

std::vector<Certificate> load_certificates(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return certificates_from_json(buf.str());
}

namespace {

std::string lemma_of(const Certificate& c) {
  if (auto it = c.params.find("lemma"); it != c.params.end()) return it->second;
  auto dot = c.check_id.find('.', c.check_id.find('.') + 1);
  return c.check_id.substr(0, dot);
}

std::string clip(std::string s, std::size_t width) {
  if (s.size() > width) s = s.substr(0, width - 3) + "...";
  return s;
}

}  // namespace

std::string report(const std::vector<Certificate>& certs) {
  std::ostringstream os;
  auto row = [&](const std::string& lemma, const std::string& status, const std::string& checks,
                 const std::string& detail) {
    os << std::left << std::setw(26) << lemma << std::setw(10) << status << std::setw(8) << checks << detail << "\n";
  };
  row("LEMMA", "STATUS", "CHECKS", "DETAIL");

  std::vector<const Certificate*> sorted;
  for (const auto& c : certs) sorted.push_back(&c);
  std::stable_sort(sorted.begin(), sorted.end(), [](const Certificate* a, const Certificate* b) {
    return natural_less(a->check_id, b->check_id);
  });
  for (Status s : {Status::Fail, Status::Undefined}) {
    for (const auto* c : sorted)
      if (c->status == s) row(lemma_of(*c), to_string(s), "1", c->check_id + ": " + clip(c->residual, 160));
  }
  // One PASS row per lemma, in order of first appearance.
  std::vector<std::string> order;
  std::map<std::string, std::pair<std::size_t, long>> tally;
  for (const auto* c : sorted) {
    if (c->status != Status::Pass) continue;
    const std::string l = lemma_of(*c);
    if (!tally.count(l)) order.push_back(l);
    tally[l].first += 1;
    tally[l].second += c->elapsed_ms;
  }
  for (const auto& l : order)
    row(l, "PASS", std::to_string(tally[l].first), std::to_string(tally[l].second) + " ms");
  return os.str();
}

}  // namespace h10m::verify
