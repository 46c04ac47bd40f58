#include "tvb/report.hpp"

#include <json.hpp>
#include <sstream>

#include "tvb/bounds.hpp"

namespace tvb {

namespace {

using nlohmann::json;

json clauses_json(const BoundsVerdict& v) {
  json arr = json::array();
  for (const auto& c : v.clauses) {
    arr.push_back({{"clause", c.clause},
                   {"applicable", c.applicable},
                   {"conditional", c.conditional},
                   {"passed", c.passed},
                   {"note", c.note}});
  }
  return arr;
}

json base_json(const CountReport& r, const std::string& command_echo, bool with_timing) {
  json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command_echo;
  j["mode"] = mode_name(r.mode);
  j["dim"] = r.dim;
  j["blocks"] = r.blocks;
  j["fingerprint"] = r.fingerprint;
  j["seed"] = r.seed;
  j["count"] = r.count.get_str();  // decimal string: counts outgrow JSON numbers
  if (with_timing) {
    j["elapsed_ms"] = r.elapsed_ms;
    j["nodes"] = r.nodes;
    j["feasibility_checks"] = r.feas_checks;
    j["lp_calls"] = r.lp_calls;
    j["pruned"] = r.pruned;
  }
  return j;
}

}  // namespace

std::string csv_report(const std::vector<SeedResult>& rows) {
  std::ostringstream os;
  os << "seed,count,even_ok,bound_ok,fingerprint,elapsed_ms\n";
  for (const auto& r : rows) {
    os << r.seed << ',' << r.count.get_str() << ',' << (r.even_ok ? 1 : 0) << ','
       << (r.bound_ok ? 1 : 0) << ',' << r.fingerprint << ",0\n";
  }
  return os.str();
}

std::string csv_report(const CountReport& r, const BoundsVerdict& v) {
  SeedResult row;
  row.seed = r.seed;
  row.count = r.count;
  row.even_ok = evenness_ok(v);
  row.bound_ok = lower_bounds_ok(v);
  row.fingerprint = r.fingerprint;
  return csv_report(std::vector<SeedResult>{row});
}

std::string json_report(const CountReport& r, const BoundsVerdict& v,
                        const std::string& command_echo, bool with_timing) {
  json j = base_json(r, command_echo, with_timing);
  j["clauses"] = clauses_json(v);
  j["ok"] = v.ok();
  if (r.partitions) {
    json arr = json::array();
    for (const auto& p : *r.partitions) arr.push_back(p.str());
    j["partitions"] = arr;
  }
  return j.dump(2) + "\n";
}

std::string json_report(const ScanSummary& s, const std::string& command_echo,
                        bool with_timing) {
  json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command_echo;
  json rows = json::array();
  for (const auto& r : s.rows) {
    json row = {{"seed", r.seed},
                {"count", r.count.get_str()},
                {"even_ok", r.even_ok},
                {"bound_ok", r.bound_ok},
                {"fingerprint", r.fingerprint}};
    if (with_timing) row["elapsed_ms"] = r.elapsed_ms;
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["min_count"] = s.min_count.get_str();
  j["max_count"] = s.max_count.get_str();
  j["parity_violations"] = s.parity_violations;
  j["bound_violations"] = s.bound_violations;
  j["min_witness"] = {{"seed", s.min_seed},
                      {"fingerprint", s.min_fingerprint},
                      {"config", s.min_config_text}};
  if (!s.note.empty()) j["note"] = s.note;
  return j.dump(2) + "\n";
}

std::string table_report(const CountReport& r, const BoundsVerdict& v) {
  std::ostringstream os;
  os << "mode         " << mode_name(r.mode) << "  d=" << r.dim << "  blocks=" << r.blocks
     << "\n";
  os << "fingerprint  " << r.fingerprint << "\n";
  os << "count        " << r.count.get_str() << "\n";
  os << "clauses\n";
  for (const auto& c : v.clauses) {
    os << "  " << c.clause;
    for (size_t pad = c.clause.size(); pad < 14; ++pad) os << ' ';
    if (!c.applicable) {
      os << "n/a         " << c.note << "\n";
      continue;
    }
    os << (c.passed ? "pass        " : "FAIL        ") << c.note << "\n";
  }
  os << "verdict      " << (v.ok() ? "ok" : "VIOLATION") << "\n";
  if (r.partitions) {
    os << "partitions   " << r.partitions->size() << "\n";
    for (const auto& p : *r.partitions) os << "  " << p.str() << "\n";
  }
  return os.str();
}

std::string table_report(const ScanSummary& s) {
  std::ostringstream os;
  os << "seeds        " << s.rows.size() << "\n";
  os << "min count    " << s.min_count.get_str() << "  (seed " << s.min_seed << ", fingerprint "
     << s.min_fingerprint << ")\n";
  os << "max count    " << s.max_count.get_str() << "\n";
  os << "parity violations  " << s.parity_violations.size() << "\n";
  os << "bound violations   " << s.bound_violations.size() << "\n";
  if (!s.note.empty()) os << "note         " << s.note << "\n";
  return os.str();
}

}  // namespace tvb
