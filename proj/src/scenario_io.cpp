#include "specneg/scenario_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace specneg {

using nlohmann::json;

std::vector<PuProfile> make_pus(const std::vector<std::pair<ChannelCount, Currency>>& data) {
  std::vector<PuProfile> out;
  out.reserve(data.size());
  std::uint32_t k = 0;
  for (const auto& [free, price] : data) out.push_back(PuProfile{AgentId::pu(++k), free, price});
  return out;
}

std::optional<std::string> scenario_violation(const Scenario& s) {
  if (s.pus.empty()) return "empty pus";
  if (s.demand.nbc < 1) return "nbc >= 1 required, got " + std::to_string(s.demand.nbc);
  for (std::size_t i = 0; i < s.pus.size(); ++i) {
    const auto& p = s.pus[i];
    const std::string who = "pus[" + std::to_string(i) + "]";
    if (p.id.is_su() || p.id.index() != i + 1) {
      return who + " must be PU" + std::to_string(i + 1) + ", got " + p.id.to_string();
    }
    if (p.free_channels < 0) return who + ": free_channels >= 0 required";
    if (p.unit_price <= 0) return who + ": unit_price > 0 required";
    if (p.unit_price > std::numeric_limits<Currency>::max() / s.demand.nbc) {
      return who + ": unit_price * nbc overflows";
    }
  }
  const auto& l = s.latency;
  if (!std::isfinite(l.transit_delay) || !std::isfinite(l.pu_proc_delay) ||
      !std::isfinite(l.su_proc_delay)) {
    return "latency delays must be finite";
  }
  if (l.transit_delay <= 0) return "latency.transit > 0 required";
  if (l.pu_proc_delay < 0) return "latency.pu_proc >= 0 required";
  if (l.su_proc_delay < 0) return "latency.su_proc >= 0 required";
  return std::nullopt;
}

namespace {

[[noreturn]] void semantic(const std::string& what) {
  throw ParseError(ParseError::Kind::kSemantic, what);
}

std::int64_t require_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) semantic(what + " must be an integer");
  if (j.is_number_unsigned() &&
      j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    semantic(what + " out of range");
  }
  return j.get<std::int64_t>();
}

double require_real(const json& j, const std::string& what) {
  if (!j.is_number()) semantic(what + " must be a number");
  return j.get<double>();
}

void reject_unknown(const json& obj, std::initializer_list<std::string_view> known,
                    const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    bool found = false;
    for (auto k : known) found = found || key == k;
    if (!found) semantic("unknown key \"" + key + "\" in " + where);
  }
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  // nlohmann reports the 1-based byte offset of the offending character.
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    throw ParseError(ParseError::Kind::kSyntax,
                     "syntax error at line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ": " + e.what(),
                     line, col);
  }

  if (!doc.is_object()) semantic("scenario must be a JSON object");
  reject_unknown(doc, {"pus", "nbc", "latency", "payment_mode", "seed"}, "scenario");

  Scenario s;
  if (!doc.contains("pus")) semantic("missing \"pus\"");
  const json& pus = doc["pus"];
  if (!pus.is_array()) semantic("\"pus\" must be an array");
  if (pus.empty()) semantic("empty pus");
  std::vector<std::pair<ChannelCount, Currency>> data;
  for (std::size_t i = 0; i < pus.size(); ++i) {
    const std::string where = "pus[" + std::to_string(i) + "]";
    const json& entry = pus[i];
    if (!entry.is_array() || entry.size() != 2) semantic(where + " must be [free_channels, unit_price]");
    data.emplace_back(require_int(entry[0], where + ".free_channels"),
                      require_int(entry[1], where + ".unit_price"));
  }
  s.pus = make_pus(data);

  if (!doc.contains("nbc")) semantic("missing \"nbc\"");
  s.demand.nbc = require_int(doc["nbc"], "nbc");

  if (doc.contains("latency")) {
    const json& lat = doc["latency"];
    if (!lat.is_object()) semantic("\"latency\" must be an object");
    reject_unknown(lat, {"transit", "pu_proc", "su_proc"}, "latency");
    if (lat.contains("transit")) s.latency.transit_delay = require_real(lat["transit"], "latency.transit");
    if (lat.contains("pu_proc")) s.latency.pu_proc_delay = require_real(lat["pu_proc"], "latency.pu_proc");
    if (lat.contains("su_proc")) s.latency.su_proc_delay = require_real(lat["su_proc"], "latency.su_proc");
  }

  if (doc.contains("payment_mode")) {
    const json& mode = doc["payment_mode"];
    if (mode == "unit") {
      s.payment_mode = PaymentMode::kUnitPrice;
    } else if (mode == "total") {
      s.payment_mode = PaymentMode::kTotalPrice;
    } else {
      semantic("payment_mode must be \"unit\" or \"total\"");
    }
  }

  if (doc.contains("seed")) {
    const json& seed = doc["seed"];
    if (!seed.is_number_unsigned()) semantic("seed must be a nonnegative integer");
    s.seed = seed.get<std::uint64_t>();
  }

  if (auto why = scenario_violation(s)) semantic(*why);
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open scenario file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string serialize_scenario(const Scenario& s) {
  json pus = json::array();
  for (const auto& p : s.pus) pus.push_back({p.free_channels, p.unit_price});
  json doc;
  doc["pus"] = pus;
  doc["nbc"] = s.demand.nbc;
  doc["latency"] = {{"transit", s.latency.transit_delay},
                    {"pu_proc", s.latency.pu_proc_delay},
                    {"su_proc", s.latency.su_proc_delay}};
  doc["payment_mode"] = s.payment_mode == PaymentMode::kTotalPrice ? "total" : "unit";
  doc["seed"] = s.seed;
  return doc.dump() + "\n";
}

std::string format_fixed3(double v) {
  char buf[64];
  const int n = std::snprintf(buf, sizeof buf, "%.3f", v);
  if (n < 0 || static_cast<std::size_t>(n) >= sizeof buf) {
    throw std::range_error("value too large to format");
  }
  return std::string(buf, static_cast<std::size_t>(n));
}

std::size_t write_trace(const std::vector<TraceRecord>& records, std::ostream& sink) {
  std::size_t bytes = 0;
  for (const auto& r : records) {
    std::string line;
    line += "{\"t\":\"" + format_fixed3(r.time) + "\"";
    line += ",\"from\":" + json(r.from.to_string()).dump();
    line += ",\"to\":" + json(r.to.to_string()).dump();
    line += ",\"perf\":\"" + std::string(to_string(r.performative)) + "\"";
    line += ",\"body\":" + json(r.body_summary).dump();
    line += "}\n";
    sink.write(line.data(), static_cast<std::streamsize>(line.size()));
    if (!sink) throw std::runtime_error("trace sink write failed");
    bytes += line.size();
  }
  return bytes;
}

std::string write_csv(const std::vector<std::string>& header, const std::vector<CsvRow>& rows) {
  std::string out;
  auto field = [](const std::string& f) {
    if (f.find_first_of(",\"\n\r") == std::string::npos) return f;
    std::string quoted = "\"";
    for (char c : f) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  };
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += ',';
    out += field(header[i]);
  }
  out += '\n';

  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != header.size()) {
      throw ArityMismatch("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                          " fields, header has " + std::to_string(header.size()));
    }
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      if (i) out += ',';
      const auto& cell = rows[r][i];
      if (const auto* n = std::get_if<std::int64_t>(&cell)) {
        out += std::to_string(*n);
      } else {
        out += format_fixed3(std::get<double>(cell));
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace specneg
