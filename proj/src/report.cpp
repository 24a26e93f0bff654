#include "dini/report.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "dini/errors.hpp"
#include "json.hpp"

namespace dini {

namespace {

using nlohmann::json;

std::string number(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0.0) return "0";  // "-0" would read back as the integer 0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::null: out += "null"; break;
    case json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
    case json::value_t::number_integer: out += std::to_string(j.get<std::int64_t>()); break;
    case json::value_t::number_unsigned: out += std::to_string(j.get<std::uint64_t>()); break;
    case json::value_t::number_float: out += number(j.get<double>()); break;
    case json::value_t::string: out += j.dump(); break;
    case json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += ',';
        first = false;
        write(e, out);
      }
      out += ']';
      break;
    }
    case json::value_t::object: {
      // nlohmann's default object is a std::map, so iteration is key-sorted
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        write(it.value(), out);
      }
      out += '}';
      break;
    }
    default: throw DomainError("unsupported JSON value");
  }
}

std::string canonical(const json& j) {
  std::string out;
  write(j, out);
  return out;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json to_json(const Environment& env) {
  return json{{"cm_max_order", env.cm_max_order},
              {"cm_step", env.cm_step},
              {"epsilon_rel", env.epsilon_rel},
              {"nu_grid", env.nu_grid},
              {"slack", env.slack},
              {"version", env.version},
              {"x_max", env.x_max},
              {"zero_rel_tol", env.zero_rel_tol}};
}

json to_json(const CheckOutcome& o) {
  json j{{"id", o.id},
         {"note", o.note},
         {"pass", o.pass},
         {"points_tested", o.points_tested},
         {"strict", o.strict},
         {"witness", json{{"nu", o.witness.nu}, {"x", o.witness.x}}},
         {"worst_margin", finite_or_null(o.worst_margin)}};
  if (!o.error.empty()) j["error"] = o.error;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string report_to_json(const Report& report) {
  json outcomes = json::array();
  for (const auto& o : report.outcomes) outcomes.push_back(to_json(o));
  const json j{{"all_pass", report.all_pass},
               {"environment", to_json(report.environment)},
               {"outcomes", outcomes},
               {"profile", to_string(report.profile)},
               {"version", report.environment.version}};
  return canonical(j) + "\n";
}

std::string report_to_csv(const Report& report) {
  std::string out = "id,pass,worst_margin,witness_nu,witness_x,points_tested,strict,note,error\n";
  for (const auto& o : report.outcomes) {
    out += csv_field(o.id) + ',' + (o.pass ? "true" : "false") + ',' + number(o.worst_margin) +
           ',' + number(o.witness.nu) + ',' + number(o.witness.x) + ',' +
           std::to_string(o.points_tested) + ',' + (o.strict ? "true" : "false") + ',' +
           csv_field(o.note) + ',' + csv_field(o.error) + '\n';
  }
  return out;
}

std::string report_to_text(const Report& report) {
  std::ostringstream os;
  char line[256];
  for (const auto& o : report.outcomes) {
    std::snprintf(line, sizeof line, "%-10s %s  worst %+.3e at nu=%g x=%.6g  points %d%s  %.3fs",
                  o.id.c_str(), o.pass ? "PASS" : "FAIL", o.worst_margin, o.witness.nu,
                  o.witness.x, o.points_tested, o.strict ? "  strict" : "", o.elapsed_seconds);
    os << line << '\n';
    if (!o.error.empty()) os << "           error: " << o.error << '\n';
    if (!o.note.empty()) os << "           note: " << o.note << '\n';
  }
  int passed = 0;
  for (const auto& o : report.outcomes) passed += o.pass ? 1 : 0;
  os << passed << "/" << report.outcomes.size() << " checks pass (" << to_string(report.profile)
     << " profile)\n";
  return os.str();
}

std::string canonicalize_json(const std::string& text) {
  try {
    return canonical(json::parse(text)) + (text.ends_with('\n') ? "\n" : "");
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
}

std::string zero_table_to_json(const ZeroTable& table) {
  const json j{{"count", table.count()},
               {"nu", table.nu.value()},
               {"rayleigh_residual", table.kind == ZeroKind::dini
                                         ? finite_or_null(table.rayleigh_residual)
                                         : json(nullptr)},
               {"zeros", table.zeros}};
  return canonical(j) + "\n";
}

GoldenZeros golden_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    GoldenZeros g;
    g.nu = j.at("nu").get<double>();
    g.count = j.at("count").get<int>();
    g.zeros = j.at("zeros").get<std::vector<double>>();
    const auto& r = j.at("rayleigh_residual");
    g.rayleigh_residual = r.is_null() ? std::numeric_limits<double>::quiet_NaN() : r.get<double>();
    if (static_cast<int>(g.zeros.size()) != g.count) {
      throw DomainError("golden file count does not match its zero list");
    }
    return g;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed golden file: ") + e.what());
  }
}

double golden_mismatch(const ZeroTable& table, const GoldenZeros& golden) {
  if (table.nu.value() != golden.nu || table.count() != golden.count) {
    return std::numeric_limits<double>::infinity();
  }
  double worst = 0.0;
  for (int i = 0; i < golden.count; ++i) {
    worst = std::max(worst, std::fabs(table.zeros[i] - golden.zeros[i]) / golden.zeros[i]);
  }
  return worst;
}

}  // namespace dini
