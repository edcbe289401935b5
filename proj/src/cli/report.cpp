#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "gastba/cli.hpp"

namespace gastba::cli {
namespace {

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

void emit(const nlohmann::json& v, std::string& out) {
  using T = nlohmann::json::value_t;
  switch (v.type()) {
    case T::null:
    case T::discarded:
      out += "null";
      break;
    case T::boolean:
      out += v.get<bool>() ? "true" : "false";
      break;
    case T::number_integer:
      out += std::to_string(v.get<std::int64_t>());
      break;
    case T::number_unsigned:
      out += std::to_string(v.get<std::uint64_t>());
      break;
    case T::number_float:
      out += format_double(v.get<double>());
      break;
    case T::string:
    case T::binary:
      out += v.dump();
      break;
    case T::array: {
      out += '[';
      bool first = true;
      for (const auto& e : v) {
        if (!first) out += ',';
        first = false;
        emit(e, out);
      }
      out += ']';
      break;
    }
    case T::object: {
      // nlohmann::json stores objects in a std::map, so iteration is key-sorted
      out += '{';
      bool first = true;
      for (const auto& [k, e] : v.items()) {
        if (!first) out += ',';
        first = false;
        out += nlohmann::json(k).dump();
        out += ':';
        emit(e, out);
      }
      out += '}';
      break;
    }
  }
}

void flatten(const std::string& prefix, const nlohmann::json& v, std::map<std::string, std::string>& cells) {
  if (v.is_object()) {
    for (const auto& [k, e] : v.items()) flatten(prefix.empty() ? k : prefix + "." + k, e, cells);
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(prefix + "_" + std::to_string(i), v[i], cells);
  } else if (v.is_null()) {
    cells[prefix] = "";
  } else if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) {
      cells[prefix] = s;
    } else {
      std::string q = "\"";
      for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
      cells[prefix] = q + "\"";
    }
  } else {
    std::string s;
    emit(v, s);
    cells[prefix] = (s == "null") ? "" : s;
  }
}

std::string table(const std::vector<std::map<std::string, std::string>>& rows) {
  std::set<std::string> header;
  for (const auto& r : rows)
    for (const auto& [k, _] : r) header.insert(k);
  std::string out;
  bool first = true;
  for (const auto& h : header) {
    if (!first) out += ',';
    first = false;
    out += h;
  }
  out += '\n';
  for (const auto& r : rows) {
    first = true;
    for (const auto& h : header) {
      if (!first) out += ',';
      first = false;
      const auto it = r.find(h);
      if (it != r.end()) out += it->second;
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::string render_json(const Report& report) {
  std::string out;
  emit(report, out);
  out += '\n';
  return out;
}

std::string render_csv(const Report& report) {
  std::vector<std::map<std::string, std::string>> rows;
  if (report.is_object() && report.contains("rows") && report["rows"].is_array()) {
    for (const auto& r : report["rows"]) {
      std::map<std::string, std::string> cells;
      flatten("", r, cells);
      rows.push_back(std::move(cells));
    }
    if (rows.empty()) return "\n";
  } else {
    std::map<std::string, std::string> cells;
    flatten("", report, cells);
    rows.push_back(std::move(cells));
  }
  return table(rows);
}

std::string render_report(const Report& report, Format format) {
  return format == Format::json ? render_json(report) : render_csv(report);
}

void write_report(const Report& report, Format format, std::ostream& out) {
  out << render_report(report, format);
  out.flush();
  if (!out) throw IoError("failed to write report");
}

}  // namespace gastba::cli
