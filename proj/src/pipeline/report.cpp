#include "pipeline/report.hpp"

#include <sstream>

namespace logvec {

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

std::string inline_array(const Json& j) {
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) s += ", ";
    s += j[i].is_array() ? inline_array(j[i]) : scalar_text(j[i]);
  }
  return s + "]";
}

bool flat_array(const Json& j) {
  for (const auto& e : j)
    if (e.is_object() || (e.is_array() && !flat_array(e))) return false;
  return true;
}

void render(std::ostringstream& os, const Json& j, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    if (it.key() == "checks" && v.is_array()) {
      os << pad << "checks:\n";
      for (const auto& c : v) {
        os << pad << "  [" << (c.value("pass", false) ? "PASS" : "FAIL") << "] " << c.value("name", "");
        std::string detail = c.value("detail", "");
        if (!detail.empty()) os << "  (" << detail << ")";
        os << '\n';
      }
    } else if (is_scalar(v)) {
      os << pad << it.key() << ": " << scalar_text(v) << '\n';
    } else if (v.is_array() && v.size() > 0 && v[0].is_array()) {
      os << pad << it.key() << ":\n";
      for (const auto& e : v) os << pad << "  - " << inline_array(e) << '\n';
    } else if (v.is_array() && flat_array(v)) {
      os << pad << it.key() << ": " << inline_array(v) << '\n';
    } else if (v.is_array()) {
      os << pad << it.key() << ":\n";
      for (const auto& e : v) {
        os << pad << "  -\n";
        render(os, e, indent + 4);
      }
    } else {
      os << pad << it.key() << ":\n";
      render(os, v, indent + 2);
    }
  }
}

void diff(const Json& a, const Json& b, const std::string& path, std::vector<std::string>& out) {
  if (a.is_object() && b.is_object()) {
    for (auto it = a.begin(); it != a.end(); ++it) {
      if (it.key() == "timings") continue;
      std::string p = path + "/" + it.key();
      if (!b.contains(it.key()))
        out.push_back(p + " missing");
      else
        diff(it.value(), b.at(it.key()), p, out);
    }
    for (auto it = b.begin(); it != b.end(); ++it)
      if (it.key() != "timings" && !a.contains(it.key())) out.push_back(path + "/" + it.key() + " unexpected");
    return;
  }
  if (a.is_array() && b.is_array() && a.size() == b.size()) {
    for (std::size_t i = 0; i < a.size(); ++i) diff(a[i], b[i], path + "/" + std::to_string(i), out);
    return;
  }
  if (a != b) out.push_back(path + ": expected " + a.dump() + ", got " + b.dump());
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  render(os, report, 0);
  return os.str();
}

Json without_timings(Json report) {
  if (report.is_object()) {
    report.erase("timings");
    for (auto& [k, v] : report.items()) v = without_timings(v);
  } else if (report.is_array()) {
    for (auto& v : report) v = without_timings(v);
  }
  return report;
}

std::string to_json_text(const Json& report, bool include_timings) {
  return (include_timings ? report : without_timings(report)).dump(2) + "\n";
}

std::vector<std::string> report_differences(const Json& expected, const Json& actual) {
  std::vector<std::string> out;
  diff(expected, actual, "", out);
  return out;
}

}  // namespace logvec
