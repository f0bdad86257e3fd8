#include "symdefect/study/csv.hpp"

#include <cmath>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace symdefect::study {

namespace {

std::string num(double x) { return std::isnan(x) ? std::string() : fmt::format("{:.16e}", x); }

std::string short_num(double x) { return std::isnan(x) ? "-" : fmt::format("{:.3e}", x); }

std::string short_order(double x) { return std::isnan(x) ? "" : fmt::format("{:.2f}", x); }

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse(const std::string& s) {
  if (s.empty()) return std::numeric_limits<double>::quiet_NaN();
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) throw std::runtime_error("csv: bad number '" + s + "'");
  return v;
}

template <typename Row, typename Fill>
std::vector<Row> read_rows(std::istream& is, const std::string& header, std::size_t fields,
                           Fill fill) {
  std::string line;
  if (!std::getline(is, line) || line != header) {
    throw std::runtime_error("csv: unexpected header '" + line + "'");
  }
  std::vector<Row> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != fields) throw std::runtime_error("csv: wrong field count in '" + line + "'");
    rows.push_back(fill(f));
  }
  return rows;
}

const std::string kLocalHeader = "tau,err_norm,err_order,dev_norm,dev_order,status";
const std::string kGlobalHeader =
    "tau,global_err,global_order,corrected_err,corrected_order,status";
const std::string kTraceHeader = "t,tau,est_norm,accepted";

bool parse_status(const std::string& s) {
  if (s == "ok") return false;
  if (s == "failed") return true;
  throw std::runtime_error("csv: bad status '" + s + "'");
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows) {
  os << kLocalHeader << '\n';
  for (const auto& r : rows) {
    os << num(r.tau) << ',' << num(r.err_norm) << ',' << num(r.err_order) << ','
       << num(r.dev_norm) << ',' << num(r.dev_order) << ',' << (r.failed ? "failed" : "ok")
       << '\n';
  }
}

void write_csv(std::ostream& os, const std::vector<GlobalRow>& rows) {
  os << kGlobalHeader << '\n';
  for (const auto& r : rows) {
    os << num(r.tau) << ',' << num(r.global_err) << ',' << num(r.global_order) << ','
       << num(r.corrected_err) << ',' << num(r.corrected_order) << ','
       << (r.failed ? "failed" : "ok") << '\n';
  }
}

void write_csv(std::ostream& os, const std::vector<control::TraceEntry>& trace) {
  os << kTraceHeader << '\n';
  for (const auto& e : trace) {
    os << num(e.t) << ',' << num(e.tau) << ',' << num(e.est_norm) << ',' << (e.accepted ? 1 : 0)
       << '\n';
  }
}

std::vector<ConvergenceRow> read_local_csv(std::istream& is) {
  return read_rows<ConvergenceRow>(is, kLocalHeader, 6, [](const auto& f) {
    ConvergenceRow r;
    r.tau = parse(f[0]);
    r.err_norm = parse(f[1]);
    r.err_order = parse(f[2]);
    r.dev_norm = parse(f[3]);
    r.dev_order = parse(f[4]);
    r.failed = parse_status(f[5]);
    return r;
  });
}

std::vector<GlobalRow> read_global_csv(std::istream& is) {
  return read_rows<GlobalRow>(is, kGlobalHeader, 6, [](const auto& f) {
    GlobalRow r;
    r.tau = parse(f[0]);
    r.global_err = parse(f[1]);
    r.global_order = parse(f[2]);
    r.corrected_err = parse(f[3]);
    r.corrected_order = parse(f[4]);
    r.failed = parse_status(f[5]);
    return r;
  });
}

std::vector<control::TraceEntry> read_trace_csv(std::istream& is) {
  return read_rows<control::TraceEntry>(is, kTraceHeader, 4, [](const auto& f) {
    control::TraceEntry e;
    e.t = parse(f[0]);
    e.tau = parse(f[1]);
    e.est_norm = parse(f[2]);
    if (f[3] != "0" && f[3] != "1") throw std::runtime_error("csv: bad accepted flag");
    e.accepted = f[3] == "1";
    return e;
  });
}

std::string format_table(const std::vector<ConvergenceRow>& rows) {
  std::string out = fmt::format("{:>10}  {:>10}  {:>6}  {:>10}  {:>6}\n", "tau", "|L|", "order",
                                "|Lt - L|", "order");
  for (const auto& r : rows) {
    out += fmt::format("{:>10}  {:>10}  {:>6}  {:>10}  {:>6}{}\n", short_num(r.tau),
                       short_num(r.err_norm), short_order(r.err_order), short_num(r.dev_norm),
                       short_order(r.dev_order), r.failed ? "  FAILED: " + r.message : "");
  }
  return out;
}

std::string format_table(const std::vector<GlobalRow>& rows) {
  std::string out = fmt::format("{:>10}  {:>12}  {:>6}  {:>12}  {:>6}\n", "tau", "global err",
                                "order", "corrected", "order");
  for (const auto& r : rows) {
    out += fmt::format("{:>10}  {:>12}  {:>6}  {:>12}  {:>6}{}\n", short_num(r.tau),
                       short_num(r.global_err), short_order(r.global_order),
                       short_num(r.corrected_err), short_order(r.corrected_order),
                       r.failed ? "  FAILED: " + r.message : "");
  }
  return out;
}

std::string format_table(const std::vector<control::TraceEntry>& trace) {
  std::string out = fmt::format("{:>12}  {:>10}  {:>10}  {}\n", "t", "tau", "est", "accepted");
  for (const auto& e : trace) {
    out += fmt::format("{:>12.6f}  {:>10}  {:>10}  {}\n", e.t, short_num(e.tau),
                       short_num(e.est_norm), e.accepted ? "yes" : "no");
  }
  return out;
}

}  // namespace symdefect::study
