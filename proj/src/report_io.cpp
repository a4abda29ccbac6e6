#include "tylab/report_io.hpp"

#include <cmath>
#include <cstdio>

namespace tylab {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void JsonWriter::separate() {
  if (pending_key_) {
    pending_key_ = false;
    return;
  }
  if (has_element_.back()) out_ += ',';
  has_element_.back() = true;
}

JsonWriter& JsonWriter::begin_object() {
  separate();
  out_ += '{';
  has_element_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  has_element_.pop_back();
  out_ += '}';
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  separate();
  out_ += '[';
  has_element_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  has_element_.pop_back();
  out_ += ']';
  return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
  separate();
  out_ += '"';
  out_ += k;  // keys are identifier-like, no escaping needed
  out_ += "\":";
  pending_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  separate();
  out_ += std::isfinite(v) ? format_double(v) : "null";
  return *this;
}

JsonWriter& JsonWriter::value(int v) {
  separate();
  out_ += std::to_string(v);
  return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t v) {
  separate();
  out_ += std::to_string(v);
  return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
  separate();
  out_ += '"';
  for (char c : v) {
    switch (c) {
      case '"': out_ += "\\\""; break;
      case '\\': out_ += "\\\\"; break;
      case '\n': out_ += "\\n"; break;
      case '\t': out_ += "\\t"; break;
      default: out_ += c;
    }
  }
  out_ += '"';
  return *this;
}

JsonWriter& JsonWriter::value(const char* v) { return value(std::string(v)); }

JsonWriter& JsonWriter::value(bool v) {
  separate();
  out_ += v ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::value(const std::vector<double>& v) {
  begin_array();
  for (double x : v) value(x);
  return end_array();
}

void write_report(JsonWriter& jw, const InvariantReport& report) {
  jw.begin_object();
  jw.key("weights").begin_array().value(report.a1).value(report.a2).end_array();
  jw.key("trials").value(report.trials);
  jw.key("seed").value(report.seed);
  jw.key("nodes").value(report.nodes);
  jw.key("closed_form").value(report.closed_form);
  jw.key("samples").begin_array();
  for (const InvariantSample& s : report.samples) {
    jw.begin_object();
    jw.key("trial").value(s.trial);
    jw.key("coefficients").value(s.coefficients);
    jw.key("value").value(s.value);
    jw.end_object();
  }
  jw.end_array();
  jw.key("max_abs_deviation").value(report.max_abs_deviation);
  jw.key("max_rel_deviation").value(report.max_rel_deviation);
  jw.end_object();
}

std::string to_json(const InvariantReport& report) {
  JsonWriter jw;
  write_report(jw, report);
  return jw.str();
}

void write_flow_csv(std::ostream& os, const FlowTrace& trace) {
  os << "step,J2,sup_residual,r,invariant\n";
  for (const FlowRecord& rec : trace.steps) {
    os << rec.step << ',' << format_double(rec.j2) << ','
       << format_double(rec.sup_residual) << ',' << format_double(rec.r) << ','
       << format_double(rec.invariant) << '\n';
  }
}

void write_profile_csv(std::ostream& os, const BasicFunction& f) {
  os << "t,value\n";
  for (int i = 0; i < f.grid->size(); ++i) {
    os << format_double(f.grid->nodes()[i]) << ',' << format_double(f.values[i]) << '\n';
  }
}

}  // namespace tylab
