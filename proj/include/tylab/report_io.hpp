#pragma once

// Machine-readable output.  Numbers are serialized with a fixed
// 17-significant-digit format so identical runs produce byte-identical
// reports; CSV uses '.' decimals regardless of locale.

#include "tylab/invariants.hpp"
#include "tylab/yamabe_flow.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace tylab {

// Shortest-fixed formatting is deliberately avoided: %.17g round-trips
// every finite double and is stable across standard libraries.
std::string format_double(double v);

// Minimal streaming JSON writer preserving insertion order.  Values
// outside the finite range serialize as null.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& k);
  JsonWriter& value(double v);
  JsonWriter& value(int v);
  JsonWriter& value(std::uint64_t v);
  JsonWriter& value(const std::string& v);
  JsonWriter& value(const char* v);
  JsonWriter& value(bool v);
  JsonWriter& value(const std::vector<double>& v);

  const std::string& str() const { return out_; }

 private:
  void separate();

  std::string out_;
  // Tracks whether the current aggregate already holds an element, one
  // flag per nesting level.
  std::vector<bool> has_element_{false};
  bool pending_key_ = false;
};

// Report body of an invariance sweep (no envelope; the CLI wraps it with
// schema and config fields).
void write_report(JsonWriter& jw, const InvariantReport& report);
std::string to_json(const InvariantReport& report);

// Trace CSV with header step,J2,sup_residual,r,invariant.
void write_flow_csv(std::ostream& os, const FlowTrace& trace);

// Profile CSV with header t,value.
void write_profile_csv(std::ostream& os, const BasicFunction& f);

}  // namespace tylab
