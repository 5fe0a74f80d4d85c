#pragma once

#include <cstddef>
#include <istream>
#include <vector>

#include "rcf/paths.hpp"

namespace rcf {

// One trade/quote observation. Timestamps are seconds since the session
// open; the parser converts clock times (HH:MM:SS) using the schema's
// session_open.
struct TickRecord {
  double timestamp = 0.0;
  double price = 0.0;
};

struct TickSchema {
  int time_column = -1;    // -1 = resolve by header name ("time"/"timestamp")
  int price_column = -1;   // -1 = resolve by header name ("price")
  bool has_header = true;
  double session_open = 9.5 * 3600.0;  // seconds since midnight (09:30)
};

struct TickParseResult {
  std::vector<TickRecord> records;   // sorted by timestamp, duplicates keep
                                     // the last occurrence in file order
  std::size_t out_of_order = 0;      // rows that arrived behind their
                                     // predecessor before sorting
};

// Parses a tick CSV. Time fields containing ':' are clock times
// (HH:MM:SS[.fff]); anything else is seconds since the open. Row-level
// problems throw with the 1-based line number in the message.
TickParseResult parse_ticks_csv(std::istream& in, const TickSchema& schema);

// Previous-tick resampling onto a regular grid: interval_seconds must divide
// session_seconds into at least 8 intervals. Time is normalized so one
// standard 6.5-hour session spans 1.0.
struct SamplingRule {
  double interval_seconds = 20.0;
  double session_seconds = 6.5 * 3600.0;
};

// Grid value at t_i = i * interval is the log price of the last tick at or
// before t_i; the sampler never looks ahead. Every grid point, including
// t_0 = 0, must have a tick at or before it (so the file needs a record at
// or before the session open), otherwise "grid point before first tick".
PricePath resample(const std::vector<TickRecord>& records,
                   const SamplingRule& rule);

}  // namespace rcf
