#include "rcf/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rcf {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

std::string lower(std::string s) {
  for (char& ch : s) ch = static_cast<char>(std::tolower(ch));
  return s;
}

double parse_double(const std::string& field, std::size_t line_no,
                    const char* what) {
  try {
    std::size_t used = 0;
    const double value = std::stod(field, &used);
    if (used != field.size()) throw std::invalid_argument(field);
    return value;
  } catch (const std::exception&) {
    throw std::runtime_error("line " + std::to_string(line_no) +
                             ": cannot parse " + what + " '" + field + "'");
  }
}

// "HH:MM:SS" or "HH:MM:SS.fff" -> seconds since midnight.
double parse_clock(const std::string& field, std::size_t line_no) {
  const auto c1 = field.find(':');
  const auto c2 = field.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    throw std::runtime_error("line " + std::to_string(line_no) +
                             ": cannot parse time '" + field + "'");
  }
  const double h = parse_double(field.substr(0, c1), line_no, "time");
  const double m = parse_double(field.substr(c1 + 1, c2 - c1 - 1), line_no,
                                "time");
  const double s = parse_double(field.substr(c2 + 1), line_no, "time");
  return 3600.0 * h + 60.0 * m + s;
}

}  // namespace

TickParseResult parse_ticks_csv(std::istream& in, const TickSchema& schema) {
  int time_col = schema.time_column;
  int price_col = schema.price_column;
  std::size_t line_no = 0;
  std::string line;

  if (schema.has_header) {
    if (!std::getline(in, line)) {
      throw std::runtime_error("no records");
    }
    ++line_no;
    const auto names = split_csv_line(line);
    for (std::size_t i = 0; i < names.size(); ++i) {
      const std::string name = lower(names[i]);
      if (time_col < 0 && (name == "time" || name == "timestamp")) {
        time_col = static_cast<int>(i);
      }
      if (price_col < 0 && name == "price") {
        price_col = static_cast<int>(i);
      }
    }
  }
  if (time_col < 0 || price_col < 0) {
    throw std::invalid_argument(
        "tick schema: time/price columns not named in the header and no "
        "explicit indices given");
  }

  TickParseResult result;
  const auto need =
      static_cast<std::size_t>(std::max(time_col, price_col)) + 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() < need) {
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": expected at least " + std::to_string(need) +
                               " columns");
    }
    TickRecord record;
    const std::string& time_field = fields[static_cast<std::size_t>(time_col)];
    if (time_field.find(':') != std::string::npos) {
      record.timestamp = parse_clock(time_field, line_no) - schema.session_open;
    } else {
      record.timestamp = parse_double(time_field, line_no, "time");
    }
    record.price = parse_double(fields[static_cast<std::size_t>(price_col)],
                                line_no, "price");
    if (!(record.price > 0.0) || !std::isfinite(record.price)) {
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": price must be positive");
    }
    if (!result.records.empty() &&
        record.timestamp < result.records.back().timestamp) {
      ++result.out_of_order;
    }
    result.records.push_back(record);
  }
  if (result.records.empty()) {
    throw std::runtime_error("no records");
  }

  // Stable sort, then keep the last occurrence per timestamp: for ties the
  // latest row in file order wins, matching previous-tick semantics.
  std::stable_sort(result.records.begin(), result.records.end(),
                   [](const TickRecord& a, const TickRecord& b) {
                     return a.timestamp < b.timestamp;
                   });
  std::vector<TickRecord> deduped;
  deduped.reserve(result.records.size());
  for (const TickRecord& r : result.records) {
    if (!deduped.empty() && deduped.back().timestamp == r.timestamp) {
      deduped.back() = r;
    } else {
      deduped.push_back(r);
    }
  }
  result.records = std::move(deduped);
  return result;
}

PricePath resample(const std::vector<TickRecord>& records,
                   const SamplingRule& rule) {
  if (records.empty()) {
    throw std::runtime_error("no records");
  }
  if (!(rule.interval_seconds > 0.0) || !(rule.session_seconds > 0.0)) {
    throw std::invalid_argument("sampling rule needs positive durations");
  }
  const double ratio = rule.session_seconds / rule.interval_seconds;
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) > 1e-9 * ratio || rounded < 8.0) {
    throw std::invalid_argument(
        "sampling interval must divide the session into at least 8 intervals");
  }
  const auto n = static_cast<std::size_t>(rounded);
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].timestamp < records[i - 1].timestamp) {
      throw std::invalid_argument("records must be sorted by timestamp");
    }
  }

  std::vector<double> values(n + 1);
  std::size_t idx = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    const double t = static_cast<double>(i) * rule.interval_seconds;
    if (records[0].timestamp > t) {
      throw std::runtime_error("grid point before first tick");
    }
    while (idx + 1 < records.size() && records[idx + 1].timestamp <= t) {
      ++idx;
    }
    values[i] = std::log(records[idx].price);
  }
  // One standard 6.5-hour session is one unit of time.
  const double t_end = rule.session_seconds / (6.5 * 3600.0);
  return make_path(t_end, std::move(values));
}

}  // namespace rcf
