#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "nvpair/errors.hpp"
#include "nvpair/io.hpp"
#include "nvpair/spinsim/engine.hpp"

namespace nvpair::io {

inline void write_trace_csv(std::ostream& os, const spinsim::Trace& t) {
  os << "time_us,signal\n";
  for (std::size_t i = 0; i < t.size(); ++i) os << fmt(t.times_us[i]) << ',' << fmt(t.signal[i]) << '\n';
}

inline std::string trace_csv(const spinsim::Trace& t) {
  std::ostringstream os;
  write_trace_csv(os, t);
  return os.str();
}

inline spinsim::Trace read_trace_csv(std::istream& is, const std::string& name = "trace") {
  spinsim::Trace t;
  t.metadata = name;
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  while (std::getline(is, line)) {
    ++line_no;
    const auto s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    if (!header) {
      if (s != "time_us,signal") throw InputError(name + ": expected header 'time_us,signal'");
      header = true;
      continue;
    }
    const auto cols = split(s, ',');
    if (cols.size() != 2) throw InputError(name + ": line " + std::to_string(line_no) + " needs 2 columns");
    t.times_us.push_back(parse_double(cols[0]));
    t.signal.push_back(parse_double(cols[1]));
  }
  if (!header) throw InputError(name + ": empty trace file");
  if (t.size() == 0) throw InputError(name + ": trace has no samples");
  t.validate();
  return t;
}

inline spinsim::Trace read_trace_file(const std::string& path) {
  std::istringstream is(read_text_file(path));
  return read_trace_csv(is, path);
}

}  // namespace nvpair::io
