#include "ccrsim/cli/csv.hpp"

#include <cstdio>
#include <fstream>

#include "ccrsim/errors.hpp"

namespace ccrsim::cli {

std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_csv(const CsvTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out += ',';
    out += table.header[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

CsvTable to_table(const SweepTable& sweep, std::string name) {
  CsvTable t{std::move(name),
             {sweep.variable, "coherence", "predictability", "entropy", "visibility", "overlap_modulus", "detector_p0",
              "delta_theta", "distinguishability"},
             {}};
  t.rows.reserve(sweep.rows.size());
  for (const auto& r : sweep.rows) {
    t.rows.push_back({r.value, r.coherence, r.predictability, r.entropy, r.visibility, r.overlap_modulus,
                      r.detector_p0, r.delta_theta, r.distinguishability});
  }
  return t;
}

void write_csv(const CsvTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << to_csv(table);
  out.flush();
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace ccrsim::cli
