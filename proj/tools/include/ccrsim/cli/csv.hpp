#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ccrsim/cli/scenario.hpp"

namespace ccrsim::cli {

struct CsvTable {
  std::string name;  // file name, e.g. fig2.csv
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

// 17 significant digits, '.' decimal point, -0 written as 0.
std::string format_number(double v);

std::string to_csv(const CsvTable& table);

// Header: <variable>,coherence,predictability,entropy,visibility,overlap_modulus,detector_p0,delta_theta,distinguishability
CsvTable to_table(const SweepTable& sweep, std::string name = "run.csv");

// Throws Error if the file cannot be written.
void write_csv(const CsvTable& table, const std::filesystem::path& path);

}  // namespace ccrsim::cli
