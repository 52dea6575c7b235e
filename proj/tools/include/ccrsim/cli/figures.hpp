#pragma once

#include <filesystem>
#include <vector>

#include "ccrsim/cli/csv.hpp"

// Figure datasets, one CSV per panel:
//   2: fig2.csv            alpha,coherence,predictability,entropy      QCRE, |o| = 1
//   3: fig3.csv            overlap,coherence,predictability,entropy    QDCE
//   4: fig4a_coherence.csv alpha,overlap,coherence                     QCRE
//      fig4b_entanglement.csv alpha,overlap,entropy
//   5: fig5.csv            size_m,t_s,delta_theta,distinguishability   square arms, L = h = size
//   6: fig6.csv            alpha,delta_t,visibility                    gamma dV/2 = 1/s
namespace ccrsim::cli {

inline constexpr std::size_t kCurvePoints = 101;
inline constexpr std::size_t kSurfacePoints = 41;
inline constexpr std::size_t kTracePoints = 201;
inline constexpr double kFigureSizes[] = {1.0, 10.0, 100.0};

// Throws InvalidInput unless 2 <= n <= 6.
std::vector<CsvTable> figure_tables(int n);

// Writes the tables into `dir` (created if needed) and returns the paths.
std::vector<std::filesystem::path> write_figure(int n, const std::filesystem::path& dir);

}  // namespace ccrsim::cli
