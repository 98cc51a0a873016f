#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ringcat/cat_metrics.hpp"
#include "ringcat/effective.hpp"
#include "ringcat/solver.hpp"

namespace ringcat {

/// printf-style %.{digits}g; "inf", "-inf" and "nan" for non-finite values.
std::string format_number(double value, int digits = 15);

/// Every writer emits `# <comment>` first, then the CSV header, then rows.
void write_spectrum_csv(std::ostream& out, const SpectrumTable& table, const std::string& comment);
void write_catscan_csv(std::ostream& out, const CatScanTable& table, const std::string& comment);

struct EffectiveRow {
  double dphi;
  TwoLevelModel model;
};
void write_effective_csv(std::ostream& out, const std::vector<EffectiveRow>& rows,
                         const std::string& comment);

struct PathsRow {
  int max_order;
  PathCouplingResult result;
};
void write_paths_csv(std::ostream& out, const std::vector<PathsRow>& rows,
                     const std::vector<std::string>& comments);

struct LoopRow {
  double phi;
  int level;
  double energy_over_c;
};
void write_loop_csv(std::ostream& out, const std::vector<LoopRow>& rows, const std::string& comment);

}  // namespace ringcat
