#include "ringcat/table_io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace ringcat {

std::string format_number(double value, int digits) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

namespace {

void comment_line(std::ostream& out, const std::string& comment) { out << "# " << comment << '\n'; }

}  // namespace

void write_spectrum_csv(std::ostream& out, const SpectrumTable& table, const std::string& comment) {
  comment_line(out, comment);
  out << "phi,level,energy\n";
  for (const auto& r : table.rows) {
    out << format_number(r.phi) << ',' << r.level << ',' << format_number(r.energy) << '\n';
  }
}

void write_catscan_csv(std::ostream& out, const CatScanTable& table, const std::string& comment) {
  comment_line(out, comment);
  out << "N,u_over_j,dphi,a0_re,a0_im,a1_re,a1_im,ratio,captured_norm,ratio_analytic\n";
  for (const auto& r : table.rows) {
    const auto& m = r.exact;
    out << r.n << ',' << format_number(r.u_over_j) << ',' << format_number(r.dphi) << ','
        << format_number(m.a0.real()) << ',' << format_number(m.a0.imag()) << ','
        << format_number(m.a1.real()) << ',' << format_number(m.a1.imag()) << ','
        << format_number(m.ratio) << ',' << format_number(m.captured_norm) << ','
        << format_number(r.ratio_analytic) << '\n';
  }
}

void write_effective_csv(std::ostream& out, const std::vector<EffectiveRow>& rows,
                         const std::string& comment) {
  comment_line(out, comment);
  out << "dphi,eps,v01_abs,ratio_analytic,E_minus,E_plus\n";
  for (const auto& r : rows) {
    const auto& m = r.model;
    out << format_number(r.dphi) << ',' << format_number(m.eps) << ','
        << format_number(std::abs(m.v01)) << ',' << format_number(m.ratio_magnitude()) << ','
        << format_number(m.e_minus) << ',' << format_number(m.e_plus) << '\n';
  }
}

void write_paths_csv(std::ostream& out, const std::vector<PathsRow>& rows,
                     const std::vector<std::string>& comments) {
  for (const auto& c : comments) comment_line(out, c);
  out << "order,paths,v01_re,v01_im,v01_abs\n";
  for (const auto& r : rows) {
    out << r.max_order << ',' << r.result.path_count << ',' << format_number(r.result.value.real())
        << ',' << format_number(r.result.value.imag()) << ','
        << format_number(std::abs(r.result.value)) << '\n';
  }
}

void write_loop_csv(std::ostream& out, const std::vector<LoopRow>& rows, const std::string& comment) {
  comment_line(out, comment);
  out << "phi,level,energy_over_C\n";
  for (const auto& r : rows) {
    out << format_number(r.phi) << ',' << r.level << ',' << format_number(r.energy_over_c) << '\n';
  }
}

}  // namespace ringcat
