#ifndef TOPOHEAT_OUTPUT_HPP
#define TOPOHEAT_OUTPUT_HPP

#include <iosfwd>
#include <string>

#include "topoheat/cycles.hpp"
#include "topoheat/sweep.hpp"

namespace topoheat {

// Natural-unit densities (meV^3 with hbar = v_f = 1) scale to J/m^2 by
// (e*1e-3)^3 / (hbar * v_f)^2 with v_f in m/s.
struct SIConversion {
  double v_f_m_per_s = 0.0;  // > 0
};

double si_density_factor(const SIConversion& conv);
double to_si(double natural_density, const SIConversion& conv);

// 12-significant-digit, locale-independent number rendering. All emitted
// numbers go through this so that repeated runs are byte-identical.
std::string format_number(double value);

// Curve CSV: header "abscissa_meV,value" then one row per node.
// WorkMap CSV: header "u_cold_meV,u_hot_meV,work,sign", row-major with u_hot
// as the slow index. Newlines are '\n'; decimal point '.'.
std::string to_csv(const Curve& curve);
std::string to_csv(const WorkMap& map);

// Single-cycle JSON reports with a fixed key order. If si is non-null the
// heats and work are also given in J/m^2.
std::string to_json(const OttoReport& report, const CycleSpec& spec,
                    const MaterialParams& p, const SIConversion* si = nullptr);
std::string to_json(const StirlingReport& report, const CycleSpec& spec,
                    const MaterialParams& p, const SIConversion* si = nullptr);

std::string to_json(const Curve& curve);
std::string to_json(const WorkMap& map);

// Writes content to path ("-" for stdout). Returns false on I/O failure.
bool write_text(const std::string& path, const std::string& content,
                std::ostream& stdout_stream);

}  // namespace topoheat

#endif
