// Generates tests/golden/golden_values.hpp and tests/golden/oracle_values.json
// from the trapezoid oracle. Run from the repository root:
//   build/tests/make_golden
// The outputs are committed; tests compare the library against them.

#include <cstdio>
#include <string>
#include <vector>

#include "trapezoid_oracle.hpp"

namespace {

struct Entry {
  std::string name;
  double value;
};

std::string render(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

int main() {
  namespace oracle = trapezoid_oracle;
  const double lambda = 30.0;

  std::vector<Entry> entries;
  entries.push_back({"fermi_e10_t30",
                     oracle::fermi(10.0, 30.0)});
  entries.push_back({"internal_energy_t300_u40",
                     oracle::internal_energy(300.0, 40.0, lambda)});
  entries.push_back({"entropy_t300_u40",
                     oracle::entropy(300.0, 40.0, lambda)});
  entries.push_back({"grand_term_t300_u0",
                     oracle::grand_term(300.0, 0.0, lambda)});

  const oracle::OttoHeats low = oracle::otto_heats(40.0, 30.0, 33.0, 30.0, lambda);
  entries.push_back({"otto_low_q_in", low.q_in});
  entries.push_back({"otto_low_q_out", low.q_out});

  const oracle::OttoHeats high = oracle::otto_heats(300.0, 150.0, 90.0, 60.0, lambda);
  entries.push_back({"otto_high_q_in", high.q_in});
  entries.push_back({"otto_high_q_out", high.q_out});

  const oracle::StirlingResult stirling =
      oracle::stirling(40.0, 30.0, 40.0, 30.0, lambda);
  entries.push_back({"stirling_low_q_ba", stirling.q_ba});
  entries.push_back({"stirling_low_q_cb", stirling.q_cb});
  entries.push_back({"stirling_low_q_dc", stirling.q_dc});
  entries.push_back({"stirling_low_q_ad", stirling.q_ad});
  entries.push_back({"stirling_low_work_heat_sum", stirling.work_heat_sum});
  entries.push_back({"stirling_low_work_partition", stirling.work_partition});

  std::FILE* json = std::fopen("tests/golden/oracle_values.json", "wb");
  std::FILE* header = std::fopen("tests/golden/golden_values.hpp", "wb");
  if (json == nullptr || header == nullptr) {
    std::fprintf(stderr, "run from the repository root; tests/golden must exist\n");
    return 1;
  }

  std::fprintf(json, "{\n");
  std::fprintf(json,
               "  \"_source\": \"uniform trapezoid rule, 2^20 panels, "
               "K = 60*max(k_B*T, lambda + |u|), lambda_so = 30 meV\",\n");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    std::fprintf(json, "  \"%s\": %s%s\n", entries[i].name.c_str(),
                 render(entries[i].value).c_str(),
                 i + 1 < entries.size() ? "," : "");
  }
  std::fprintf(json, "}\n");
  std::fclose(json);

  std::fprintf(header,
               "// Generated by make_golden from the trapezoid oracle; do not edit.\n"
               "// Uniform trapezoid rule, 2^20 panels, K = 60*max(k_B*T, lambda+|u|),\n"
               "// lambda_so = 30 meV throughout.\n"
               "#ifndef TOPOHEAT_TESTS_GOLDEN_VALUES_HPP\n"
               "#define TOPOHEAT_TESTS_GOLDEN_VALUES_HPP\n\n"
               "namespace golden {\n\n");
  for (const Entry& e : entries) {
    std::fprintf(header, "inline constexpr double %s = %s;\n", e.name.c_str(),
                 render(e.value).c_str());
  }
  std::fprintf(header, "\n}  // namespace golden\n\n#endif\n");
  std::fclose(header);

  std::printf("wrote %zu golden values\n", entries.size());
  return 0;
}
