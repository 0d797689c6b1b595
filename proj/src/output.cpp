#include "topoheat/output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "topoheat/constants.hpp"

namespace topoheat {

double si_density_factor(const SIConversion& conv) {
  if (!(conv.v_f_m_per_s > 0.0) || !std::isfinite(conv.v_f_m_per_s)) {
    throw std::invalid_argument("v_f must be positive");
  }
  const double mev_J = constants::elementary_charge_C * 1e-3;
  const double denom = constants::hbar_J_s * conv.v_f_m_per_s;
  return mev_J * mev_J * mev_J / (denom * denom);
}

double to_si(double natural_density, const SIConversion& conv) {
  return natural_density * si_density_factor(conv);
}

std::string format_number(double value) {
  char buf[40];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

namespace {

void append_row(std::string& out, std::initializer_list<double> fields) {
  bool first = true;
  for (double v : fields) {
    if (!first) out += ',';
    out += format_number(v);
    first = false;
  }
  out += '\n';
}

struct JsonWriter {
  std::string text = "{";
  bool first = true;

  void sep() {
    if (!first) text += ',';
    first = false;
  }
  void field(const char* key, double value) {
    sep();
    text += '"';
    text += key;
    text += "\":";
    // NaN/inf are not valid JSON numbers; quote them.
    if (std::isfinite(value)) {
      text += format_number(value);
    } else {
      text += '"';
      text += format_number(value);
      text += '"';
    }
  }
  void field(const char* key, const char* value) {
    sep();
    text += '"';
    text += key;
    text += "\":\"";
    text += value;
    text += '"';
  }
  void field(const char* key, bool value) {
    sep();
    text += '"';
    text += key;
    text += "\":";
    text += value ? "true" : "false";
  }
  void raw(const char* key, const std::string& value) {
    sep();
    text += '"';
    text += key;
    text += "\":";
    text += value;
  }
  std::string close() {
    text += '}';
    return text;
  }
};

void spec_fields(JsonWriter& w, const CycleSpec& spec, const MaterialParams& p) {
  w.field("lambda_so_meV", p.lambda_so_meV);
  w.field("t_hot_K", spec.t_hot_K);
  w.field("t_cold_K", spec.t_cold_K);
  w.field("u_hot_meV", spec.u_hot_meV);
  w.field("u_cold_meV", spec.u_cold_meV);
}

std::string numerics_json(const CycleNumerics& numerics, bool with_consistent) {
  JsonWriter w;
  w.field("error_estimate", numerics.error_estimate);
  w.field("converged", numerics.converged);
  if (with_consistent) w.field("consistent", numerics.consistent);
  return w.close();
}

void si_fields(JsonWriter& w, const SIConversion* si,
               std::initializer_list<std::pair<const char*, double>> values) {
  if (si == nullptr) return;
  JsonWriter block;
  block.field("v_f_m_per_s", si->v_f_m_per_s);
  for (const auto& [key, value] : values) {
    block.field(key, to_si(value, *si));
  }
  w.raw("si_J_per_m2", block.close());
}

}  // namespace

std::string to_csv(const Curve& curve) {
  std::string out = "abscissa_meV,value\n";
  for (std::size_t i = 0; i < curve.abscissa.size(); ++i) {
    append_row(out, {curve.abscissa[i], curve.values[i]});
  }
  return out;
}

std::string to_csv(const WorkMap& map) {
  std::string out = "u_cold_meV,u_hot_meV,work,sign\n";
  for (int i_hot = 0; i_hot < map.axis_u_hot.steps; ++i_hot) {
    for (int j_cold = 0; j_cold < map.axis_u_cold.steps; ++j_cold) {
      out += format_number(map.axis_u_cold.node(j_cold));
      out += ',';
      out += format_number(map.axis_u_hot.node(i_hot));
      out += ',';
      out += format_number(map.value(i_hot, j_cold));
      out += ',';
      out += map.sign(i_hot, j_cold);
      out += '\n';
    }
  }
  return out;
}

std::string to_json(const OttoReport& report, const CycleSpec& spec,
                    const MaterialParams& p, const SIConversion* si) {
  JsonWriter w;
  w.field("cycle", "otto");
  w.field("units", "meV^3 per area, hbar = v_f = 1");
  spec_fields(w, spec, p);
  w.field("q_in", report.q_in);
  w.field("q_out", report.q_out);
  w.field("work", report.work);
  if (report.efficiency) w.field("efficiency", *report.efficiency);
  w.field("mode", mode_name(report.mode));
  w.raw("numerics", numerics_json(report.numerics, false));
  si_fields(w, si,
            {{"q_in", report.q_in}, {"q_out", report.q_out}, {"work", report.work}});
  return w.close();
}

std::string to_json(const StirlingReport& report, const CycleSpec& spec,
                    const MaterialParams& p, const SIConversion* si) {
  JsonWriter w;
  w.field("cycle", "stirling");
  w.field("units", "meV^3 per area, hbar = v_f = 1");
  spec_fields(w, spec, p);
  w.field("q_ba", report.heats.q_ba);
  w.field("q_cb", report.heats.q_cb);
  w.field("q_dc", report.heats.q_dc);
  w.field("q_ad", report.heats.q_ad);
  w.field("q_in", report.q_in);
  w.field("work", report.work);
  w.field("work_heat_sum", report.work_heat_sum);
  if (report.efficiency) w.field("efficiency", *report.efficiency);
  w.field("mode", mode_name(report.mode));
  w.raw("numerics", numerics_json(report.numerics, true));
  si_fields(w, si,
            {{"q_in", report.q_in}, {"work", report.work}});
  return w.close();
}

std::string to_json(const Curve& curve) {
  JsonWriter w;
  w.field("kind", cycle_name(curve.meta.kind));
  w.field("quantity", quantity_name(curve.meta.quantity));
  w.field("swept", field_name(curve.meta.swept));
  w.field("lambda_so_meV", curve.meta.lambda_so_meV);
  w.field("t_hot_K", curve.meta.base.t_hot_K);
  w.field("t_cold_K", curve.meta.base.t_cold_K);
  w.field("u_hot_meV", curve.meta.base.u_hot_meV);
  w.field("u_cold_meV", curve.meta.base.u_cold_meV);
  std::string abscissa = "[";
  std::string values = "[";
  for (std::size_t i = 0; i < curve.abscissa.size(); ++i) {
    if (i) {
      abscissa += ',';
      values += ',';
    }
    abscissa += format_number(curve.abscissa[i]);
    if (std::isfinite(curve.values[i])) {
      values += format_number(curve.values[i]);
    } else {
      values += '"';
      values += format_number(curve.values[i]);
      values += '"';
    }
  }
  abscissa += ']';
  values += ']';
  w.raw("abscissa_meV", abscissa);
  w.raw("values", values);
  return w.close();
}

std::string to_json(const WorkMap& map) {
  JsonWriter w;
  w.field("kind", "otto_work_map");
  w.field("lambda_so_meV", map.lambda_so_meV);
  w.field("t_hot_K", map.t_hot_K);
  w.field("t_cold_K", map.t_cold_K);
  const auto grid_json = [](const GridSpec& g) {
    JsonWriter gw;
    gw.field("start", g.start);
    gw.field("stop", g.stop);
    gw.field("steps", static_cast<double>(g.steps));
    return gw.close();
  };
  w.raw("axis_u_cold", grid_json(map.axis_u_cold));
  w.raw("axis_u_hot", grid_json(map.axis_u_hot));
  std::string values = "[";
  std::string signs = "\"";
  for (std::size_t i = 0; i < map.values.size(); ++i) {
    if (i) values += ',';
    values += format_number(map.values[i]);
    signs += map.signs[i];
  }
  values += ']';
  signs += '"';
  w.raw("values", values);
  w.raw("signs", signs);
  w.field("all_converged", map.all_converged);
  return w.close();
}

bool write_text(const std::string& path, const std::string& content,
                std::ostream& stdout_stream) {
  if (path.empty() || path == "-") {
    stdout_stream << content;
    return stdout_stream.good();
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) return false;
  file << content;
  file.flush();
  return file.good();
}

}  // namespace topoheat
