#include "eub/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace eub {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr double kLn2 = 0.6931471805599453;

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw InvalidInputError("complex entry must be a [re, im] pair");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw InvalidInputError("malformed JSON");
  }
  return j;
}

}  // namespace

Matrix matrix_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.contains("d") || !j.contains("rows")) {
    throw InvalidInputError("matrix JSON needs \"d\" and \"rows\"");
  }
  const int d = j["d"].get<int>();
  const json& rows = j["rows"];
  if (d < 1 || !rows.is_array() || static_cast<int>(rows.size()) != d) {
    throw InvalidInputError("matrix JSON row count does not match d");
  }
  Matrix m(d, d);
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(rows[i].size()) != d) {
      throw InvalidInputError("matrix JSON column count does not match d");
    }
    for (int k = 0; k < d; ++k) {
      m(i, k) = complex_from_json(rows[i][k]);
    }
  }
  return m;
}

std::string matrix_to_json(const Matrix& m) {
  ordered_json j;
  j["d"] = m.rows();
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.cols(); ++k) {
      row.push_back(complex_to_json(m(i, k)));
    }
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j.dump();
}

UnitaryMatrix load_unitary(const std::string& path, double tolerance) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInputError("cannot open " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return UnitaryMatrix(matrix_from_json(buf.str()), tolerance);
}

State state_from_json(const std::string& text) {
  const json j = parse(text);
  const std::string kind = j.value("kind", "");
  if (kind == "pure") {
    const json& amps = j.at("amplitudes");
    CVector v(amps.size());
    for (std::size_t i = 0; i < amps.size(); ++i) {
      v(static_cast<int>(i)) = complex_from_json(amps[i]);
    }
    return PureState(std::move(v));
  }
  if (kind == "density") {
    return DensityMatrix(matrix_from_json(text));
  }
  throw InvalidInputError("state JSON needs \"kind\": \"pure\" or \"density\"");
}

std::string state_to_json(const State& state) {
  ordered_json j;
  if (std::holds_alternative<PureState>(state)) {
    const PureState& psi = std::get<PureState>(state);
    j["kind"] = "pure";
    j["d"] = psi.dim();
    json amps = json::array();
    for (int i = 0; i < psi.dim(); ++i) {
      amps.push_back(complex_to_json(psi.amplitudes()(i)));
    }
    j["amplitudes"] = std::move(amps);
  } else {
    const DensityMatrix& rho = std::get<DensityMatrix>(state);
    const json inner = json::parse(matrix_to_json(rho.matrix()));
    j["kind"] = "density";
    j["d"] = inner["d"];
    j["rows"] = inner["rows"];
  }
  return j.dump();
}

std::string format_g9(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

std::string report_to_json(const BoundReport& report, bool bits) {
  ordered_json j;
  j["unit"] = bits ? "bits" : "nats";
  ordered_json values;
  for (const auto& [id, nats] : report.values) {
    values[id] = {{"nats", json::parse(format_g9(nats))},
                  {"bits", json::parse(format_g9(nats / kLn2))}};
  }
  j["values"] = std::move(values);
  j["state_entropy_nats"] = json::parse(format_g9(report.state_entropy));
  ordered_json params;
  for (const auto& [key, value] : report.parameters) {
    params[key] = json::parse(format_g9(value));
  }
  j["parameters"] = std::move(params);
  if (!report.rpz_q_label.empty()) {
    j["rpz_q"] = report.rpz_q_label;
  }
  return j.dump(2);
}

std::string profile_to_json(const SingularProfile& profile) {
  ordered_json j;
  j["kind"] = profile.kind == ProfileKind::pairwise ? "pairwise" : "multi";
  j["d"] = profile.dim;
  j["L"] = profile.count_l;
  json values = json::array();
  for (double v : profile.values) {
    values.push_back(json::parse(format_g9(v)));
  }
  j["values"] = std::move(values);
  return j.dump(2);
}

std::string sweep_to_csv(const std::vector<SweepPoint>& points, bool bits) {
  static const std::vector<std::string> pairwise_ids = {
      "D", "MU", "CP1", "CP2", "RPZ1", "RPZ2", "RPZ3", "Maj1", "Maj2"};
  const double unit = bits ? kLn2 : 1.0;
  std::ostringstream out;
  const bool has_multi =
      !points.empty() && points.front().report.values.contains("Multi");
  const bool has_opt =
      !points.empty() && points.front().report.values.contains("OPT");
  out << "param";
  for (const std::string& id : pairwise_ids) {
    out << ',' << id;
  }
  if (has_multi) {
    out << ",Multi";
  }
  if (has_opt) {
    out << ",OPT";
  }
  out << '\n';
  for (const SweepPoint& p : points) {
    out << format_g9(p.parameter);
    for (const std::string& id : pairwise_ids) {
      out << ',' << format_g9(p.report.values.at(id) / unit);
    }
    if (has_multi) {
      out << ',' << format_g9(p.report.values.at("Multi") / unit);
    }
    if (has_opt) {
      out << ',' << format_g9(p.report.values.at("OPT") / unit);
    }
    out << '\n';
  }
  return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) {
      throw InvalidInputError("cannot write " + tmp.string());
    }
    out << content;
  }
  fs::rename(tmp, target);
}

}  // namespace eub
