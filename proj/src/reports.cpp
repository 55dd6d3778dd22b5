#include "repgrowth/reports.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>

namespace repgrowth {

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string lambda_field(const Weight& w) {
  std::string s;
  for (int i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", v);
  // normalize the sign of zero so -0.000000000000 never appears
  if (std::string(buf) == "-0.000000000000") return "0.000000000000";
  return buf;
}

void write_series_csv(std::ostream& os, const GrowthSeries& series, bool timings) {
  os << "n,b_exact,b_normalized,support_size,seconds\n";
  for (const auto& row : series.rows) {
    os << row.n << ',';
    if (series.mode == Mode::exact) os << row.b_exact.str();
    os << ',' << format_double(row.b_normalized) << ',' << row.support_size << ','
       << format_double(timings ? row.seconds : 0.0) << '\n';
  }
}

std::vector<GrowthRow> read_series_csv(std::istream& is) {
  std::vector<GrowthRow> rows;
  std::string line;
  if (!std::getline(is, line) || line.rfind("n,b_exact,b_normalized,support_size,seconds", 0) != 0)
    throw ConfigError("series.csv: missing or unexpected header");
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    size_t pos = 0;
    for (;;) {
      size_t comma = line.find(',', pos);
      fields.push_back(line.substr(pos, comma == std::string::npos ? comma : comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (fields.size() != 5)
      throw ConfigError("series.csv line " + std::to_string(lineno) + ": expected 5 fields");
    try {
      GrowthRow row;
      row.n = std::stoi(fields[0]);
      if (!fields[1].empty()) row.b_exact = BigInt(fields[1]);
      row.b_normalized = std::stod(fields[2]);
      row.support_size = std::stoll(fields[3]);
      row.seconds = std::stod(fields[4]);
      rows.push_back(std::move(row));
    } catch (const std::exception&) {
      throw ConfigError("series.csv line " + std::to_string(lineno) + ": malformed field");
    }
  }
  return rows;
}

void write_fit_json(std::ostream& os, const std::string& group, const std::string& mode,
                    const FitResult& fit, double tolerance) {
  const bool pass = std::abs(fit.r_hat - fit.target) <= tolerance;
  os << "{\n"
     << "  \"group\": \"" << json_escape(group) << "\",\n"
     << "  \"mode\": \"" << mode << "\",\n"
     << "  \"window\": [" << fit.n_lo << ", " << fit.n_hi << "],\n"
     << "  \"r_hat\": " << format_double(fit.r_hat) << ",\n"
     << "  \"C_hat\": " << format_double(fit.c_hat) << ",\n"
     << "  \"residual_rms\": " << format_double(fit.residual_rms) << ",\n"
     << "  \"target\": " << format_double(fit.target) << ",\n"
     << "  \"tolerance\": " << format_double(tolerance) << ",\n"
     << "  \"pass\": " << (pass ? "true" : "false") << "\n"
     << "}\n";
}

void write_check_json(std::ostream& os, const std::string& group, const CheckReport& report) {
  os << "{\n"
     << "  \"group\": \"" << json_escape(group) << "\",\n"
     << "  \"checks\": [\n";
  for (size_t i = 0; i < report.items.size(); ++i) {
    const auto& item = report.items[i];
    os << "    {\"name\": \"" << json_escape(item.name) << "\", \"pass\": "
       << (item.pass ? "true" : "false") << ", \"witness\": \"" << json_escape(item.witness)
       << "\"}" << (i + 1 < report.items.size() ? "," : "") << "\n";
  }
  os << "  ],\n"
     << "  \"pass\": " << (report.all_pass() ? "true" : "false") << "\n"
     << "}\n";
}

void write_compare_csv(std::ostream& os, const std::vector<CompareRow>& rows) {
  os << "kind,n,lambda,exact_normalized,approx,ratio\n";
  for (const auto& row : rows) {
    os << row.kind << ',' << row.n << ',';
    if (row.kind == "a") os << lambda_field(row.lambda);
    os << ',' << format_double(row.exact_value) << ',' << format_double(row.approx_value) << ',';
    if (row.has_ratio) os << format_double(row.ratio);
    os << '\n';
  }
}

void write_moments_json(std::ostream& os, const std::string& group, const RepSpec& spec,
                        const MomentData& md) {
  os << "{\n"
     << "  \"group\": \"" << json_escape(group) << "\",\n"
     << "  \"r\": " << md.r << ",\n"
     << "  \"u\": " << spec.datum->u() << ",\n"
     << "  \"dim\": " << rep_dimension(spec).str() << ",\n";
  os << "  \"mean\": [";
  for (int i = 0; i < md.r; ++i)
    os << (i ? ", " : "") << format_double(md.mean_d[static_cast<size_t>(i)]);
  os << "],\n";
  os << "  \"covariance\": [\n";
  for (int i = 0; i < md.r; ++i) {
    os << "    [";
    for (int j = 0; j < md.r; ++j) os << (j ? ", " : "") << format_double(md.sigma(i, j));
    os << "]" << (i + 1 < md.r ? "," : "") << "\n";
  }
  os << "  ],\n";
  os << "  \"q\": [\n";
  for (int i = 0; i < md.r; ++i) {
    os << "    [";
    for (int j = 0; j < md.r; ++j) os << (j ? ", " : "") << format_double(md.q(i, j));
    os << "]" << (i + 1 < md.r ? "," : "") << "\n";
  }
  os << "  ],\n";
  os << "  \"base_point\": [";
  for (int i = 0; i < md.r; ++i) os << (i ? ", " : "") << md.base_point[i];
  os << "],\n";
  os << "  \"lattice_basis\": [";
  for (int i = 0; i < md.step_lattice.rank(); ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < md.r; ++j)
      os << (j ? ", " : "") << md.step_lattice.rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    os << "]";
  }
  os << "],\n"
     << "  \"spanning\": " << (md.spanning ? "true" : "false") << ",\n"
     << "  \"covolume\": " << md.covolume << ",\n"
     << "  \"det_sigma\": " << format_double(md.det_sigma) << ",\n"
     << "  \"q_residual\": " << format_double(md.q_residual) << "\n"
     << "}\n";
}

}  // namespace repgrowth
