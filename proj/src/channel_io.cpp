#include "qcap/channel_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qcap {

namespace {

// 17 significant digits: enough for a bit-exact double round trip.
std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string fmt9f(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9f", x);
  return buf;
}

nlohmann::json flags_json(const std::vector<std::string>& flags) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& f : flags) arr.push_back(f);
  return arr;
}

}  // namespace

std::string channel_to_json(const QuantumChannel& t) {
  std::ostringstream os;
  os << "{\"d_in\": " << t.d_in() << ", \"d_out\": " << t.d_out()
     << ", \"kraus\": [";
  for (std::size_t a = 0; a < t.kraus().size(); ++a) {
    const CMatrix& m = t.kraus()[a];
    if (a) os << ", ";
    os << "[";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i) os << ", ";
      os << "[";
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        if (j) os << ", ";
        os << "[" << fmt17(m(i, j).real()) << ", " << fmt17(m(i, j).imag())
           << "]";
      }
      os << "]";
    }
    os << "]";
  }
  os << "]}";
  return os.str();
}

QuantumChannel channel_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("channel JSON parse error: ") +
                             e.what());
  }
  if (!j.is_object() || !j.contains("d_in") || !j.contains("d_out") ||
      !j.contains("kraus") || !j["kraus"].is_array() || j["kraus"].empty()) {
    throw std::runtime_error(
        "channel JSON must be an object with d_in, d_out and a non-empty "
        "kraus list");
  }
  const int d_in = j["d_in"].get<int>();
  const int d_out = j["d_out"].get<int>();
  std::vector<CMatrix> kraus;
  for (const auto& jm : j["kraus"]) {
    if (!jm.is_array() || static_cast<int>(jm.size()) != d_out) {
      throw std::runtime_error("channel JSON: matrix must have d_out rows");
    }
    CMatrix m(d_out, d_in);
    for (int i = 0; i < d_out; ++i) {
      const auto& row = jm[i];
      if (!row.is_array() || static_cast<int>(row.size()) != d_in) {
        throw std::runtime_error("channel JSON: row must have d_in entries");
      }
      for (int k = 0; k < d_in; ++k) {
        const auto& e = row[k];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
            !e[1].is_number()) {
          throw std::runtime_error(
              "channel JSON: entries must be [re, im] number pairs");
        }
        m(i, k) = Complex(e[0].get<double>(), e[1].get<double>());
      }
    }
    kraus.push_back(std::move(m));
  }
  return QuantumChannel::unchecked(std::move(kraus));
}

std::string report_to_json(const DegradabilityReport& r) {
  nlohmann::json j;
  j["verdict"] = to_string(r.verdict);
  j["deg_margin"] = r.deg_margin;
  j["antideg_margin"] = r.antideg_margin;
  j["condition_flags"] = flags_json(r.condition_flags);
  return j.dump();
}

std::string capacity_to_json(const CapacityResult& r) {
  nlohmann::json j;
  j["value"] = r.value;
  j["kind"] = to_string(r.kind);
  if (r.achieved_p) j["achieved_p"] = *r.achieved_p;
  if (r.achieved_input) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < r.achieved_input->rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index k = 0; k < r.achieved_input->cols(); ++k) {
        row.push_back({(*r.achieved_input)(i, k).real(),
                       (*r.achieved_input)(i, k).imag()});
      }
      rows.push_back(row);
    }
    j["achieved_input"] = rows;
  }
  if (!r.diagnostics.empty()) j["diagnostics"] = r.diagnostics;
  return j.dump();
}

std::string stats_to_json(const SampleStats& s) {
  nlohmann::json j;
  j["d"] = s.d;
  j["dE"] = s.d_env;
  j["n"] = s.n;
  j["seed"] = s.seed;
  j["fractions"] = {{"degradable", s.degradable},
                    {"anti-degradable", s.anti_degradable},
                    {"both", s.both},
                    {"neither", s.neither},
                    {"inconclusive", s.inconclusive}};
  j["wilson_halfwidth"] = s.wilson_halfwidth;
  return j.dump();
}

std::string surface_row(double alpha, double beta, double capacity,
                        Verdict verdict) {
  std::ostringstream os;
  os << fmt9f(alpha) << "," << fmt9f(beta) << "," << fmt9f(capacity) << ","
     << to_string(verdict);
  return os.str();
}

int verdict_exit_code(Verdict v) {
  return v == Verdict::Inconclusive ? 2 : 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace qcap
