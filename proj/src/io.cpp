#include "limitset/io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace limitset {

using nlohmann::json;

CVec parse_point_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_array() || j.size() < 3)
    throw std::invalid_argument("point: expected a JSON array of at least 3 [re, im] pairs");
  CVec z;
  z.reserve(j.size());
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number())
      throw std::invalid_argument("point: each coordinate must be a [re, im] pair");
    z.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  return z;
}

std::string point_to_json(const CVec& z) {
  json j = json::array();
  for (const cplx& c : z) j.push_back({c.real(), c.imag()});
  return j.dump();
}

void write_matrix_csv(const IsometryMatrix& a, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("write_matrix_csv: cannot open " + path);
  f << "n=" << a.n << "\n";
  f.precision(17);
  const int d = a.n + 1;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) f << (j ? "," : "") << a.at(i, j);
    f << "\n";
  }
}

IsometryMatrix read_matrix_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("read_matrix_csv: cannot open " + path);
  std::string line;
  if (!std::getline(f, line) || line.rfind("n=", 0) != 0)
    throw std::runtime_error("read_matrix_csv: missing n= header");
  IsometryMatrix a;
  a.n = std::stoi(line.substr(2));
  if (a.n < 1) throw std::runtime_error("read_matrix_csv: bad dimension");
  const int d = a.n + 1;
  a.e.reserve(d * d);
  for (int i = 0; i < d; ++i) {
    if (!std::getline(f, line)) throw std::runtime_error("read_matrix_csv: truncated file");
    std::istringstream row(line);
    std::string cell;
    for (int j = 0; j < d; ++j) {
      if (!std::getline(row, cell, ',')) throw std::runtime_error("read_matrix_csv: short row");
      a.e.push_back(std::stod(cell));
    }
  }
  return a;
}

std::string census_report_json(const CensusReport& rep) {
  json j;
  j["config"] = {{"m", rep.config.m},
                 {"n", rep.config.n},
                 {"samples", rep.config.samples},
                 {"edge_candidates", rep.config.edge_candidates},
                 {"segment_steps", rep.config.segment_steps},
                 {"seed", rep.config.seed},
                 {"tol", rep.config.tol}};
  j["omega_nodes"] = rep.omega_nodes;
  j["component_count"] = rep.component_count;
  j["component_sizes"] = rep.component_sizes;
  j["label_histogram"] = rep.label_histogram;
  j["cross_label_edges"] = rep.cross_label_edges;
  j["degenerate_determinant_count"] = rep.degenerate_determinant_count;
  return j.dump(2);
}

}  // namespace limitset
