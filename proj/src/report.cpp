#include "mlie/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace mlie {

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["verdict"] = verdict;
  if (lambda) j["lambda"] = lambda->str();
  if (!values.empty()) {
    nlohmann::json v = nlohmann::json::object();
    for (const auto& [name, r] : values) v[name] = r.str();
    j["values"] = v;
  }
  if (!matrices.empty()) {
    nlohmann::json ms = nlohmann::json::object();
    for (const auto& [name, m] : matrices) {
      nlohmann::json rows = nlohmann::json::array();
      for (Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Index j2 = 0; j2 < m.cols(); ++j2) row.push_back(m(i, j2).str());
        rows.push_back(row);
      }
      ms[name] = rows;
    }
    j["matrices"] = ms;
  }
  if (!trace.empty()) j["trace"] = trace;
  j["exit"] = exit_code;
  return j;
}

std::string Report::json_text() const { return to_json().dump(2); }

std::string format_matrix(const RatMat& m) {
  std::vector<std::vector<std::string>> cells(m.rows());
  std::vector<size_t> width(m.cols(), 0);
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      cells[i].push_back(m(i, j).str());
      width[j] = std::max(width[j], cells[i].back().size());
    }
  std::ostringstream os;
  for (Index i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) os << "  ";
      os << std::string(width[j] - cells[i][j].size(), ' ') << cells[i][j];
    }
    os << "]\n";
  }
  return os.str();
}

std::string Report::text() const {
  std::ostringstream os;
  os << command << ": " << verdict << "\n";
  if (lambda) os << "lambda = " << lambda->str() << "\n";
  for (const auto& [name, r] : values) os << name << " = " << r.str() << "\n";
  for (const auto& [name, m] : matrices) os << name << ":\n" << format_matrix(m);
  for (const auto& line : trace) os << "  " << line << "\n";
  if (anchor) os << "context: " << *anchor << "\n";
  return os.str();
}

}  // namespace mlie
