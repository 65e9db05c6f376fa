#pragma once

#include <nlohmann/json_fwd.hpp>

#include "mlie/ratmat.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mlie {

/// Structured command outcome. All numeric payloads are exact rationals and
/// serialize as "p/q" strings; the only JSON number is the exit code.
struct Report {
  std::string command;
  std::string verdict;
  std::optional<Rat> lambda;
  std::vector<std::pair<std::string, Rat>> values;
  std::vector<std::pair<std::string, RatMat>> matrices;
  std::vector<std::string> trace;
  std::optional<std::string> anchor;
  int exit_code = 0;

  nlohmann::json to_json() const;
  std::string json_text() const;  // canonical serialization of to_json()
  std::string text() const;       // human-readable rendering
};

std::string format_matrix(const RatMat& m);

}  // namespace mlie
