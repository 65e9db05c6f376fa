#pragma once

#include <map>

#include "mlie/metric.hpp"

namespace mlie {

/// Named collection of algebras, metrics and subspaces loaded from a `.lie`
/// file. Line-oriented format, '#' starts a comment:
///
///   algebra NAME
///     dim N
///     salamon (ENTRY, ..., ENTRY)
///   metric NAME on ALGEBRA
///     g I J P/Q
///   subspace NAME on ALGEBRA
///     span VEC; VEC; ...
///   context TEXT            # optional label copied into reports
///
/// Expectation metadata for bundled examples rides in `#!expect key=value`
/// comment lines.
struct Workspace {
  struct NamedMetric {
    std::string algebra_name;
    Metric metric;
  };
  struct NamedSubspace {
    std::string algebra_name;
    Subspace subspace;
  };

  std::optional<std::string> context;  // free-form label attached to reports

  std::vector<std::pair<std::string, LieAlgebra>> algebras;
  std::vector<std::pair<std::string, NamedMetric>> metrics;
  std::vector<std::pair<std::string, NamedSubspace>> subspaces;
  std::vector<std::map<std::string, std::string>> expectations;

  const LieAlgebra& algebra(const std::string& name) const;
  const NamedMetric& metric(const std::string& name) const;
  const NamedSubspace& subspace(const std::string& name) const;
  bool has_algebra(const std::string& name) const;
};

Workspace parse_lie_text(const std::string& text);
Workspace parse_lie_file(const std::string& path);

struct CorpusEntry {
  std::string name;  // file stem, e.g. "paper"
  std::string path;
};
/// Bundled examples shipped with the library (directory overridable via the
/// MLIE_CORPUS_DIR environment variable).
std::vector<CorpusEntry> corpus();

}  // namespace mlie
