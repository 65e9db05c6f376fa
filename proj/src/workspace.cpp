#include "mlie/workspace.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace mlie {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(size_t line_no, const std::string& msg) {
  throw parse_error(msg + " at line " + std::to_string(line_no), line_no);
}

Rat parse_rat_at(const std::string& tok, size_t line_no) {
  try {
    return Rat::parse(tok);
  } catch (const std::invalid_argument& e) {
    if (std::string(e.what()).find("zero denominator") != std::string::npos)
      fail(line_no, "zero denominator");
    fail(line_no, std::string("bad rational '") + tok + "'");
  }
}

RatVec parse_vec_at(const std::string& text, Index dim, size_t line_no) {
  std::vector<Rat> entries;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](char c) { return std::isspace(c); }),
              tok.end());
    if (tok.empty()) fail(line_no, "empty vector entry");
    entries.push_back(parse_rat_at(tok, line_no));
  }
  if (static_cast<Index>(entries.size()) != dim)
    fail(line_no, "vector of length " + std::to_string(entries.size()) + ", expected " +
                      std::to_string(dim));
  RatVec v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = entries[i];
  return v;
}

}  // namespace

const LieAlgebra& Workspace::algebra(const std::string& name) const {
  for (const auto& [n, a] : algebras)
    if (n == name) return a;
  throw error("unknown algebra '" + name + "'");
}

const Workspace::NamedMetric& Workspace::metric(const std::string& name) const {
  for (const auto& [n, m] : metrics)
    if (n == name) return m;
  throw error("unknown metric '" + name + "'");
}

const Workspace::NamedSubspace& Workspace::subspace(const std::string& name) const {
  for (const auto& [n, s] : subspaces)
    if (n == name) return s;
  throw error("unknown subspace '" + name + "'");
}

bool Workspace::has_algebra(const std::string& name) const {
  for (const auto& [n, a] : algebras)
    if (n == name) return true;
  return false;
}

Workspace parse_lie_text(const std::string& text) {
  Workspace ws;

  enum class Block { None, Algebra, Metric, Subspace };
  Block block = Block::None;
  std::string block_name, block_algebra;
  std::optional<Index> declared_dim;
  std::optional<std::string> salamon_text;
  size_t block_line = 0;
  std::vector<std::tuple<Index, Index, Rat, size_t>> gram_entries;
  std::vector<std::pair<std::string, size_t>> span_lines;

  auto algebra_of = [&](const std::string& name, size_t line_no) -> const LieAlgebra& {
    if (!ws.has_algebra(name)) fail(line_no, "reference to unknown algebra '" + name + "'");
    return ws.algebra(name);
  };

  auto flush = [&]() {
    switch (block) {
      case Block::None:
        return;
      case Block::Algebra: {
        if (!salamon_text) fail(block_line, "algebra block without structure equations");
        LieAlgebra alg = [&] {
          try {
            return LieAlgebra::parse(*salamon_text);
          } catch (const jacobi_error& e) {
            fail(block_line, std::string("Jacobi identity fails: ") + e.what());
          } catch (const parse_error& e) {
            fail(block_line, std::string("bad structure equations: ") + e.what());
          }
        }();
        if (declared_dim && *declared_dim != alg.dim())
          fail(block_line, "declared dim does not match the structure equations");
        ws.algebras.emplace_back(block_name, std::move(alg));
        break;
      }
      case Block::Metric: {
        const LieAlgebra& alg = algebra_of(block_algebra, block_line);
        RatMat gram = RatMat::Zero(alg.dim(), alg.dim());
        std::vector<std::pair<Index, Index>> seen;
        for (const auto& [i, j, v, ln] : gram_entries) {
          if (i < 1 || j < 1 || i > alg.dim() || j > alg.dim()) fail(ln, "gram index out of range");
          auto key = std::minmax(i, j);
          if (std::find(seen.begin(), seen.end(), std::pair<Index, Index>(key)) != seen.end())
            fail(ln, "duplicate gram entry");
          seen.push_back(key);
          gram(i - 1, j - 1) = v;
          gram(j - 1, i - 1) = v;
        }
        ws.metrics.emplace_back(
            block_name,
            Workspace::NamedMetric{block_algebra, Metric(alg, gram, /*allow_degenerate=*/true)});
        break;
      }
      case Block::Subspace: {
        const LieAlgebra& alg = algebra_of(block_algebra, block_line);
        std::vector<RatVec> vecs;
        for (const auto& [line, ln] : span_lines) {
          std::istringstream is(line);
          std::string part;
          while (std::getline(is, part, ';')) {
            if (part.find_first_not_of(" \t") == std::string::npos) continue;
            vecs.push_back(parse_vec_at(part, alg.dim(), ln));
          }
        }
        RatMat basis(alg.dim(), static_cast<Index>(vecs.size()));
        for (size_t c = 0; c < vecs.size(); ++c) basis.col(static_cast<Index>(c)) = vecs[c];
        ws.subspaces.emplace_back(
            block_name, Workspace::NamedSubspace{block_algebra, Subspace(alg, basis)});
        break;
      }
    }
    block = Block::None;
    declared_dim.reset();
    salamon_text.reset();
    gram_entries.clear();
    span_lines.clear();
  };

  auto check_fresh_name = [&](const std::string& kind, const std::string& name, size_t ln) {
    auto dup = [&](auto& list) {
      return std::any_of(list.begin(), list.end(), [&](const auto& p) { return p.first == name; });
    };
    bool exists = kind == "algebra" ? dup(ws.algebras)
                  : kind == "metric" ? dup(ws.metrics)
                                     : dup(ws.subspaces);
    if (exists) fail(ln, "duplicate " + kind + " name '" + name + "'");
  };

  std::istringstream input(text);
  std::string raw;
  size_t line_no = 0;
  while (std::getline(input, raw)) {
    ++line_no;
    if (raw.rfind("#!expect", 0) == 0) {
      std::map<std::string, std::string> kv;
      for (const auto& tok : split_ws(raw.substr(8))) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) fail(line_no, "bad expectation token '" + tok + "'");
        kv[tok.substr(0, eq)] = tok.substr(eq + 1);
      }
      ws.expectations.push_back(std::move(kv));
      continue;
    }
    std::string line = raw.substr(0, raw.find('#'));
    auto toks = split_ws(line);
    if (toks.empty()) continue;

    const std::string& head = toks[0];
    if (head == "algebra" || head == "metric" || head == "subspace") {
      flush();
      if (head == "algebra") {
        if (toks.size() != 2) fail(line_no, "expected: algebra NAME");
        block = Block::Algebra;
      } else {
        if (toks.size() != 4 || toks[2] != "on")
          fail(line_no, "expected: " + head + " NAME on ALGEBRA");
        block = head == "metric" ? Block::Metric : Block::Subspace;
        block_algebra = toks[3];
      }
      check_fresh_name(head, toks[1], line_no);
      block_name = toks[1];
      block_line = line_no;
    } else if (head == "dim") {
      if (block != Block::Algebra) fail(line_no, "'dim' outside an algebra block");
      if (toks.size() != 2) fail(line_no, "expected: dim N");
      declared_dim = static_cast<Index>(std::stol(toks[1]));
    } else if (head == "salamon") {
      if (block != Block::Algebra) fail(line_no, "'salamon' outside an algebra block");
      auto start = line.find("salamon");
      salamon_text = line.substr(start + 7);
      block_line = line_no;
    } else if (head == "g") {
      if (block != Block::Metric) fail(line_no, "'g' outside a metric block");
      if (toks.size() != 4) fail(line_no, "expected: g I J P/Q");
      gram_entries.emplace_back(static_cast<Index>(std::stol(toks[1])),
                                static_cast<Index>(std::stol(toks[2])),
                                parse_rat_at(toks[3], line_no), line_no);
    } else if (head == "context") {
      auto start = line.find("context");
      std::string rest = line.substr(start + 7);
      size_t b = rest.find_first_not_of(" \t");
      size_t e = rest.find_last_not_of(" \t");
      if (b == std::string::npos) fail(line_no, "empty context");
      ws.context = rest.substr(b, e - b + 1);
    } else if (head == "span") {
      if (block != Block::Subspace) fail(line_no, "'span' outside a subspace block");
      auto start = line.find("span");
      span_lines.emplace_back(line.substr(start + 4), line_no);
    } else {
      fail(line_no, "unknown directive '" + head + "'");
    }
  }
  flush();
  return ws;
}

Workspace parse_lie_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lie_text(buf.str());
}

std::vector<CorpusEntry> corpus() {
  const char* env = std::getenv("MLIE_CORPUS_DIR");
  std::string dir = env ? env :
#ifdef MLIE_CORPUS_DIR
                        MLIE_CORPUS_DIR
#else
                        "data"
#endif
      ;
  std::vector<CorpusEntry> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".lie") continue;
    out.push_back({entry.path().stem().string(), entry.path().string()});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

}  // namespace mlie
