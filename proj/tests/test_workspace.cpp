#include <doctest.h>

#include <nlohmann/json.hpp>

#include "mlie/cli.hpp"
#include "support.hpp"

using namespace mlie;

TEST_CASE("parse the bundled example file") {
  auto entries = corpus();
  REQUIRE(entries.size() == 5);
  std::string paper_path;
  for (const auto& e : entries)
    if (e.name == "paper") paper_path = e.path;
  REQUIRE(!paper_path.empty());

  Workspace ws = parse_lie_file(paper_path);
  REQUIRE(ws.algebras.size() == 1);
  REQUIRE(ws.metrics.size() == 1);
  REQUIRE(ws.subspaces.size() == 2);
  CHECK(ws.algebra("g").dim() == 5);
  CHECK(ws.algebra("g") == test::paper_algebra());
  CHECK(same(ws.metric("main").metric.gram(), test::paper_gram()));
  CHECK(ws.subspace("nil").subspace == Subspace::coordinate(ws.algebra("g"), {1, 2, 3}));
  CHECK(ws.subspace("h").subspace == Subspace::coordinate(ws.algebra("g"), {4, 5}));
  CHECK(!ws.expectations.empty());
}

TEST_CASE("span vectors may continue across lines") {
  Workspace ws = parse_lie_text(
      "algebra a\n  salamon (0,0,0)\n"
      "subspace s on a\n  span 1,0,0; 0,1,0\n  span 1,1,0\n");
  CHECK(ws.subspace("s").subspace.dim() == 2);
  CHECK(ws.subspace("s").subspace == Subspace::coordinate(ws.algebra("a"), {1, 2}));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(parse_lie_text("").algebras.empty());

  try {
    parse_lie_text("algebra a\n  dim 2\n  salamon (0,0)\nmetric m on a\n  g 1 2 1/0\n");
    FAIL("expected parse error");
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find("zero denominator") != std::string::npos);
    CHECK(std::string(e.what()).find("line 5") != std::string::npos);
  }

  CHECK_THROWS_AS(parse_lie_text("metric m on ghost\n  g 1 1 1\n"), parse_error);
  CHECK_THROWS_AS(parse_lie_text("algebra a\n salamon (0,0)\nalgebra a\n salamon (0)\n"),
                  parse_error);
  CHECK_THROWS_AS(parse_lie_text("algebra a\n  dim 3\n  salamon (0,0)\n"), parse_error);
  CHECK_THROWS_AS(parse_lie_text("bogus line\n"), parse_error);
  CHECK_THROWS_AS(parse_lie_text("algebra a\n  salamon (0,0,e12,e34)\n"), parse_error);
}

TEST_CASE("reports render exactly, without floating point") {
  Workspace ws = parse_lie_file(corpus()[4].path.find("paper") != std::string::npos
                                    ? corpus()[4].path
                                    : corpus()[4].path);
  // run einstein on the example
  for (const auto& e : corpus()) {
    if (e.name != "paper") continue;
    ws = parse_lie_file(e.path);
  }
  CliOptions opt;
  opt.command = "einstein";
  opt.metric = "main";
  Report rep = run_command(opt, ws);
  CHECK(rep.verdict == "Einstein");
  REQUIRE(rep.lambda.has_value());
  CHECK(*rep.lambda == Rat(4096, 175));
  CHECK(rep.exit_code == 0);

  std::string json_text = rep.json_text();
  CHECK(json_text.find("4096/175") != std::string::npos);

  auto parsed = nlohmann::json::parse(json_text);
  CHECK(parsed["lambda"] == "4096/175");
  CHECK(parsed["exit"] == 0);
  // the only JSON numbers are integers (the exit code); nothing is a float
  std::function<void(const nlohmann::json&)> walk = [&](const nlohmann::json& j) {
    if (j.is_number_float()) FAIL("floating point value in report JSON");
    if (j.is_object())
      for (const auto& [k, v] : j.items()) walk(v);
    if (j.is_array())
      for (const auto& v : j) walk(v);
  };
  walk(parsed);

  // lossless round trip
  CHECK(nlohmann::json::parse(parsed.dump()) == parsed);
  for (const auto& [name, m] : rep.matrices)
    for (const auto& row : parsed["matrices"][name])
      for (const auto& cell : row) CHECK(Rat::parse(cell.get<std::string>()).str() == cell);
}

TEST_CASE("exit codes through the full command line surface") {
  std::string sl2 = std::string(TEST_FILES_DIR) + "/sl2.lie";
  std::string paper;
  for (const auto& e : corpus())
    if (e.name == "paper") paper = e.path;

  auto run = [](std::vector<std::string> args) {
    std::vector<char*> argv;
    args.insert(args.begin(), "mlie");
    for (auto& a : args) argv.push_back(a.data());
    return run_cli(static_cast<int>(argv.size()), argv.data());
  };
  CHECK(run({"einstein", paper, "-m", "main"}) == 0);
  CHECK(run({"standard", paper, "-m", "main"}) == 1);
  CHECK(run({"nilradical", sl2}) == 3);                    // out of declared scope
  CHECK(run({"einstein", paper}) == 2);                    // missing -m
  CHECK(run({"einstein", "/nonexistent.lie", "-m", "x"}) == 2);
  CHECK(run({"bogus-command", paper}) == 2);
  CHECK(run({"adjoint", paper, "-m", "main", "--family", "adE5"}) == 0);
  // restriction to a subspace that is not closed under the bracket
  CHECK(run({"aw-correct", paper, "-m", "main", "--ideal", "h", "--family", "adE4,adE5"}) == 2);
}

TEST_CASE("--oracle never changes the verdict") {
  for (const auto& e : corpus()) {
    Workspace ws = parse_lie_file(e.path);
    for (const auto& [name, nm] : ws.metrics) {
      if (nm.metric.degenerate()) continue;
      CliOptions a, b;
      a.command = b.command = "einstein";
      a.metric = b.metric = name;
      b.oracle = true;
      Report ra = run_command(a, ws), rb = run_command(b, ws);
      CHECK(ra.verdict == rb.verdict);
      CHECK(ra.exit_code == rb.exit_code);
    }
  }
}

TEST_CASE("command dispatch and exit codes") {
  Workspace ws;
  for (const auto& e : corpus())
    if (e.name == "paper") ws = parse_lie_file(e.path);

  CliOptions opt;
  opt.command = "standard";
  opt.metric = "main";
  Report std_rep = run_command(opt, ws);
  CHECK(std_rep.verdict == "NoneExists");
  CHECK(std_rep.exit_code == 1);

  opt.command = "info";
  Report info = run_command(opt, ws);
  CHECK(info.verdict == "solvable");
  CHECK(info.exit_code == 0);

  opt.command = "nilradical";
  Report nil = run_command(opt, ws);
  CHECK(nil.verdict == "ok");
  bool has_dim = false;
  for (auto& [k, v] : nil.values)
    if (k == "dim") {
      has_dim = true;
      CHECK(v == Rat(3));
    }
  CHECK(has_dim);

  opt.command = "adjoint";
  opt.ideal = "nil";
  opt.family = {"adE5"};
  Report adj = run_command(opt, ws);
  RatMat sym = mat({{Rat(-14, 3), 0, Rat(32, 7)}, {0, -2, 0}, {Rat(1, 36), 0, Rat(-4, 3)}});
  bool saw = false;
  for (auto& [k, m] : adj.matrices)
    if (k == "symmetrized") {
      saw = true;
      CHECK(same(m, sym));
    }
  CHECK(saw);

  opt.command = "orthogonalize";
  opt.family = {};
  Report orth = run_command(opt, ws);
  bool vecs = false;
  for (auto& [k, m] : orth.matrices)
    if (k == "vectors") {
      vecs = true;
      CHECK(m(0, 2) == Rat(96));
      CHECK(m(2, 2) == Rat(71));
    }
  CHECK(vecs);

  opt.command = "einstein";
  opt.metric = "";
  opt.ideal = "";
  CHECK_THROWS_AS(run_command(opt, ws), error);  // missing -m
}
