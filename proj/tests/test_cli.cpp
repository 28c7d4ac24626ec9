#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "entif/analysis.hpp"
#include "entif/cli.hpp"
#include "entif/constructors.hpp"
#include "entif/errors.hpp"
#include "entif/frame_io.hpp"

using namespace entif;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_dir() {
  const fs::path p = fs::temp_directory_path() / "entif_cli_tests";
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("JSON frame files round-trip big integers") {
  FrameFile f;
  f.matrix = entif_2d(12);
  f.metadata = FrameMetadata{"two-dim", {{"count", "24"}}, 1};
  const std::string text = to_json(f);
  CHECK(text.find("\"format\": \"entif-frame-v1\"") != std::string::npos);
  const FrameFile back = from_json(text);
  CHECK(back.matrix == f.matrix);
  CHECK(*back.metadata == *f.metadata);
  CHECK(to_json(back) == text);
}

TEST_CASE("CSV frames") {
  const FrameMatrix a{{1, -2, 3}, {0, 5, -6}};
  CHECK(to_csv(a) == "1,-2,3\n0,5,-6\n");
  CHECK(from_csv(" 1, -2,3\n0,5,-6\n\n") == a);
  CHECK(parse_frame("1,2\n3,4\n").matrix == FrameMatrix{{1, 2}, {3, 4}});
  CHECK_THROWS_AS(from_csv("1,2\n3\n"), ParseError);
  CHECK_THROWS_AS(from_csv("1,x\n"), ParseError);
  CHECK_THROWS_AS(from_csv(""), ParseError);
}

TEST_CASE("malformed JSON is a parse error") {
  CHECK_THROWS_AS(from_json("{"), ParseError);
  CHECK_THROWS_AS(from_json(R"({"format":"other","dim":1,"count":1,"entries":[["1"]]})"), ParseError);
  CHECK_THROWS_AS(from_json(R"({"format":"entif-frame-v1","dim":1,"count":2,"entries":[["1"]]})"), ParseError);
  CHECK_THROWS_AS(from_json(R"({"format":"entif-frame-v1","dim":1,"count":1,"entries":[[1]]})"), ParseError);
  CHECK_THROWS_AS(from_json(R"({"format":"entif-frame-v1","dim":1,"count":1,"entries":[["1.5"]]})"), ParseError);
}

TEST_CASE("construct and verify the tetrahedron") {
  const fs::path file = temp_dir() / "tetra.json";
  const Run c = run({"construct", "simplex", "--dim", "3", "-o", file.string()});
  CHECK(c.code == kExitOk);
  CHECK(c.out == "dim=3 count=4 rank=3 frame=yes tight=4 norm_sq=3 equiangular=-1 entif=yes\n");
  const Run v = run({"verify", file.string()});
  CHECK(v.code == kExitOk);
  CHECK(v.out == c.out);
  const FrameFile f = read_frame_file(file);
  CHECK(f.metadata->recipe == "simplex");
  CHECK(f.metadata->parameters.at("dim") == "3");
}

TEST_CASE("two-dim construction is full spark") {
  const Run c = run({"construct", "two-dim", "--count", "8", "--spark"});
  CHECK(c.code == kExitOk);
  CHECK(c.out.find("spark=3") != std::string::npos);
  const fs::path file = temp_dir() / "two.csv";
  CHECK(run({"construct", "two-dim", "--count", "4", "-o", file.string()}).code == kExitOk);
  const Run v = run({"verify", file.string(), "--spark"});
  CHECK(v.out == "dim=2 count=4 rank=2 frame=yes tight=1250 norm_sq=625 equiangular=no spark=3 entif=yes\n");
}

TEST_CASE("error exit codes") {
  const Run s = run({"construct", "simplex", "--dim", "4"});
  CHECK(s.code == kExitImpossible);
  CHECK(s.err.find("odd-square-simplex-criterion") != std::string::npos);
  CHECK(s.err.find("odd squares") != std::string::npos);
  CHECK(run({"hadamard", "--order", "6"}).code == kExitUnsupportedOrder);
  CHECK(run({"construct", "hadamard-truncate", "--dim", "3", "--order", "28"}).code == kExitUnsupportedOrder);
  CHECK(run({"construct", "nonsense"}).code == kExitUsage);
  CHECK(run({"construct", "simplex"}).code == kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"feasible", "--dim", "4", "--count", "3"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);

  const fs::path bad = temp_dir() / "bad.json";
  std::ofstream(bad) << "{ not json";
  CHECK(run({"verify", bad.string()}).code == kExitParseError);
  CHECK(run({"verify", (temp_dir() / "missing.json").string()}).code == kExitParseError);

  const fs::path zero = temp_dir() / "zero.csv";
  std::ofstream(zero) << "0,0,0\n0,0,0\n";
  const Run z = run({"verify", zero.string()});
  CHECK(z.code == kExitNotFrame);
  CHECK(z.out.find("frame=no") != std::string::npos);
}

TEST_CASE("feasible command") {
  const Run a = run({"feasible", "--dim", "2", "--count", "9"});
  CHECK(a.code == kExitImpossible);
  CHECK(a.out.find("odd-count-2d-obstruction") != std::string::npos);
  CHECK(run({"feasible", "--dim", "5", "--count", "14"}).code == kExitUnknown);
  const Run e = run({"feasible", "--dim", "3", "--count", "12", "--json"});
  CHECK(e.code == kExitOk);
  CHECK(e.out.find("\"status\":\"Exists\"") != std::string::npos);
}

TEST_CASE("hadamard and adjoin commands") {
  const fs::path h = temp_dir() / "h12.json";
  CHECK(run({"hadamard", "--order", "12", "-o", h.string()}).code == kExitOk);
  CHECK(read_frame_file(h).matrix == hadamard(12));

  const fs::path a = temp_dir() / "a.json";
  const fs::path b = temp_dir() / "b.json";
  const fs::path out = temp_dir() / "ab.json";
  CHECK(run({"construct", "dim5-even", "--param", "block=8", "-o", a.string()}).code == kExitOk);
  CHECK(run({"construct", "dim5-even", "--param", "block=10", "-o", b.string()}).code == kExitOk);
  const Run h18 = run({"adjoin", "h", a.string(), b.string(), "-o", out.string()});
  CHECK(h18.code == kExitOk);
  CHECK(h18.out == "dim=5 count=18 rank=5 frame=yes tight=18 norm_sq=5 equiangular=no entif=yes\n");
  const Run d = run({"adjoin", "diag", a.string(), a.string()});
  CHECK(d.out.rfind("dim=10 count=16", 0) == 0);
  const Run dbl = run({"adjoin", "double", a.string(), "--param", "c=2"});
  CHECK(dbl.out.rfind("dim=10 count=16 rank=10 frame=yes tight=64 norm_sq=40", 0) == 0);
  CHECK(run({"adjoin", "h", a.string()}).code == kExitUsage);
}

TEST_CASE("every construction kind builds and re-verifies identically") {
  const std::vector<std::vector<std::string>> commands{
      {"construct", "two-dim", "--count", "6"},
      {"construct", "three-dim", "--count", "8"},
      {"construct", "simplex", "--dim", "8"},
      {"construct", "hadamard-truncate", "--dim", "5", "--order", "12"},
      {"construct", "gensqr-1", "--param", "n=2"},
      {"construct", "gensqr-2"},
      {"construct", "gensqr-3"},
      {"construct", "gensqr-4"},
      {"construct", "gensqr-5", "--param", "b=3"},
      {"construct", "dim5-even", "--param", "a=2", "--param", "block=10"},
      {"construct", "gcd-adjoin", "--count", "30"},
      {"construct", "equal-norm", "--dim", "3", "--count", "7"},
      {"construct", "tight", "--dim", "4", "--count", "9"},
      {"construct", "almost-tight", "--dim", "3", "--count", "5", "--epsilon", "0.25", "--seed", "9"},
      {"construct", "sylvester", "--param", "k=3"},
      {"construct", "paley", "--param", "q=11"},
  };
  int i = 0;
  for (auto cmd : commands) {
    CAPTURE(cmd[1]);
    const fs::path file = temp_dir() / ("kind" + std::to_string(i++) + ".json");
    cmd.insert(cmd.end(), {"--spark", "-o", file.string()});
    const Run first = run(cmd);
    REQUIRE(first.code == kExitOk);
    const std::string bytes = slurp(file);
    const Run second = run(cmd);
    CHECK(second.out == first.out);
    CHECK(slurp(file) == bytes);
    const Run v = run({"verify", file.string(), "--spark"});
    CHECK(v.code == kExitOk);
    CHECK(v.out == first.out.substr(0, first.out.find('\n') + 1));
    CHECK(run({"verify", file.string(), "--json"}).out ==
          format_report_json(analyze(read_frame_file(file).matrix)) + "\n");
  }
}
