#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tricover/census.hpp"
#include "tricover/cli.hpp"
#include "tricover/io.hpp"

using namespace tricover;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines_with(const std::string& text, const std::string& kind) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.rfind(kind + " ", 0) == 0) out.push_back(line);
  return out;
}

bool has(const std::string& line, const std::string& field) { return (" " + line + " ").find(" " + field + " ") != std::string::npos; }

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("tricover_test_" + name);
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("validate and homology") {
  const Run v = run({"validate", "census:s2xs1", "--format", "records"});
  CHECK(v.code == 0);
  CHECK(has(lines_with(v.out, "validate").at(0), "ok=yes"));
  const Run h = run({"homology", "census:t3", "--format", "records"});
  CHECK(h.code == 0);
  CHECK(has(lines_with(h.out, "homology").at(0), "b1=3"));
}

TEST_CASE("malformed input exits 1 with a line number") {
  const auto path = temp_file("bad.tri", "tets 1\ng 0 0 -> 0 1 120\ng 0 1 -> 0 0 2x1\n");
  const Run r = run({"validate", path.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("line 3") != std::string::npos);
  std::filesystem::remove(path);
  CHECK(run({"validate", "/nonexistent/tricover.tri"}).code == 1);
  CHECK(run({"validate", "census:nothing"}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"cover", "census:t3", "-q", "cyclic:0"}).code == 1);
}

TEST_CASE("an invalid triangulation is a validation failure") {
  Triangulation t = census::s3();
  t.clear_gluing(0, 0);
  t.clear_gluing(0, 1);
  const auto path = temp_file("open.tri", triangulation_to_string(t));
  const Run r = run({"validate", path.string(), "--format", "records"});
  CHECK(r.code == 1);
  CHECK(has(lines_with(r.out, "validate").at(0), "ok=no"));
  std::filesystem::remove(path);
}

TEST_CASE("certify on a degree-4 cover of S2xS1") {
  const Run skipped = run({"certify", "census:s2xs1", "-q", "cyclic:4", "--format", "records"});
  CHECK(skipped.code == 0);
  CHECK(has(lines_with(skipped.out, "certify").at(0), "found=skipped"));
  const Run forced = run({"certify", "census:s2xs1", "-q", "cyclic:4", "--force", "--format", "records"});
  CHECK(forced.code == 0);
  const std::string line = lines_with(forced.out, "certify").at(0);
  CHECK(has(line, "b1=1"));
  CHECK(has(line, "verdict=AGREE"));
  // The minimal cut of this Cayley graph admits no unit certificate; degree 9 is the first that does.
  CHECK(has(line, "found=no"));
  const Run nine = run({"certify", "census:s2xs1", "-q", "cyclic:9", "--force", "--format", "records"});
  CHECK(has(lines_with(nine.out, "certify").at(0), "found=yes"));
}

TEST_CASE("sweep over the three-torus") {
  const Run r = run({"sweep", "census:t3", "--degrees", "2..8", "--format", "records"});
  CHECK(r.code == 0);
  const auto rows = lines_with(r.out, "row");
  REQUIRE(rows.size() == 7);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(has(rows[i], "degree=" + std::to_string(i + 2)));
    CHECK(has(rows[i], "b1=3"));
    CHECK(has(rows[i], "verdict=AGREE"));
  }
}

TEST_CASE("surface and ledger") {
  const Run s = run({"surface", "census:t3", "-q", "cyclic:3", "--format", "records"});
  CHECK(s.code == 0);
  for (const auto& b : lines_with(s.out, "bound")) CHECK(has(b, "holds=yes"));
  const Run l = run({"ledger", "splitting chiF=-6 chis=-4,-2,-4", "--pigeonhole", "9,10,100", "--format", "records"});
  CHECK(l.code == 0);
  CHECK(has(lines_with(l.out, "expansion").at(0), "terms=2,1,1,2"));
  CHECK(has(lines_with(l.out, "union_bounds").at(0), "component_bound=9"));
  CHECK(has(lines_with(l.out, "pigeonhole").at(0), "bound=12600"));
  const Run bad = run({"ledger", "splitting chiF=-2 chis=-2,-2,-2", "--format", "records"});
  CHECK(bad.code == 1);
}

TEST_CASE("output is deterministic") {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {"sweep", "census:t3", "--degrees", "2..5"},
           {"surface", "census:t3", "-q", "cyclic:4", "--format", "records"},
           {"cheeger", "census:s2xs1", "-q", "cyclic:6"},
           {"presentation", "census:quaternionic", "--format", "records"}}) {
    const Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("cover writes a triangulation that parses back") {
  const auto path = std::filesystem::temp_directory_path() / "tricover_test_cover.tri";
  const Run r = run({"cover", "census:s2xs1", "-q", "cyclic:3", "--out", path.string()});
  CHECK(r.code == 0);
  const Triangulation t = read_triangulation_file(path.string());
  CHECK(t.size() == 6);
  CHECK(validate(t).ok());
  std::filesystem::remove(path);
  const Run v = run({"homology", path.string()});
  CHECK(v.code == 1);
}

}  // TEST_SUITE
