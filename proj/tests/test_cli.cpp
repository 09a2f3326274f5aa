#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "locsid/cli.hpp"
#include "locsid/io.hpp"
#include "locsid/kernel.hpp"

using namespace locsid;

namespace {

struct Output {
  int code = 0;
  std::string out;
  std::string err;
};

Output call(const std::vector<std::string>& args)
{
  std::ostringstream out;
  std::ostringstream err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text)
{
  auto path = std::filesystem::temp_directory_path() / ("locsid_cli_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("density of a single edge under the constant kernel")
{
  auto g = temp_file("edge.json", dump_json(graph_to_json(path_graph(2))));
  auto w = temp_file("one.json", dump_json(kernel_to_json(RationalKernel::constant(Rational(1, 3)))));
  auto r = call({"density", g, w});
  CHECK(r.code == exit_ok);
  CHECK(parse_json(r.out)["value"] == "1/3");
}

TEST_CASE("sample output reads back as the same kernel")
{
  auto r = call({"sample", "--blocks", "3", "--seed", "4", "--random-measures"});
  REQUIRE(r.code == exit_ok);
  RationalKernel k = rational_kernel_from_json(parse_json(r.out));
  SampleOptions s;
  s.blocks = 3;
  s.seed = 4;
  s.measures = MeasureMode::random;
  CHECK(k.values() == sample_kernel(s).values());
  CHECK(k.row_measures() == sample_kernel(s).row_measures());
}

TEST_CASE("exit codes")
{
  CHECK(call({}).code == exit_usage);
  CHECK(call({"sample"}).code == exit_usage);
  CHECK(call({"density", "/nonexistent/a.json", "/nonexistent/b.json"}).code == exit_usage);
  // An expected failure of a suspected erratum does not fail the run.
  CHECK(call({"check", "C4-UPPER-LITERAL", "--trials", "2"}).code == exit_ok);
  CHECK(call({"check", "NO-SUCH-ENTRY"}).code == exit_usage);

  auto g = temp_file("c4.json", dump_json(graph_to_json(cycle_graph(4))));
  auto far = temp_file("far.json", dump_json(kernel_to_json(affine(rank_one_sign_kernel(), Rational(1, 2), Rational(1)))));
  auto r = call({"verify", g, far, "--variant", "close"});
  CHECK(r.code == exit_negative);
  CHECK(parse_json(r.out)["verdict"] == "hypotheses-failed");
}

TEST_CASE("malformed input reports a byte position")
{
  auto bad = temp_file("bad.json", "{\"nodes\": [");
  auto r = call({"density", bad, bad});
  CHECK(r.code == exit_usage);
  CHECK(r.err.find("error: ") == 0);
  CHECK(r.err.find("byte") != std::string::npos);
}

TEST_CASE("numbers accept fractions and powers of two")
{
  auto g = temp_file("c4b.json", dump_json(graph_to_json(cycle_graph(4))));
  auto w = temp_file("w.json", dump_json(kernel_to_json(RationalKernel::constant(Rational(1)))));
  auto a = call({"verify", g, w, "--variant", "reg", "--eps", "2^-40"});
  auto b = call({"verify", g, w, "--variant", "reg", "--eps", "1/1099511627776"});
  CHECK(a.code == exit_ok);
  CHECK(a.out == b.out);
}
