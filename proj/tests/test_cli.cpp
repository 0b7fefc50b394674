#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "trilin/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "trilin");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = trilin::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Outcome& o) { return nlohmann::json::parse(o.out); }

}  // namespace

TEST_CASE("solve json") {
  const auto o = call({"solve", "--sides", "3,4,5", "--weights", "1,1,1", "--json"});
  CHECK(o.code == 0);
  CHECK(o.out ==
        "{\"kind\":\"Min\",\"value\":2.88,\"point_bary\":[0.36,0.64,1.0],\"J\":50.0,\"case\":\"1.1\","
        "\"region_M\":\"InteriorSigma\",\"region_N\":\"InteriorSigma\",\"diagnostics\":[]}\n");
  CHECK(o.err.empty());
  // Byte-stable across invocations.
  CHECK(call({"solve", "--sides", "3,4,5", "--weights", "1,1,1", "--json"}).out == o.out);

  const auto v = call({"solve", "--vertices", "3,4;0,0;3,0", "--weights", "1,1,1", "--json"});
  CHECK(v.code == 0);
  CHECK(json_of(v)["value"] == 2.88);
}

TEST_CASE("solve verdicts") {
  const auto none = json_of(call({"solve", "--sides", "3,4,5", "--weights", "2,-1,-1", "--json"}));
  CHECK(none["kind"] == "NoExtremum");
  CHECK(none["case"] == "3.2");
  CHECK(none["value"].is_null());
  CHECK(!none.contains("point_bary"));
  CHECK(none["J"] == -36.5);

  const auto set = json_of(call({"solve", "--sides", "3,4,5", "--weights", "1,0,0", "--json"}));
  CHECK(set["kind"] == "DegenerateMinSet");
  CHECK(set["point_set"] == "BC");
  CHECK(!set.contains("point_bary"));

  const auto side = json_of(call({"solve", "--sides", "3,4,5", "--weights", "-1,10,10", "--json"}));
  CHECK(side["kind"] == "Min");
  CHECK(side["case"] == "1.2");
  CHECK(side["region_M"] == "SideRegionInCircle(A)");
  CHECK(side["region_N"] == "VerticalRegion(A)");

  const auto human = call({"solve", "--sides", "3,4,5", "--weights", "1,1,1"});
  CHECK(human.code == 0);
  CHECK(human.out.find("kind         Min\n") != std::string::npos);
  CHECK(human.out.find("case         1.1\n") != std::string::npos);
}

TEST_CASE("twelve significant digits") {
  const auto o = call({"solve", "--sides", "3,4,5", "--weights", "-1,10,10", "--json"});
  CHECK(o.out.find("\"value\":-29.387755102") != std::string::npos);
  CHECK(o.out.find("-29.3877551020") == std::string::npos);
}

TEST_CASE("conjugate classify eval center") {
  const auto c = call({"conjugate", "--sides", "3,4,5", "--point-bary", "1,1,1"});
  CHECK(c.code == 0);
  CHECK(c.out.find("0.36:0.64:1") != std::string::npos);

  const auto cx = json_of(call({"conjugate", "--sides", "3,4,5", "--point-xy", "2.04,0.72", "--json"}));
  CHECK(cx["point_bary"][0].get<double>() == doctest::Approx(1.0));
  CHECK(cx["point_bary"][2].get<double>() == doctest::Approx(1.0));

  const auto cl = json_of(call({"classify", "--sides", "3,4,5", "--point-bary", "-1,1,1", "--json"}));
  CHECK(cl["region"] == "SideRegionOutsideCircle(A)");
  CHECK(cl["J"] == 32.0);
  CHECK(cl["inside_circumcircle"] == false);

  const auto side = json_of(call({"classify", "--sides", "3,4,5", "--point-bary", "0,1,1", "--json"}));
  CHECK(side["region"] == "OnSideline(BC)");
  CHECK(side["J"].is_null());

  const auto e = json_of(call({"eval", "--sides", "3,4,5", "--weights", "1,1,1", "--point-tri", "1,1,1", "--json"}));
  CHECK(e["F"] == 3.0);

  const auto k = json_of(call({"center", "--sides", "3,4,5", "--name", "symmedian", "--json"}));
  CHECK(k["point_bary"] == nlohmann::json::parse("[0.36,0.64,1.0]"));
  CHECK(k["point_tri"] == nlohmann::json::parse("[0.72,0.96,1.2]"));
}

TEST_CASE("inequality") {
  const auto r = json_of(call({"inequality", "--sides", "3,4,5", "--weights", "1,1,1", "--x-center", "incenter", "--json"}));
  CHECK(r["lhs"] == 3.0);
  CHECK(r["rhs"] == 2.88);
  CHECK(r["slack"] == 0.12);
  CHECK(r["tight"] == false);
  const auto t = json_of(call({"inequality", "--sides", "3,4,5", "--weights", "1,1,1", "--x-bary", "9,16,25", "--json"}));
  CHECK(t["tight"] == true);
  CHECK(call({"inequality", "--sides", "3,4,5", "--weights", "2,-1,-1", "--x-bary", "1,1,1"}).code == 3);
}

TEST_CASE("exit codes") {
  CHECK(call({"solve", "--sides", "1,1,2", "--weights", "1,1,1"}).code == 2);
  CHECK(call({"solve", "--sides", "3,4,5", "--weights", "1,1"}).code == 2);
  CHECK(call({"solve", "--sides", "3,4,-5", "--weights", "1,1,1"}).code == 2);
  CHECK(call({"solve", "--sides", "3,4,5", "--weights", "0,0,0"}).code == 2);
  CHECK(call({"solve", "--sides", "3,4,5", "--vertices", "0,0;1,0;0,1", "--weights", "1,1,1"}).code == 2);
  CHECK(call({"solve", "--sides", "3,4,5"}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({"center", "--sides", "3,4,5", "--name", "nagel"}).code == 2);
  CHECK(call({"eval", "--sides", "3,4,5", "--weights", "1,1,1", "--point-tri", "1,1,5"}).code == 2);
  CHECK(call({"solve", "--sides", "3,4,5", "--weights", "1,1,1", "--tol", "-1"}).code == 2);

  const auto vtx = call({"conjugate", "--sides", "3,4,5", "--point-bary", "1,0,0"});
  CHECK(vtx.code == 3);
  CHECK(!vtx.err.empty());
  CHECK(vtx.out.empty());
  CHECK(call({"classify", "--sides", "3,4,5", "--point-bary", "1,-1,0"}).code == 3);
}

TEST_CASE("verify") {
  const auto v = call({"verify", "--trials", "30", "--seed", "1", "--json"});
  CHECK(v.code == 0);
  const auto j = json_of(v);
  CHECK(j["trials"] == 30);
  CHECK(j["ok"] == true);
  CHECK(call({"verify", "--trials", "30", "--seed", "1", "--json"}).out == v.out);
}

TEST_CASE("render") {
  const auto path = (std::filesystem::temp_directory_path() / "trilin_test_cli.svg").string();
  const auto r = call({"render", "--sides", "3,4,5", "--out", path, "--level", "2.9", "--weights", "1,1,1", "--mark",
                       "symmedian", "--mark", "centroid", "--json"});
  CHECK(r.code == 0);
  CHECK(json_of(r)["markers"] == 2);
  std::ifstream in(path);
  const std::string svg((std::istreambuf_iterator<char>(in)), {});
  CHECK(svg.find("class=\"level\"") != std::string::npos);
  std::filesystem::remove(path);
  CHECK(call({"render", "--sides", "3,4,5", "--out", "/nonexistent-dir/x.svg"}).code == 2);
}
