#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "ptchain/cli.hpp"

using namespace ptchain;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

std::vector<std::string> cells(const std::string& line) {
  std::vector<std::string> v;
  std::istringstream in(line);
  for (std::string c; std::getline(in, c, ',');) v.push_back(c);
  return v;
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(cli::format_number(0.5) == "0.5");
  CHECK(cli::format_number(-0.0) == "0");
  CHECK(cli::format_number(1.0 / 3) == "0.333333333333");
  CHECK(cli::format_number(std::nan("")) == "nan");
}

TEST_CASE("eep") {
  const auto r = call({"eep", "--dim", "6"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,g_squared,g\n1,5,2.2360679775\n2,8,2.82842712475\n3,9,3\n");
}

TEST_CASE("spectrum") {
  SECTION("rescaled input") {
    const auto r = call({"spectrum", "--dim", "4", "--t", "1/100", "--g", "0,4/9"});
    CHECK(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 5);
    CHECK(l[0] == "level,re_E,im_E");
    CHECK(r.err == "all_real=true\n");
  }
  SECTION("raw input, zero coupling") {
    const auto r = call({"spectrum", "--dim", "3", "--raw", "0"});
    CHECK(r.out == "level,re_E,im_E\n1,-2,0\n2,0,0\n3,2,0\n");
  }
  SECTION("missing couplings") { CHECK(call({"spectrum", "--dim", "4"}).code == 1); }
  SECTION("wrong coupling count") { CHECK(call({"spectrum", "--dim", "4", "--raw", "1,2,3"}).code == 1); }
  SECTION("bad rational") { CHECK(call({"spectrum", "--dim", "4", "--raw", "1,x"}).code == 1); }
}

TEST_CASE("curve") {
  const std::vector<std::string> args{"curve", "--dim", "4", "--g", "0,0.2444", "--t-min", "0", "--t-max", "0.5",
                                      "--steps", "200"};
  const auto r = call(args);
  CHECK(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 201);
  CHECK(l[0] == "t,re_E1,im_E1,re_E2,im_E2,re_E3,im_E3,re_E4,im_E4");
  for (std::size_t i = 1; i < l.size(); ++i) {
    const auto c = cells(l[i]);
    REQUIRE(c.size() == 9);
    for (std::size_t k = 2; k < c.size(); k += 2) CHECK(c[k] == "0");
  }
  CHECK(cells(l[1])[1] == "0");
  CHECK(cells(l.back())[0] == "0.5");

  SECTION("byte stable") { CHECK(call(args).out == r.out); }

  SECTION("file output") {
    const std::string path = "ptchain_test_curve.csv";
    auto with_file = args;
    with_file.push_back("--out");
    with_file.push_back(path);
    CHECK(call(with_file).code == 0);
    std::ifstream in(path, std::ios::binary);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == r.out);
    std::remove(path.c_str());
  }
  SECTION("bad grid") {
    CHECK(call({"curve", "--dim", "4", "--g", "0,0", "--t-min", "1", "--t-max", "0", "--steps", "5"}).code == 1);
  }
}

TEST_CASE("leading") {
  const auto r = call({"leading", "--dim", "4", "--shift", "7"});
  CHECK(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 3);
  CHECK(l[0] == "k,base,re_L,im_L,slope,linearized_L");
  CHECK(l[1] == "1,1,2,0,1/8,1.875");
  CHECK(l[2] == "2,9,8,0,-1/8,8.125");
  const auto g = call({"leading", "--dim", "4", "--g", "-1/36,0"});
  CHECK(g.err == "shift=1\n");
  CHECK(call({"leading", "--dim", "3", "--shift", "1"}).code == 1);
}

TEST_CASE("critical") {
  const auto r = call({"critical", "--dim", "6"});
  CHECK(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 4);
  CHECK(l[0] == "kind,shift,L,sqrt_L");
  CHECK(l[2] == "zero_root,225,0,0");
  CHECK(std::stod(cells(l[1])[1]) == Catch::Approx(-323.1387184).margin(1e-6));
  CHECK(std::stod(cells(l[3])[3]) == Catch::Approx(4.326893054).margin(1e-8));
}

TEST_CASE("boundary-n4") {
  const auto r = call({"boundary-n4", "--beta-max", "0.5", "--steps", "10"});
  CHECK(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 11);
  CHECK(l[0] == "beta,alpha_lower,alpha_upper");
  CHECK(cells(l[10])[0] == "0.5");
  CHECK(cells(l[10])[1] == "0.4375");
  CHECK(call({"boundary-n4", "--beta-max", "0.7", "--steps", "10"}).code == 1);
}

TEST_CASE("thresholds") {
  const auto r = call({"thresholds", "--dim", "4", "--g", "0,4/9"});
  CHECK(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 2);
  CHECK(l[0] == "t_qh,t_ph,t_h");
  const auto c = cells(l[1]);
  CHECK(c[1] == "0.75");
  CHECK(c[2] == "1");
  const auto none = call({"thresholds", "--dim", "4", "--g", "0,0", "--t-hi", "0.5"});
  CHECK(lines(none.out)[1].rfind(",1,1") != std::string::npos);
}

TEST_CASE("verify") {
  const auto r = call({"verify", "--dim-max", "10", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["dimension"] == 10);
  REQUIRE(j["checks"].is_array());
  CHECK(j["checks"].size() > 50);
  for (const auto& c : j["checks"]) {
    CHECK(c["status"] == "pass");
    CHECK(c.contains("name"));
    CHECK(c.contains("expected"));
    CHECK(c.contains("actual"));
  }
  for (const char* small : {"4", "5", "6", "7"}) CHECK(call({"verify", "--dim-max", small}).code == 0);
  CHECK(call({"verify", "--dim-max", "3"}).code == 1);
  CHECK(call({"verify", "--dim-max", "6", "--format", "xml"}).code == 1);
}

TEST_CASE("argument errors") {
  CHECK(call({}).code == 1);
  CHECK(call({"frobnicate"}).code == 1);
  CHECK(call({"eep"}).code == 1);
  CHECK(call({"eep", "--dim", "1"}).code == 1);
  const auto r = call({"eep", "--dim", "1"});
  CHECK(r.err.rfind("error: ", 0) == 0);
  CHECK(r.out.empty());
}
