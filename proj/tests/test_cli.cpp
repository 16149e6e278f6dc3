#include <doctest.h>

#include "corona/cli.hpp"

#include <json.hpp>

#include <filesystem>
#include <sstream>

using namespace corona;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count --json") {
  const auto r = run({"count", "--shape", "hexagon", "--sides", "1", "--method", "brute", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["total"] == "198");
  CHECK(j["shape"] == "hexagon");
  CHECK(j["method"] == "brute");
  CHECK(j["sides"] == nlohmann::json::array({1}));
  CHECK(j["sizes"] == nlohmann::json::array({9, 10, 11, 12}));
  CHECK(j["counts"] == nlohmann::json::array({2, 36, 96, 64}));
  CHECK(j["algebraic_extension"] == false);
}

TEST_CASE("count text output for each method") {
  for (const char* m : {"closed", "transfer", "brute"}) {
    const auto r = run({"count", "--shape", "gen-hexagon", "--sides", "1,2,1", "--method", m});
    CHECK(r.code == 0);
    CHECK(r.out.find("total: 363") != std::string::npos);
    CHECK(r.out.find("13 lozenges: 168") != std::string::npos);
  }
  const auto zero = run({"count", "--shape", "diamond", "--sides", "0"});
  CHECK(zero.code == 0);
  CHECK(zero.out.find("algebraic extension") != std::string::npos);
  CHECK(zero.out.find("total: 18") != std::string::npos);
}

TEST_CASE("large closed-form counts serialize exactly") {
  const auto r = run({"count", "--shape", "hexagon", "--sides", "1000000", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["counts"][3] == "1000006000015000020000015000006000001");
  CHECK(j["counts"][0] == 2);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--shape", "gen-diamond", "--sides", "1,2", "--methods", "closed,transfer,brute"});
  CHECK(r.code == 0);
  CHECK(r.out.find("closed: total 146") != std::string::npos);
  CHECK(r.out.find("transfer: total 146") != std::string::npos);
  CHECK(r.out.find("brute: total 146") != std::string::npos);
  CHECK(r.out.find("agree") != std::string::npos);
}

TEST_CASE("mismatch description") {
  cli::CountReport a, b;
  a.method = cli::Method::closed;
  b.method = cli::Method::brute;
  a.by_size = {{9, 2}, {10, 36}};
  a.total = 38;
  b.by_size = a.by_size;
  b.total = 38;
  CHECK(cli::describe_mismatch({a, b}).empty());
  b.by_size[10] = 35;
  b.total = 37;
  const auto diff = cli::describe_mismatch({a, b});
  CHECK(diff.find("10 lozenges: closed=36 brute=35") != std::string::npos);
  CHECK(diff.find("total: closed=38 brute=37") != std::string::npos);
}

TEST_CASE("gf") {
  const auto r = run({"gf", "--shape", "diamond", "--terms", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "18, 83, 258\n");
  CHECK(run({"gf", "--shape", "hexagon", "--terms", "2"}).out == "18, 198\n");
  CHECK(run({"gf", "--shape", "gen-diamond", "--terms", "2"}).code == 2);
  CHECK(run({"gf", "--shape", "hexagon", "--terms", "0"}).code == 2);
}

TEST_CASE("table") {
  const auto r = run({"table", "--shape", "gen-diamond", "--max", "2", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 4);
  CHECK(j[1]["sides"] == nlohmann::json::array({1, 2}));
  CHECK(j[1]["total"] == "146");
  CHECK(j[3]["total"] == "258");

  const auto text = run({"table", "--shape", "hexagon", "--max", "3", "--method", "transfer"});
  CHECK(text.out == "1\t198\n2\t1298\n3\t5778\n");
}

TEST_CASE("render writes files in canonical order") {
  const auto dir = std::filesystem::temp_directory_path() / "corona_cli_render_test";
  std::filesystem::remove_all(dir);
  const auto r = run({"render", "--shape", "diamond", "--sides", "1", "--out", dir.string(), "--limit", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("wrote 5 of 83") != std::string::npos);
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    (void)e;
    ++files;
  }
  CHECK(files == 5);
  CHECK(std::filesystem::exists(dir / "diamond_1_0.svg"));
  CHECK(std::filesystem::exists(dir / "diamond_1_4.svg"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("invalid arguments exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"count", "--shape", "triangle", "--sides", "1"}).code == 2);
  CHECK(run({"count", "--shape", "hexagon", "--sides", "1,2"}).code == 2);
  CHECK(run({"count", "--shape", "hexagon", "--sides", "x"}).code == 2);
  CHECK(run({"count", "--shape", "hexagon", "--sides", "-1"}).code == 2);
  CHECK(run({"count", "--shape", "hexagon", "--sides", "0", "--method", "brute"}).code == 2);
  CHECK(run({"count", "--shape", "hexagon", "--sides", "0", "--method", "transfer"}).code == 2);
  CHECK(run({"count", "--shape", "hexagon", "--sides", "0", "--method", "transfer", "--algebraic"}).code == 0);
  CHECK(run({"count", "--shape", "hexagon", "--sides", "1", "--method", "magic"}).code == 2);
  CHECK(run({"verify", "--shape", "hexagon", "--sides", "1", "--methods", "closed,nope"}).code == 2);
  CHECK(run({"count", "--shape", "hexagon"}).code == 2);
}

TEST_CASE("brute-force perimeter ceiling") {
  const auto refused = run({"count", "--shape", "hexagon", "--sides", "6", "--method", "brute"});
  CHECK(refused.code == 2);
  CHECK(refused.err.find("--force") != std::string::npos);
  CHECK(run({"count", "--shape", "hexagon", "--sides", "5", "--method", "brute"}).code == 0);
  CHECK(run({"count", "--shape", "diamond", "--sides", "4", "--method", "brute", "--max-perimeter", "10"}).code == 2);
  const auto forced = run({"count", "--shape", "hexagon", "--sides", "6", "--method", "brute", "--force"});
  CHECK(forced.code == 0);
  CHECK(forced.out.find("total: 132498") != std::string::npos);
}
