#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(SOERGEL_FORGE) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  std::array<char, 4096> buf;
  while (size_t k = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), k);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

nlohmann::json js(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("redwords") {
  auto a = run("redwords --J 1,2");
  CHECK(a.code == 0);
  CHECK(js(a)["schema"] == "soergel-forge/1");
  CHECK(js(a)["count"] == 2);
  CHECK(js(run("redwords --J 1,2,3"))["count"] == 16);
  CHECK(js(run("redwords --J 1"))["count"] == 1);
  CHECK(run("redwords --J 1,2 --format text").out == "121\n212\n");
  CHECK(js(run("redwords --word 1213"))["count"] == 3);
}

TEST_CASE("graph") {
  auto g = js(run("graph --J 1,2"));
  CHECK(g["graph"]["vertices"].size() == 2);
  CHECK(g["graph"]["source"] == nlohmann::json({1, 2, 1}));
  auto d = run("graph --J 1,3 --format dot --conflated");
  CHECK(d.code == 0);
  CHECK(d.out.find("digraph") != std::string::npos);
  CHECK(js(run("graph --J 1,2,3 --conflated"))["graph"]["vertices"].size() == 8);
}

TEST_CASE("zmat") {
  auto z = js(run("zmat --J 1,2"));
  CHECK(z["morphism"]["matrix"].size() == 8);
  CHECK(z["J"] == nlohmann::json({1, 2}));
  CHECK(js(run("zmat --J 1"))["morphism"]["matrix"].size() == 2);
}

TEST_CASE("verify") {
  auto v = run("verify orientation");
  CHECK(v.code == 0);
  auto j = js(v);
  CHECK(j["status"] == "pass");
  CHECK(j["checks"].size() == 3);
  // sorted by check name
  CHECK(j["checks"][0]["check"] <= j["checks"][1]["check"]);
  CHECK(run("verify aborts --J 1,2").code == 0);
  CHECK(run("verify demazure --n 2 --format text").out.find("pass demazure") != std::string::npos);
}

TEST_CASE("verify reports failures with exit code 1") {
  // the literal T_J formula disagrees with the pairing on some words
  auto t = run("verify tj --J 1");
  CHECK(t.code == 1);
  auto j = js(t);
  CHECK(j["status"] == "fail");
  bool witness = false;
  for (auto& c : j["checks"])
    if (c["status"] == "fail" && c.contains("witness")) witness = true;
  CHECK(witness);
}

TEST_CASE("homdim and dualbasis") {
  auto h = run("homdim 1 1 --n 2 --degree-lo 0 --degree-hi 4");
  CHECK(h.code == 0);
  auto j = js(h);
  CHECK(j["graded_rank"] == "v^2 + 1");
  CHECK(j["table"].size() == 5);
  CHECK(j["table"][0]["dim"] == 1);
  auto d = js(run("dualbasis --J 1,2"));
  CHECK(d["entries"].size() == 6);
}

TEST_CASE("usage errors and budget") {
  CHECK(run("").code == 2);
  CHECK(run("verify nosuch").code == 2);
  CHECK(run("redwords --J 1,9").code == 2);
  CHECK(run("--n 9 redwords --J 1").code == 2);
  CHECK(run("zmat --J 1,2 --format dot").code == 2);
  CHECK(run("homdim 1 12x").code == 2);
  auto b = run("verify zidem --budget-seconds 0.2");
  CHECK(b.code == 3);
  CHECK(js(b)["status"] == "budget_exceeded");
}
