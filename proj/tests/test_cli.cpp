#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + MODULI_CLI " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("moduli_cli_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("poly") {
  CHECK(run("poly 1 1").out == "odd_count=0: (b1^2 - 4)/48\n");
  CHECK(run("poly 0 4 --parity odd,odd,even,even").out == "(b1^2 + b2^2 + b3^2 + b4^2 - 2)/4\n");
  const Result r = run("poly 3 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("/4280706662400") != std::string::npos);
  const auto j = nlohmann::json::parse(run("poly 1 2 --format json").out);
  CHECK(j["g"] == 1);
  CHECK(j["classes"].size() == 3);
}

TEST_CASE("eval") {
  CHECK(run("eval 1 2 4 4").out == "7/4\n");
  CHECK(run("eval 0 3 1 1 2").out == "1\n");
  CHECK(run("eval 2 1 7").out == "0\n");
  CHECK(run("eval 2 1 8 --method recursive").out == "21/8\n");
  CHECK(run("eval 1 1 4 --method direct").out == "1/4\n");
  CHECK(run("count-direct 0 4 2 2 2 2").out == "3\n");
  const auto j = nlohmann::json::parse(run("eval 1 2 4 4 --format json").out);
  CHECK(j["value"] == "7/4");
}

TEST_CASE("dessins and fatgraphs") {
  const Result one = run("dessins 1 1 4");
  CHECK(one.out.find("weighted total: 1/4") != std::string::npos);
  CHECK(one.out.find("x=(1,1)") != std::string::npos);
  CHECK(run("dessins 0 3 2 2 2").out.find("weighted total: 1\n") != std::string::npos);
  CHECK(run("dessins 1 1 2").out == "weighted total: 0\n");
  const auto j = nlohmann::json::parse(run("fatgraphs 0 3 --format json").out);
  CHECK(j["fatgraphs"].size() == 7);
}

TEST_CASE("report and euler") {
  const auto r11 = nlohmann::json::parse(run("report 1 1").out);
  CHECK(r11["euler"]["closed"] == "-1/12");
  CHECK(r11["intersections"][0]["value"] == "1/24");
  const auto r04 = nlohmann::json::parse(run("report 0 4").out);
  CHECK(r04["euler"]["polynomial"] == "-1");
  bool found = false;
  for (const auto& e : r04["intersections"])
    if (e["d"] == nlohmann::json::parse("[1,0,0,0]")) found = e["value"] == "1";
  CHECK(found);
  const auto r21 = nlohmann::json::parse(run("report 2 1").out);
  CHECK(r21["intersections"][0]["value"] == "1/1152");
  CHECK(r21["census"][0]["c"] == "35/6");
  CHECK(run("euler 1 2 --fatgraphs").out == "closed:     1/12\npolynomial: 1/12\nfatgraphs:  1/12\n");
}

TEST_CASE("kernels") {
  const Result r = run("kernels --max-m 0");
  CHECK(r.out.find("S_0  even k: 1/12*k^3 - 1/3*k") != std::string::npos);
  CHECK(r.out.find("odd k:  1/12*k^3 - 1/12*k") != std::string::npos);
}

TEST_CASE("verification levels") {
  CHECK(run("verify 1 2").code == 0);
  CHECK(run("verify 0 5 --verify full").code == 0);
  CHECK(run("poly 2 1 --verify samples").code == 0);
}

TEST_CASE("exit codes") {
  CHECK(run("poly 0 2").code == 2);
  CHECK(run("eval 0 1 4").code == 2);
  CHECK(run("poly 3 5").code == 2);
  CHECK(run("dessins 2 2 2 2").code == 2);
  CHECK(run("eval 1 2 4").code == 2);
  CHECK(run("eval 1 1 0").code == 2);
  CHECK(run("poly 0 4 --parity odd,odd").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("determinism") {
  for (const char* args : {"poly 1 3 --format json", "fatgraphs 1 2", "report 2 1", "dessins 0 4 2 2 2 2"})
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("cache directory") {
  const auto dir = scratch("cache");
  const std::string flag = "--cache-dir " + dir.string();
  const std::string first = run(flag + " poly 1 2").out;
  CHECK(std::filesystem::exists(dir / "N_1_2.json"));
  CHECK(std::filesystem::exists(dir / "N_1_1.json"));
  CHECK(run(flag + " poly 1 2").out == first);
  {
    std::ofstream out(dir / "N_1_2.json");
    out << "{\"g\": 1, \"n\": 2, \"classes\": [{\"odd_count\": 0, \"poly\": {\"nvars\": 2, \"terms\": []}}]}";
  }
  CHECK(run(flag + " poly 1 2").out == first);
  // the corrupt file was replaced
  std::ifstream in(dir / "N_1_2.json");
  const auto j = nlohmann::json::parse(in);
  CHECK(j["classes"].size() == 3);
  std::filesystem::remove_all(dir);

  const auto env_dir = scratch("env");
  CHECK(run("poly 1 1", "MODULI_CACHE_DIR=" + env_dir.string()).code == 0);
  CHECK(std::filesystem::exists(env_dir / "N_1_1.json"));
  std::filesystem::remove_all(env_dir);
}

TEST_CASE("concurrent invocations share a cache directory") {
  const auto dir = scratch("concurrent");
  const std::string cmd = std::string(MODULI_CLI) + " --cache-dir " + dir.string() + " poly 2 2 > /dev/null";
  const std::string both = "(" + cmd + " & " + cmd + " & wait)";
  CHECK(std::system(both.c_str()) == 0);
  const Result r = run("--cache-dir " + dir.string() + " poly 2 2");
  CHECK(r.code == 0);
  CHECK(r.out == run("poly 2 2").out);
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    CHECK(entry.path().filename().string().find(".tmp") == std::string::npos);
  std::filesystem::remove_all(dir);
}
