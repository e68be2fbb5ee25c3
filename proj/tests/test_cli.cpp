#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

class Workspace {
public:
  Workspace() : dir_(fs::temp_directory_path() / ("biq_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Workspace() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  // stdout only; stderr is discarded
  Run run(const std::string& args) const {
    Run r;
    const std::string cmd = std::string(BIQ_BINARY) + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
      r.out.append(buf.data(), n);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

private:
  fs::path dir_;
};

const char* a3 =
    R"({"vertices":3,"arrows":[{"id":"a","from":1,"to":2,"kind":"full"},{"id":"b","from":3,"to":2,"kind":"dashed"}]})";
const char* a2 = R"({"vertices":2,"arrows":[{"id":"a","from":1,"to":2,"kind":"dashed"}]})";
const char* dashed_loop = R"({"vertices":1,"arrows":[{"id":"a","from":1,"to":1,"kind":"dashed"}]})";

}  // namespace

TEST_CASE("classify and roots outputs") {
  Workspace w;
  auto r = w.run("classify " + w.write("a3.json", a3));
  CHECK(r.code == 0);
  CHECK(json::parse(r.out) == json::parse(R"({"kind":"Finite","diagram":"A3","definiteness":"PositiveDefinite"})"));

  r = w.run("roots " + w.write("a2.json", a2) + " --value 1");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out) == json::parse("[[0,1],[1,0],[1,1]]"));
}

TEST_CASE("iso certificates validate") {
  Workspace w;
  const auto g = w.write("loop.json", dashed_loop);
  const auto x = w.write("x.json", R"({"dims":[1],"matrices":{"a":[[["0","1"]]]}})");
  const auto y = w.write("y.json", R"({"dims":[1],"matrices":{"a":[[["1","0"]]]}})");
  auto iso = w.run("rep --biquiver " + g + " iso " + x + " " + y + " --trials 8 --seed 7");
  REQUIRE(iso.code == 0);
  const json j = json::parse(iso.out);
  CHECK(j["verdict"] == "Yes");
  REQUIRE(j.contains("certificate"));
  const auto cert = w.write("cert.json", iso.out);
  auto v = w.run("rep --biquiver " + g + " validate " + x + " --against " + y + " --certificate " + cert);
  CHECK(v.code == 0);
  CHECK(json::parse(v.out)["certificate_verified"] == true);

  // a certificate for the wrong target does not verify
  const auto z = w.write("z.json", R"({"dims":[1],"matrices":{"a":[[["0","0"]]]}})");
  v = w.run("rep --biquiver " + g + " validate " + x + " --against " + z + " --certificate " + cert);
  CHECK(json::parse(v.out)["certificate_verified"] == false);
}

TEST_CASE("decomposition certificates verify") {
  Workspace w;
  const auto g = w.write("loop.json", R"({"vertices":1,"arrows":[{"id":"a","from":1,"to":1,"kind":"full"}]})");
  const auto a = w.write("a.json", R"({"dims":[2],"matrices":{"a":[[["1","0"],["3","0"]],[["0","0"],["2","0"]]]}})");
  auto r = w.run("rep --biquiver " + g + " decompose " + a + " --seed 3");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["summands"].size() == 2);
  CHECK(j["verified"] == true);
}

TEST_CASE("exit codes") {
  Workspace w;
  CHECK(w.run("").code == 1);
  CHECK(w.run("frobnicate").code == 1);
  CHECK(w.run("roots").code == 1);
  CHECK(w.run("classify " + w.write("bad.json", "{")).code == 2);
  CHECK(w.run("classify " + (fs::temp_directory_path() / "biq_no_such_file.json").string()).code == 2);
  CHECK(w.run("classify " + w.write("kind.json", R"({"vertices":1,"arrows":[{"id":"a","from":1,"to":1,"kind":"wavy"}]})"))
            .code == 2);
  const auto disc = w.write("disc.json", R"({"vertices":2,"arrows":[]})");
  CHECK(w.run("classify " + disc).code == 3);
  auto comps = w.run("classify --components " + disc);
  CHECK(comps.code == 0);
  // an indefinite form needs an explicit bound
  const auto wild = w.write("wild.json", R"({"vertices":1,"arrows":[{"id":"a","from":1,"to":1,"kind":"full"},)"
                                         R"({"id":"b","from":1,"to":1,"kind":"dashed"}]})");
  CHECK(w.run("roots " + wild + " --value 1").code == 3);
}

TEST_CASE("output is deterministic for a fixed seed") {
  Workspace w;
  const auto g = w.write("a3.json", a3);
  const std::string args = "rep --biquiver " + g + " random --dims 2,2,1 --bound 4 --seed 11";
  const auto first = w.run(args);
  REQUIRE(first.code == 0);
  CHECK(w.run(args).out == first.out);
  const auto r = w.write("r.json", first.out);
  const std::string dec = "rep --biquiver " + g + " decompose " + r + " --seed 5";
  const auto d1 = w.run(dec);
  CHECK(d1.code == 0);
  CHECK(w.run(dec).out == d1.out);
}
