#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CAYLEYP2_BIN) + " " + args + " 2>&1";
  Run r;
  FILE* p = ::popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / ("cayleyp2_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("build") {
  const auto r = run("build --primes 2,3,5");
  CHECK(r.code == 0);
  CHECK(r.out.find("n 900") != std::string::npos);
  CHECK(r.out.find("cSize 28") != std::string::npos);
  CHECK(r.out.find("degree 28") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  const auto bad = run("build --primes 4,3,5");
  CHECK(bad.code == 2);
  CHECK(bad.out.find("NonPrime") != std::string::npos);
  CHECK(run("build --primes 3,2,5").code == 2);
  CHECK(run("build --primes 2,3").code == 2);
  CHECK(run("build").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate --primes 2,3,5").code == 2);
  CHECK(run("export --primes 2,3,5 --format svg --out x").code == 2);
  CHECK(run("params --primes 2,3,5 --config /nonexistent.conf").code == 2);
  CHECK(run("export --primes 3,5,7 --format edges --out /dev/null --cap 1000").code == 2);
}

TEST_CASE("params json") {
  const auto r = run("params --primes 2,3,5");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"cSize\": 28") != std::string::npos);
  CHECK(r.out.find("\"oracleSeed\": 1") != std::string::npos);
  const auto seeded = run("params --primes 2,3,5 --seed 7");
  CHECK(seeded.out.find("\"oracleSeed\": 7") != std::string::npos);
  CHECK(seeded.out == run("params --primes 2,3,5 --seed 7").out);
  CHECK(run("params --primes 2,3,5 --exhaustive-cap 100").out.find("\"mode\": \"sampled\"") != std::string::npos);
}

TEST_CASE("params to file and output directory") {
  const auto dir = scratch();
  CHECK(run("params --primes 2,3,5 --out " + (dir / "a.json").string()).code == 0);
  CHECK(slurp(dir / "a.json") == run("params --primes 2,3,5").out);

  const auto cfg = dir / "c.conf";
  std::ofstream(cfg) << "seed = 9\noutput_dir = " << dir.string() << "\n";
  CHECK(run("params --primes 2,3,5 --config " + cfg.string() + " --out b.json").code == 0);
  CHECK(slurp(dir / "b.json").find("\"oracleSeed\": 9") != std::string::npos);

  const std::string env = "env CAYLEY_OUTPUT_DIR=" + dir.string() + " ";
  const Run viaenv = [&] {
    const std::string cmd = env + CAYLEYP2_BIN + " params --primes 2,3,5 --out e.json 2>&1";
    const int status = std::system(cmd.c_str());
    return Run{WIFEXITED(status) ? WEXITSTATUS(status) : -1, {}};
  }();
  CHECK(viaenv.code == 0);
  CHECK(fs::exists(dir / "e.json"));
  fs::remove_all(dir);
}

TEST_CASE("verify") {
  const auto ok = run("verify --primes 2,3,5");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("all checks passed") != std::string::npos);
  // the fifth fiber property does not hold at (3,5,7); the mismatch must surface
  const auto fail = run("verify --primes 3,5,7 --budget-sources 5");
  CHECK(fail.code == 1);
  CHECK(fail.out.find("FAIL prop23[5]") != std::string::npos);
}

TEST_CASE("export") {
  const auto dir = scratch();
  CHECK(run("export --primes 2,3,5 --format edges --out " + (dir / "e.txt").string()).code == 0);
  std::istringstream edges(slurp(dir / "e.txt"));
  std::string line;
  int count = 0;
  while (std::getline(edges, line)) ++count;
  CHECK(count == 12'600);

  CHECK(run("export --primes 2,3,5 --format dot --out " + (dir / "g.dot").string()).code == 0);
  CHECK(slurp(dir / "g.dot").rfind("graph cayley {", 0) == 0);

  CHECK(run("export --primes 3,5,7 --format walk --out " + (dir / "w.txt").string()).code == 0);
  CHECK(slurp(dir / "w.txt").rfind("path\n0\n", 0) == 0);

  CHECK(run("export --primes 2,3,5 --format independent-set --out " + (dir / "i.txt").string()).code == 0);
  std::istringstream ind(slurp(dir / "i.txt"));
  count = 0;
  while (std::getline(ind, line)) ++count;
  CHECK(count == 180);

  CHECK(run("export --primes 2,3,5 --format edges --out /nonexistent/dir/e.txt").code == 1);
  fs::remove_all(dir);
}

TEST_CASE("hamiltonian") {
  const auto c = run("hamiltonian --primes 2,3,5 --check");
  CHECK(c.code == 0);
  CHECK(c.out.find("kind cycle") != std::string::npos);
  CHECK(c.out.find("verified true") != std::string::npos);
  const auto p = run("hamiltonian --primes 3,5,7 --check");
  CHECK(p.code == 0);
  CHECK(p.out.find("kind path") != std::string::npos);
  CHECK(p.out.find("length 11025") != std::string::npos);
  CHECK(p.out.find("end (8,24,48)") != std::string::npos);
}
