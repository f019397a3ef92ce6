#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace fs = std::filesystem;

namespace {

std::string cli() {
  const char* path = std::getenv("GNBG_CLI");
  REQUIRE_MESSAGE(path != nullptr, "GNBG_CLI must point at the gnbg binary");
  return path;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / fs::path("gnbg_cli_test_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result exec(const std::string& args, const fs::path& dir) {
  const fs::path out = dir / "stdout.txt";
  const fs::path err = dir / "stderr.txt";
  const std::string cmd =
      cli() + " " + args + " >" + out.string() + " 2>" + err.string();
  const int raw = std::system(cmd.c_str());
  const auto slurp = [](const fs::path& p) {
    std::ifstream is(p);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
  };
  return {WEXITSTATUS(raw), slurp(out), slurp(err)};
}

std::string slurp_file(const fs::path& p) {
  std::ifstream is(p);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("generate writes a deterministic instance file and a summary") {
  TempDir tmp;
  const fs::path f1 = tmp.path / "f1.json";
  const Result r = exec("generate --id 1 --seed 7 --out " + f1.string(), tmp.path);
  CHECK(r.status == 0);
  CHECK(fs::exists(f1));
  CHECK(r.out.find("sigma_min = ") != std::string::npos);
  CHECK(r.out.find("optimum center =") != std::string::npos);

  const fs::path f1b = tmp.path / "f1b.json";
  const Result r2 = exec("generate --id 1 --seed 7 --out " + f1b.string(), tmp.path);
  CHECK(r2.status == 0);
  CHECK(slurp_file(f1) == slurp_file(f1b));
  CHECK(r.out.substr(r.out.find('\n')) == r2.out.substr(r2.out.find('\n')));
}

TEST_CASE("generate rejects out-of-range ids on stderr") {
  TempDir tmp;
  const Result r = exec("generate --id 25 --seed 1 --out " + (tmp.path / "x.json").string(),
                        tmp.path);
  CHECK(r.status != 0);
  CHECK(r.err.find("error:") != std::string::npos);
  CHECK(r.err.find("id out of range") != std::string::npos);
}

TEST_CASE("eval prints sigma_min at the stored optimum and rejects short points") {
  TempDir tmp;
  const fs::path file = tmp.path / "f16.json";
  const Result gen = exec("generate --id 16 --seed 3 --out " + file.string(), tmp.path);
  REQUIRE(gen.status == 0);

  // Pull sigma_min and the center out of the generate summary.
  std::istringstream out(gen.out);
  std::string line, center_line;
  double sigma = 0.0;
  while (std::getline(out, line)) {
    if (line.rfind("sigma_min = ", 0) == 0) sigma = std::stod(line.substr(12));
    if (line.rfind("optimum center =", 0) == 0) center_line = line.substr(16);
  }
  REQUIRE(!center_line.empty());

  std::string point = center_line;
  for (char& ch : point)
    if (ch == ',') ch = ' ';
  const Result ev = exec("eval " + file.string() + " " + point, tmp.path);
  CHECK(ev.status == 0);
  REQUIRE(ev.out.rfind("f = ", 0) == 0);
  CHECK(std::stod(ev.out.substr(4)) == doctest::Approx(sigma).epsilon(1e-9));

  const Result bad = exec("eval " + file.string() + " 1 2 3", tmp.path);
  CHECK(bad.status != 0);
  CHECK(bad.err.find("error:") != std::string::npos);
  CHECK(bad.err.find("dimension") != std::string::npos);
}

TEST_CASE("run writes records, resumes, and parallel output matches serial") {
  TempDir tmp;
  const fs::path out1 = tmp.path / "runs1";
  const std::string base = "run --id 1 --algo random --runs 3 --budget 500 --seed 9 ";
  const Result r1 = exec(base + "--out " + out1.string(), tmp.path);
  CHECK(r1.status == 0);
  int files = 0;
  for (const auto& e : fs::directory_iterator(out1)) {
    ++files;
    CHECK(e.path().extension() == ".json");
  }
  CHECK(files == 3);

  // Rerun: everything skipped, bytes untouched.
  std::map<std::string, std::string> before;
  for (const auto& e : fs::directory_iterator(out1))
    before[e.path().filename().string()] = slurp_file(e.path());
  const Result r2 = exec(base + "--out " + out1.string(), tmp.path);
  CHECK(r2.status == 0);
  CHECK(r2.out.find("skip") != std::string::npos);
  CHECK(r2.out.find("run   ") == std::string::npos);
  for (const auto& e : fs::directory_iterator(out1))
    CHECK(before.at(e.path().filename().string()) == slurp_file(e.path()));

  // A parallel campaign produces byte-identical records.
  const fs::path out2 = tmp.path / "runs2";
  const Result r3 = exec(base + "--jobs 3 --out " + out2.string(), tmp.path);
  CHECK(r3.status == 0);
  for (const auto& [name, text] : before)
    CHECK(text == slurp_file(out2 / name));
}

TEST_CASE("unknown algorithms list the available ones") {
  TempDir tmp;
  const Result r = exec("run --id 1 --algo sa --runs 1 --budget 10 --out " +
                            (tmp.path / "r").string(),
                        tmp.path);
  CHECK(r.status != 0);
  CHECK(r.err.find("unknown optimizer") != std::string::npos);
  CHECK(r.err.find("random") != std::string::npos);
  CHECK(r.err.find("es-1p1") != std::string::npos);
  CHECK(r.err.find("de") != std::string::npos);
}

TEST_CASE("report aggregates a directory or fails loudly when empty") {
  TempDir tmp;
  const fs::path runs = tmp.path / "runs";
  REQUIRE(exec("run --id 2 --algo random --runs 4 --budget 200 --seed 5 --out " +
                   runs.string(),
               tmp.path)
              .status == 0);

  const Result csv = exec("report --in " + runs.string() + " --format csv", tmp.path);
  CHECK(csv.status == 0);
  CHECK(csv.out.rfind("instance_id,optimizer,runs,mean_error,median_error,std_error,"
                      "solve_rate,mean_evals_to_solve\n",
                      0) == 0);
  CHECK(csv.out.find("2,random,4,") != std::string::npos);

  const Result table = exec("report --in " + runs.string(), tmp.path);
  CHECK(table.status == 0);
  CHECK(table.out.find("optimizer") != std::string::npos);

  const fs::path empty = tmp.path / "empty";
  fs::create_directories(empty);
  const Result none = exec("report --in " + empty.string(), tmp.path);
  CHECK(none.status != 0);
  CHECK(none.err.find("no run records") != std::string::npos);
}

TEST_CASE("grid exports match eval and honor the resolution check") {
  TempDir tmp;
  const fs::path grid_path = tmp.path / "f1.grid";
  const Result g =
      exec("grid --id 1 --seed 7 --figure-mode --res 3 --out " + grid_path.string(),
           tmp.path);
  CHECK(g.status == 0);

  // Parse the 3x3 matrix back and compare the corner/center values.
  std::ifstream is(grid_path);
  std::string line;
  std::vector<double> values;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    double v;
    while (ls >> v) values.push_back(v);
  }
  REQUIRE(values.size() == 9);
  CHECK(values[4] == 0.0);
  CHECK(values[0] == doctest::Approx(20000.0).epsilon(1e-9));
  CHECK(values[8] == doctest::Approx(20000.0).epsilon(1e-9));

  const Result bad =
      exec("grid --id 1 --figure-mode --res 1 --out " + (tmp.path / "x.grid").string(),
           tmp.path);
  CHECK(bad.status != 0);
  CHECK(bad.err.find("error:") != std::string::npos);
}

TEST_CASE("grid nodes of a stored instance agree with eval") {
  TempDir tmp;
  const fs::path file = tmp.path / "f21.json";
  const Result gen = exec("generate --id 21 --seed 4 --out " + file.string(), tmp.path);
  REQUIRE(gen.status == 0);
  std::string center_line;
  {
    std::istringstream out(gen.out);
    std::string line;
    while (std::getline(out, line))
      if (line.rfind("optimum center =", 0) == 0) center_line = line.substr(16);
  }
  REQUIRE(!center_line.empty());

  const fs::path grid_path = tmp.path / "f21.grid";
  const Result g = exec("grid --instance " + file.string() + " --dims 0,1 --res 3 --out " +
                            grid_path.string(),
                        tmp.path);
  REQUIRE(g.status == 0);

  // Node (0, 2) sits at axis0 = -100, axis1 = +100 with the other
  // coordinates at the default fixed point (the optimum center).
  double node_value = 0.0;
  {
    std::ifstream is(grid_path);
    std::string line;
    std::vector<std::vector<double>> rows;
    while (std::getline(is, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      std::vector<double> row;
      double v;
      while (ls >> v) row.push_back(v);
      rows.push_back(row);
    }
    REQUIRE(rows.size() == 3);
    REQUIRE(rows[0].size() == 3);
    node_value = rows[0][2];
  }

  std::istringstream cs(center_line);
  std::vector<double> point;
  double v;
  while (cs >> v) point.push_back(v);
  REQUIRE(point.size() == 30);
  point[0] = -100.0;
  point[1] = 100.0;
  std::ostringstream args;
  args.precision(17);
  args << "eval " << file.string();
  for (const double p : point) args << ' ' << p;
  const Result ev = exec(args.str(), tmp.path);
  REQUIRE(ev.status == 0);
  const double eval_value = std::stod(ev.out.substr(4));
  CHECK(std::abs(node_value - eval_value) <=
        1e-12 * std::max({1.0, std::abs(node_value), std::abs(eval_value)}));
}
