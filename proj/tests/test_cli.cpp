#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using semitoric::cli::run_cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "semitoric");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::stringstream ss(s);
  for (std::string l; std::getline(ss, l);) v.push_back(l);
  return v;
}

std::vector<std::string> cells(const std::string& line) {
  std::vector<std::string> v;
  std::stringstream ss(line);
  for (std::string c; std::getline(ss, c, ',');) v.push_back(c);
  if (!line.empty() && line.back() == ',') v.emplace_back();
  return v;
}

const std::vector<std::string> kFF = {"--R1", "1", "--R2", "2", "--s1", "0.5", "--s2", "0.5"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("format_double round-trips") {
  for (double x : {0.1, -8.0, 1.0 / 3.0, 1e-300, 6.02214076e23}) {
    CHECK(std::stod(semitoric::cli::format_double(x)) == x);
  }
  CHECK(semitoric::cli::format_double(-8.0) == "-8");
}

TEST_CASE("classify") {
  const auto r = run(with({"classify"}, kFF));
  CHECK(r.code == 0);
  CHECK(r.out.find("E = -8") != std::string::npos);
  CHECK(r.out.find("n_FF = 2") != std::string::npos);
  CHECK(r.out.find("NS: focus-focus") != std::string::npos);

  const auto j = run(with({"classify", "--json"}, kFF));
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["schema"] == "semitoric-invariants/1");
  CHECK(doc["n_ff"] == 2);
  CHECK(doc["E"] == -8.0);
  CHECK(doc["points"].size() == 4);

  const auto corner = run({"classify", "--R1", "1", "--R2", "2", "--s1", "0", "--s2", "0"});
  CHECK(corner.code == 0);
  CHECK(corner.out.find("n_FF = 0") != std::string::npos);

  CHECK(run({"classify", "--R1", "1", "--R2", "1", "--s1", "0", "--s2", "0"}).code == 2);
  CHECK(run({"classify", "--R1", "1", "--R2", "2", "--s1", "2", "--s2", "0"}).code == 2);
  CHECK(run({"classify", "--R1", "1"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("classify on E = 0 exits 3") {
  // E(1, 2, 0.1, s2) = 0 for s2 found by bisection, written with 17 digits
  double a = 0.0, b = 0.5;
  const auto E = [](double s2) {
    const double s1 = 0.1, R1 = 1, R2 = 2, f = 1 - 2 * s1;
    return R2 * R2 * f * f * (s2 - 1) * (s2 - 1) + R1 * R1 * f * f * s2 * s2 -
           2 * R1 * R2 *
               (8 * (s1 - 1) * (s1 - 1) * s1 * s1 + s2 - 12 * (s1 - 1) * s1 * s2 +
                (7 + 12 * (s1 - 1) * s1) * s2 * s2 - 16 * s2 * s2 * s2 + 8 * s2 * s2 * s2 * s2);
  };
  for (int i = 0; i < 200; ++i) {
    const double m = 0.5 * (a + b);
    (E(m) > 0 ? a : b) = m;
  }
  const auto r = run({"classify", "--R1", "1", "--R2", "2", "--s1", "0.1", "--s2",
                      semitoric::cli::format_double(a)});
  CHECK(r.code == 3);
  CHECK(r.err.find("degenerate") != std::string::npos);
}

TEST_CASE("height") {
  const auto r = run(with({"height", "--json"}, kFF));
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["h1"] == 1.0);
  CHECK(doc["h2"] == 1.0);
  CHECK(doc["case"] == "III");

  const auto g = run({"height", "--R1", "1", "--R2", "2", "--s1", "0.25", "--s2", "0.25",
                      "--json"});
  const auto d = nlohmann::json::parse(g.out);
  CHECK(d["discrepancy"].get<double>() < 1e-6);
  CHECK(d["method"] == "both");
  CHECK(d["h1"].get<double>() + d["h2"].get<double>() == doctest::Approx(2.0).epsilon(1e-15));

  CHECK(run({"height", "--R1", "1", "--R2", "2", "--s1", "0", "--s2", "0"}).code == 3);
  CHECK(run(with({"height", "--method", "magic"}, kFF)).code == 2);
  const auto q = run(with({"height", "--method", "quadrature"}, kFF));
  CHECK(q.code == 0);
  CHECK(q.out.find("method = quadrature") != std::string::npos);
}

TEST_CASE("polygon") {
  const auto r = run(with({"polygon", "--cuts", "++"}, kFF));
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["schema"] == "semitoric-invariants/1");
  CHECK(doc["cuts"] == "++");
  CHECK(doc["top_scaled"].size() == 4);
  CHECK(doc["vertices"][0][0] == -3.0);

  const auto csv = run(with({"polygon", "--cuts", "+-", "--format", "csv"}, kFF));
  const auto ls = lines(csv.out);
  CHECK(ls[0] == "index,l,y,L,Y");
  CHECK(ls.size() == 5);

  const auto corner = run({"polygon", "--R1", "1", "--R2", "2", "--s1", "0.02", "--s2", "0.02"});
  CHECK(nlohmann::json::parse(corner.out)["has_cuts"] == false);
  CHECK(run(with({"polygon", "--cuts", "+x"}, kFF)).code == 2);
}

TEST_CASE("image") {
  const auto r = run(with({"image", "--samples", "16"}, kFF));
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  CHECK(ls[0] == "kind,L,h_min,h_max");
  CHECK(ls.size() == 1 + 17 + 4 + 2);
  for (const auto& l : ls) {
    const auto c = cells(l);
    if (c[0].rfind("corner", 0) == 0) CHECK(c[2] == c[3]);
  }
  CHECK(cells(ls[1])[2] == cells(ls[1])[3]);
  CHECK(cells(ls[17])[2] == cells(ls[17])[3]);
  CHECK(run(with({"image", "--samples", "15"}, kFF)).code == 2);
  CHECK(run(with({"image", "--out", "/nonexistent-dir/x.csv"}, kFF)).code == 4);
}

TEST_CASE("sweep") {
  const std::vector<std::string> base = {"sweep", "--R1", "1", "--R2", "2", "--s1", "0:1:21",
                                         "--s2", "0:1:21"};
  const auto nff = run(with(base, {"--quantity", "nff"}));
  CHECK(nff.code == 0);
  const auto ls = lines(nff.out);
  CHECK(ls.size() == 1 + 21 * 21);
  int ff = 0;
  for (std::size_t i = 1; i < ls.size(); ++i) ff += cells(ls[i])[3] == "2";
  CHECK(ff > 0);

  const auto h = run(with(base, {"--quantity", "height"}));
  for (std::size_t i = 1; i < lines(h.out).size(); ++i) {
    const auto c = cells(lines(h.out)[i]);
    if (c[6] == "ok") CHECK(std::stod(c[3]) + std::stod(c[4]) == doctest::Approx(2.0));
    if (c[6] == "no_ff") CHECK(c[3].empty());
  }

  // parallel output is byte-identical to the serial one
  setenv("SEMITORIC_THREADS", "3", 1);
  CHECK(semitoric::cli::thread_count() == 3);
  const auto par = run(with(base, {"--quantity", "height", "--parallel"}));
  CHECK(par.out == h.out);
  CHECK(run(with(base, {"--quantity", "height"})).out == h.out);
  unsetenv("SEMITORIC_THREADS");

  CHECK(run({"sweep", "--R1", "1", "--R2", "2", "--s1", "0:1:1"}).code == 2);
  CHECK(run({"sweep", "--R1", "1", "--R2", "2", "--s1", "0:2:5"}).code == 2);
  CHECK(run({"sweep", "--R1", "1", "--R2", "2", "--quantity", "foo"}).code == 2);

  const std::string path = "sweep_test_output.csv";
  CHECK(run(with(base, {"--quantity", "E", "--out", path})).code == 0);
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  CHECK(first == "s1,s2,E");
  std::remove(path.c_str());
}

}
