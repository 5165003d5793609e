#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "arrkit/arrangement.hpp"
#include "arrkit/catalog.hpp"
#include "arrkit/cli.hpp"

namespace fs = std::filesystem;
using arrkit::Arrangement;
using nlohmann::json;

namespace {

const fs::path& scratch_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "arrkit-cli-tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string put(const std::string& name, const std::string& text) {
  fs::path p = scratch_dir() / name;
  std::ofstream f(p);
  f << text;
  return p.string();
}

std::string put(const std::string& name, const Arrangement& a) {
  return put(name, arrkit::write_arrangement(a));
}

int run(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
  std::ostringstream out, err;
  int rc = arrkit::run_cli(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return rc;
}

}  // namespace

TEST_CASE("cli chi human and json") {
  std::string f = put("factor.txt", arrkit::catalog("factor"));
  std::string out;
  CHECK(run({"chi", f}, &out) == 0);
  CHECK(out.find("chi(A;t) = t^3 - 8*t^2 + 17*t - 10") != std::string::npos);
  CHECK(out.find("chi0(A;t) = t^2 - 7*t + 10") != std::string::npos);
  CHECK(out.find("b = 1 8 17 10") != std::string::npos);
  CHECK(out.find("b0 = 1 7 10") != std::string::npos);

  CHECK(run({"--json", "chi", f}, &out) == 0);
  json j = json::parse(out);
  CHECK(j["vars"] == 3);
  CHECK(j["size"] == 8);
  CHECK(j["chi"] == "t^3 - 8*t^2 + 17*t - 10");
  CHECK(j["b"] == json({1, 8, 17, 10}));
  CHECK(j["b0"] == json({1, 7, 10}));
}

TEST_CASE("cli classify exit codes and bound echo") {
  std::string factor = put("factor.txt", arrkit::catalog("factor"));
  std::string tangent = put("tangent.txt", arrkit::catalog("tangent"));

  std::string out;
  CHECK(run({"classify", factor}, &out) == 0);
  CHECK(out.find("Free exp (1,2,5)") != std::string::npos);

  CHECK(run({"classify", tangent}, &out) == 2);
  CHECK(out.find("StrictPOG poexp (1,2,2) level 2") != std::string::npos);
  CHECK(out.find("generator degrees (1,2,2,2)") != std::string::npos);
  CHECK(out.find("syzygy degrees (3)") != std::string::npos);
  CHECK(out.find("checked: generators to 4") != std::string::npos);

  // flags land in the echoed bounds
  CHECK(run({"classify", "--bound", "5", "--hilbert-bound", "9", tangent},
            &out) == 2);
  CHECK(out.find("checked: generators to 5, syzygies to 6, hilbert to 9") !=
        std::string::npos);

  // json goes after the subcommand too
  CHECK(run({"classify", "--json", factor}, &out) == 0);
  json j = json::parse(out);
  CHECK(j["verdict"] == "Free");
  CHECK(j["exponents"] == json({1, 2, 5}));

  std::string addnot = put("addnot.txt", arrkit::catalog("addnot"));
  CHECK(run({"classify", "--bound", "4", "--hilbert-bound", "6", addnot},
            &out) == 3);
  CHECK(out.find("NeitherAtBound") != std::string::npos);

  std::string flat = put("flat.txt", "vars: 3\n1 0 0\n0 1 0\n");
  std::string err;
  CHECK(run({"classify", flat}, &out, &err) == 4);
  CHECK(!err.empty());
}

TEST_CASE("cli triple json") {
  std::string f = put("factor.txt", arrkit::catalog("factor"));
  std::string out;
  CHECK(run({"triple", f, "--index", "0"}, &out) == 0);
  json j = json::parse(out);
  CHECK(j["sizes"] == json({8, 7, 3}));
  CHECK(j["exp_a"] == json({1, 2, 5}));
  CHECK(j["exp_del"] == json({1, 2, 4}));
  CHECK(j["exp_rest"] == json({1, 2}));
  CHECK(j["all_three"] == true);
}

TEST_CASE("cli delete and restrict round trip") {
  Arrangement factor = arrkit::catalog("factor");
  std::string f = put("factor.txt", factor);

  std::string out;
  CHECK(run({"delete", f, "--index", "1"}, &out) == 0);
  Arrangement del = arrkit::parse_arrangement(out).arr;
  CHECK(arrkit::canonical_key(del) ==
        arrkit::canonical_key(arrkit::delete_hyperplane(factor, 1)));

  CHECK(run({"restrict", f, "--index", "1"}, &out) == 0);
  Arrangement rest = arrkit::parse_arrangement(out).arr;
  CHECK(rest.nvars == 2);
  CHECK(rest.size() == 2);
}

TEST_CASE("cli ziegler keeps multiplicities") {
  std::string f = put("shib2.txt", arrkit::catalog("shi-b", 2));
  std::string out;
  CHECK(run({"ziegler", f, "--index", "0"}, &out) == 0);
  auto parsed = arrkit::parse_arrangement(out);
  CHECK(parsed.arr.nvars == 2);
  CHECK(parsed.arr.size() == 4);
  REQUIRE(parsed.mult.has_value());
  int total = 0;
  for (int m : *parsed.mult) {
    CHECK(m == 2);
    total += m;
  }
  CHECK(total == 8);
}

TEST_CASE("cli filtration") {
  std::string factor = put("factor.txt", arrkit::catalog("factor"));
  std::string tangent = put("tangent.txt", arrkit::catalog("tangent"));
  std::string out;
  CHECK(run({"filtration", factor}, &out) == 0);
  CHECK(out.find("order:") != std::string::npos);
  CHECK(out.find("step 8 exp (1,2,5)") != std::string::npos);
  CHECK(run({"filtration", tangent}, &out) == 0);
  CHECK(out.find("no free filtration") != std::string::npos);
}

TEST_CASE("cli free-additions with a pool file") {
  Arrangement base = arrkit::delete_hyperplane(arrkit::catalog("factor"), 1);
  std::string f = put("factor-del-y.txt", base);
  std::string pool = put("pool.txt", "vars: 3\n0 1 0\n1 0 0\n");
  std::string out;
  CHECK(run({"free-additions", f, "--pool", pool, "--no-spans"}, &out) == 0);
  CHECK(out.find("1 free additions") != std::string::npos);
  CHECK(out.find("y  exp (1,2,5)") != std::string::npos);
}

TEST_CASE("cli scan") {
  std::string factor = put("factor.txt", arrkit::catalog("factor"));
  std::string out;
  CHECK(run({"scan", factor}, &out) == 0);
  CHECK(out.find("H1 d=6 ok") != std::string::npos);
  CHECK(out.find("conjecture holds") != std::string::npos);

  // not free, so the scan has nothing to say
  std::string tangent = put("tangent.txt", arrkit::catalog("tangent"));
  std::string err;
  CHECK(run({"scan", tangent}, &out, &err) == 1);
  CHECK(!err.empty());
}

TEST_CASE("cli catalog") {
  std::string out, err;
  CHECK(run({"catalog", "b3"}, &out) == 0);
  CHECK(arrkit::parse_arrangement(out).arr.size() == 13);

  CHECK(run({"catalog", "boolean", "--ell", "4"}, &out) == 0);
  Arrangement b4 = arrkit::parse_arrangement(out).arr;
  CHECK(b4.nvars == 4);
  CHECK(b4.size() == 4);

  CHECK(run({"catalog", "shi-b", "--ell", "3"}, &out) == 0);
  CHECK(arrkit::parse_arrangement(out).arr.size() == 19);

  CHECK(run({"catalog", "nope"}, &out, &err) == 1);
  CHECK(err.find("unknown catalog name") != std::string::npos);
}

TEST_CASE("cli error paths") {
  std::string out, err;

  std::string bad = put("bad.txt", "vars: 2\n1 0\n1 x\n");
  CHECK(run({"chi", bad}, &out, &err) == 1);
  CHECK(err.find("line 3") != std::string::npos);

  CHECK(run({"chi", (scratch_dir() / "missing.txt").string()}, &out, &err) ==
        1);
  CHECK(err.find("cannot open") != std::string::npos);

  std::string factor = put("factor.txt", arrkit::catalog("factor"));
  CHECK(run({"delete", factor, "--index", "99"}, &out, &err) == 1);
  CHECK(err.find("out of range") != std::string::npos);

  CHECK(run({"classify", "--nope", factor}, &out, &err) == 64);
  CHECK(run({}, &out, &err) == 64);

  CHECK(run({"--help"}, &out, &err) == 0);
  CHECK(out.find("classify") != std::string::npos);
}
