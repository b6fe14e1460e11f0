#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "lensalex/alexander.hpp"
#include "lensalex/cli.hpp"
#include "lensalex/format.hpp"

using namespace lensalex;
using namespace lensalex::cli;
using nlohmann::json;

namespace {

JobSpec lens_job(std::string word, int n, long p, long q) {
  JobSpec s;
  s.word = std::move(word);
  s.n = n;
  s.p = p;
  s.q = q;
  return s;
}

std::vector<json> records(const std::string& out) {
  std::vector<json> v;
  std::istringstream in(out);
  for (std::string line; std::getline(in, line);) v.push_back(json::parse(line));
  return v;
}

}  // namespace

TEST_CASE("single lens computation") {
  const Outcome o = run_single(lens_job("t s1^3", 2, 3, 1));
  CHECK(o.exit_code == kOk);
  CHECK(o.out == "t^6 - t^3 + 1\n");
  CHECK(o.err.find("beta_class = 1") != std::string::npos);
  CHECK(o.err.find("nu = 1") != std::string::npos);
  CHECK(o.err.find("determinant = ") != std::string::npos);
}

TEST_CASE("formats") {
  JobSpec s = lens_job("t s1^3", 2, 5, 2);
  s.format = Format::Latex;
  CHECK(run_single(s).out == "t^{10} - t^{5} + 1\n");

  s.format = Format::Json;
  const json rec = json::parse(run_single(s).out);
  CHECK(rec["beta_class"] == 1);
  CHECK(rec["nu"] == 1);
  CHECK(rec["p"] == 5);
  CHECK(rec["polynomial"] == json::parse(R"([[1,{"t":10}],[-1,{"t":5}],[1,{}]])"));
  CHECK(poly_from_json(rec["polynomial"], lens_context()) ==
        parse_laurent("t^10 - t^5 + 1", lens_context()));
}

TEST_CASE("other modes") {
  JobSpec s;
  s.word = "t s1^3";
  s.n = 2;
  s.mode = Mode::SolidTorus;
  CHECK(run_single(s).out == "b^2 - b + 1\n");

  s.word = "s1^3";
  s.mode = Mode::Classical;
  CHECK(run_single(s).out == "t^2 - t + 1\n");

  s.word = "s1^2";
  s.mode = Mode::Multivariable;
  CHECK(run_single(s).out == "1\n");

  s.mode = Mode::Classical;
  CHECK(run_single(s).exit_code == kInvalidInput);  // Hopf link is not a knot
}

TEST_CASE("oracle flag") {
  JobSpec s = lens_job("t s1^3", 2, 3, 1);
  s.oracle = true;
  const Outcome o = run_single(s);
  CHECK(o.exit_code == kOk);
  CHECK(o.err.find("oracle: agree") != std::string::npos);

  s.format = Format::Json;
  CHECK(json::parse(run_single(s).out)["agree_oracle"] == true);

  JobSpec c;
  c.word = "s1 s2^-1 s1 s2^-1";
  c.n = 3;
  c.mode = Mode::Classical;
  c.oracle = true;
  CHECK(run_single(c).exit_code == kOk);
}

TEST_CASE("validation errors exit with 1") {
  CHECK(run_single(lens_job("t s1 q", 2, 3, 1)).exit_code == kInvalidInput);
  CHECK(run_single(lens_job("s3", 2, 3, 1)).exit_code == kInvalidInput);
  CHECK(run_single(lens_job("t", 1, 4, 2)).exit_code == kInvalidInput);

  JobSpec missing;
  missing.word = "t";
  CHECK(run_single(missing).exit_code == kInvalidInput);

  JobSpec extra;
  extra.word = "t";
  extra.mode = Mode::SolidTorus;
  extra.p = 3;
  const Outcome o = run_single(extra);
  CHECK(o.exit_code == kInvalidInput);
  CHECK(o.out.empty());
  CHECK(o.err.rfind("error: ", 0) == 0);
}

TEST_CASE("mode and format names") {
  CHECK(parse_mode("solid-torus") == Mode::SolidTorus);
  CHECK_FALSE(parse_mode("torus").has_value());
  CHECK(parse_format("latex") == Format::Latex);
  CHECK_FALSE(parse_format("xml").has_value());
}

TEST_CASE("batch") {
  JobSpec shared;
  shared.n = 2;
  shared.p = 3;
  shared.q = 1;

  std::istringstream empty("");
  CHECK(run_batch(empty, shared).out.empty());

  std::istringstream in("# header\n\nt s1^3\nt s1 q\nt ; 1 ; 5 ; 2\nt s1^3 ; ; 5 ; 2\n");
  const Outcome o = run_batch(in, shared, 2);
  CHECK(o.exit_code == kOk);
  const auto recs = records(o.out);
  REQUIRE(recs.size() == 4);
  CHECK(recs[0]["text"] == "t^6 - t^3 + 1");
  CHECK(recs[1].contains("error"));
  CHECK(recs[2]["text"] == "1");
  CHECK(recs[2]["n"] == 1);
  CHECK(recs[3]["text"] == "t^10 - t^5 + 1");

  std::istringstream bad("t ; x\nt ; 1 ; 2 ; 1 ; 9\n");
  for (const auto& r : records(run_batch(bad, shared).out)) CHECK(r.contains("error"));
}

TEST_CASE("batch output is deterministic") {
  JobSpec shared;
  shared.n = 3;
  shared.p = 5;
  shared.q = 2;
  std::string text;
  for (const char* w : {"t s1^3", "t s2 s1^-1", "t^2 s1 s2", "s1 s2 t", "t^-1 s1^2 s2^-1", "", "t"})
    text += std::string(w) + " ; ; ;\n";
  std::istringstream a(text), b(text), c(text);
  const std::string one = run_batch(a, shared, 1).out;
  CHECK(run_batch(b, shared, 4).out == one);
  CHECK(run_batch(c, shared, 0).out == one);
  CHECK(records(one).size() == 7);
}
