#include "doctest.h"

#include <sstream>

#include "json.hpp"

#include "balsq/commands.hpp"
#include "balsq/errors.hpp"
#include "balsq/json_io.hpp"
#include "balsq/ring.hpp"

using namespace balsq;

namespace {

JobSpec triple_job(const std::string& command) {
  JobSpec job;
  job.command = command;
  job.inline_monomials = "x[1,2]*x[2,2]*x[3,2]";
  job.inline_d = 3;
  job.inline_m = {2, 2, 2};
  job.closure = "shifted";
  return job;
}

std::string run_text(const JobSpec& job, int* code = nullptr) {
  std::ostringstream out;
  int rc = run_job(job, out);
  if (code) *code = rc;
  return out.str();
}

nlohmann::json run_json(JobSpec job) {
  job.json = true;
  std::ostringstream out;
  run_job(job, out);
  return nlohmann::json::parse(out.str());
}

}  // namespace

TEST_CASE("inline monomial lists split on top-level separators only") {
  RingSignature sig(2, {2, 2});
  auto list = parse_monomial_list(sig, "x[1,2]*x[2,2], x[1,1]\nx[2,1]");
  REQUIRE(list.size() == 3);
  CHECK(list[0].str() == "x[1,2]*x[2,2]");
  CHECK(list[1].str() == "x[1,1]");
  CHECK(list[2].str() == "x[2,1]");
  CHECK_THROWS_AS(parse_monomial_list(sig, "x[1,2"), input_error);
}

TEST_CASE("order ideal files load with either closure") {
  OrderIdealInput input = load_order_ideal_file("data/shifted_triple.json");
  CHECK(input.sig.str() == "P(3,(2,2,2))");
  CHECK(input.shifted_closure);
  CHECK(input.build().size() == 11);
  OrderIdealInput square = load_order_ideal_file("data/two_color_square.json");
  CHECK_FALSE(square.shifted_closure);
  CHECK(square.build().size() == 6);
  CHECK_THROWS_AS(load_order_ideal_file("data/no_such_file.json"), input_error);
}

TEST_CASE("check reports the example profile in both formats") {
  JobSpec job = triple_job("check");
  int code = -1;
  std::string text = run_text(job, &code);
  CHECK(code == 0);
  CHECK(text.find("signature: P(3,(2,2,2))") != std::string::npos);
  CHECK(text.find("members: 11") != std::string::npos);
  CHECK(text.find("shifted: yes") != std::string::npos);
  CHECK(text.find("shifted across colors: no") != std::string::npos);
  CHECK(text.find("degree bounds 2 <= 2 <= 4: satisfied") != std::string::npos);

  nlohmann::json doc = run_json(job);
  CHECK(doc["members"] == 11);
  CHECK(doc["shifted"] == true);
  CHECK(doc["shifted_across_colors"] == false);
  CHECK(doc["d_max_ideal"] == 3);
  CHECK(doc["d_max_complement"] == 2);
  CHECK(doc["degree_bounds"] == "satisfied");
}

TEST_CASE("check accepts file input") {
  JobSpec job;
  job.command = "check";
  job.input_path = "data/two_color_square.json";
  nlohmann::json doc = run_json(job);
  CHECK(doc["members"] == 6);
  CHECK(doc["d_max_ideal"] == 2);
  CHECK(doc["d_max_complement"] == 2);  // generated in degree two
  CHECK(doc["complement_generators"] == 9);
}

TEST_CASE("input selection is validated") {
  JobSpec job = triple_job("check");
  job.input_path = "data/shifted_triple.json";  // both sources given
  std::ostringstream out;
  CHECK_THROWS_AS(run_job(job, out), input_error);

  JobSpec missing;
  missing.command = "check";
  CHECK_THROWS_AS(run_job(missing, out), input_error);

  JobSpec no_shape = triple_job("check");
  no_shape.inline_m.clear();
  CHECK_THROWS_AS(run_job(no_shape, out), input_error);

  JobSpec bad_closure = triple_job("check");
  bad_closure.closure = "upward";
  CHECK_THROWS_AS(run_job(bad_closure, out), input_error);

  JobSpec unknown = triple_job("frobnicate");
  CHECK_THROWS_AS(run_job(unknown, out), input_error);
}

TEST_CASE("complex command carries the vectors in both formats") {
  JobSpec job = triple_job("complex");
  job.flag_vectors = true;
  std::string text = run_text(job);
  CHECK(text.find("11 facets") != std::string::npos);
  CHECK(text.find("f-vector: (1,9,18,11)") != std::string::npos);
  CHECK(text.find("h-vector: (1,6,3,1)") != std::string::npos);
  CHECK(text.find("flag h-vector") != std::string::npos);

  nlohmann::json doc = run_json(job);
  CHECK(doc["f_vector"] == nlohmann::json({1, 9, 18, 11}));
  CHECK(doc["h_vector"] == nlohmann::json({1, 6, 3, 1}));
  CHECK(doc.contains("flag_f"));
  CHECK(doc.contains("flag_h"));
  CHECK(doc["complex"]["facets"].size() == 11);
}

TEST_CASE("decompose and shelling report verified certificates") {
  std::string tree = run_text(triple_job("decompose"));
  CHECK(tree.find("vertex-decomposable: yes") != std::string::npos);
  CHECK(tree.find("77 nodes") != std::string::npos);

  std::string shelling = run_text(triple_job("shelling"));
  CHECK(shelling.find("shellable: yes") != std::string::npos);
  CHECK(shelling.find("11 facets") != std::string::npos);
  CHECK(shelling.find("restriction {2^(1), 2^(2), 2^(3)}") != std::string::npos);
}

TEST_CASE("ideal commands render generators and preconditions") {
  std::string sr = run_text(triple_job("sr"));
  CHECK(sr.find("18 minimal generators") != std::string::npos);
  CHECK(sr.find("x[3,2]*x[3,3]") != std::string::npos);

  std::string gin = run_text(triple_job("gin"));
  CHECK(gin.find("18 minimal generators") != std::string::npos);
  CHECK(gin.find("x[1,1]*x[1,1]") != std::string::npos);

  std::string shift = run_text(triple_job("shift"));
  CHECK(shift.find("18 minimal generators") != std::string::npos);
  CHECK(shift.find("h-vector: (1,6,3,1)") != std::string::npos);

  JobSpec skew;
  skew.command = "gin";
  skew.inline_monomials = "x[1,1]*x[2,1]";
  skew.inline_d = 2;
  skew.inline_m = {2, 2};
  std::ostringstream out;
  CHECK_THROWS_AS(run_job(skew, out), input_error);
}

TEST_CASE("betti selects targets methods and gradings") {
  JobSpec job = triple_job("betti");
  job.targets = "sr";
  job.method = "koszul";
  job.grading = "z";
  std::string text = run_text(job);
  CHECK(text.find("total: 1 18 56 79 60 24 4") != std::string::npos);
  CHECK(text.find("1: . 18 53 69 48 18 3") != std::string::npos);

  job.targets = "sr,gin";
  job.method = "all";
  job.grading = "zd";
  std::string compared = run_text(job);
  CHECK(compared.find("all methods agree") != std::string::npos);

  nlohmann::json doc = run_json(job);
  CHECK(doc["agree"] == true);
  CHECK(doc["tables"].size() >= 3);  // sr scans twice, gin at least once
  CHECK(doc["comparisons"].size() == doc["tables"].size() * (doc["tables"].size() - 1) / 2);
}

TEST_CASE("betti rejects inapplicable explicit methods by name") {
  JobSpec job = triple_job("betti");
  job.targets = "gin";
  job.method = "hochster";  // the gin has square generators
  std::ostringstream out;
  try {
    run_job(job, out);
    FAIL("expected an input error");
  } catch (const input_error& e) {
    CHECK(std::string(e.what()).find("squarefree") != std::string::npos);
    CHECK(std::string(e.what()).find("gin") != std::string::npos);
  }
  job.method = "warp";
  CHECK_THROWS_AS(run_job(job, out), input_error);
  job.method = "koszul";
  job.targets = "everything";
  CHECK_THROWS_AS(run_job(job, out), input_error);
}

TEST_CASE("betti ideal indexing shifts the reported rows") {
  JobSpec job;
  job.command = "betti";
  job.inline_monomials = "x[1,1]*x[2,1]";
  job.inline_d = 2;
  job.inline_m = {1, 1};
  job.targets = "complement";
  job.grading = "z";
  job.ideal_indexing = true;
  std::string text = run_text(job);
  CHECK(text.find("total: 2 1") != std::string::npos);
  CHECK(text.find("2: 2 .") != std::string::npos);  // generators in degree 2
  nlohmann::json doc = run_json(job);
  // entries are keyed by the shifted homological index
  bool found = false;
  for (const auto& entry : doc["tables"][0]["betti"]["entries"])
    if (entry["k"] == 0 && entry["degree"] == nlohmann::json({2})) found = true;
  CHECK(found);
}

TEST_CASE("verify command reports batteries and exit codes") {
  JobSpec job;
  job.command = "verify";
  job.property = "hvector";
  job.max_count = 20;
  int code = -1;
  std::string text = run_text(job, &code);
  CHECK(code == 0);
  CHECK(text.find("hvector") != std::string::npos);
  CHECK(text.find("pass") != std::string::npos);
  CHECK(text.find("summary: 1 passed, 0 failed, 0 resource-capped") != std::string::npos);

  nlohmann::json doc = run_json(job);
  CHECK(doc["batteries"].size() == 1);
  CHECK(doc["batteries"][0]["outcome"] == "pass");
  CHECK(doc["summary"]["failed"] == 0);

  job.property = "no-such-battery";
  std::ostringstream out;
  CHECK_THROWS_AS(run_job(job, out), input_error);
}

TEST_CASE("identical jobs give byte-identical output") {
  JobSpec job = triple_job("betti");
  job.targets = "sr,gin";
  job.method = "all";
  job.grading = "zd";
  CHECK(run_text(job) == run_text(job));
  JobSpec sample;
  sample.command = "verify";
  sample.property = "shifted-stable";
  sample.max_count = 25;
  sample.seed = 99;
  CHECK(run_text(sample) == run_text(sample));
}
