#include <doctest.h>

#include <json.hpp>

#include "umbra/report.hpp"

using namespace umbra;
using nlohmann::json;

namespace {

ReportDocument sample_doc() {
  ReportDocument doc;
  doc.config_echo = {{"command", "verify"}, {"suite", "golden"}};
  doc.records.push_back(make_record(
      "golden.example", {{"umbra", "bernoulli"}, {"x", "1"}},
      -0.57721566490153287, -0.57721566490153232, OracleKind::Quadrature, 1e-8));
  doc.records.push_back(make_record("mc.example", {}, 0.5, 0.50002,
                                    OracleKind::MonteCarlo, 8e-4, 2e-4));
  EvalRow row;
  row.inputs = {{"func", "log"}, {"umbra", "euler"}, {"x", "0.5"}};
  row.value = -1.4763359659735847;
  row.has_value = true;
  row.branch = "Midpoint";
  doc.rows.push_back(row);
  EvalRow bad;
  bad.inputs = {{"func", "invpow"}, {"umbra", "bernoulli"}, {"x", "0.5"}, {"k", "2"}};
  bad.error = "divergent moment";
  doc.rows.push_back(bad);
  doc.summary = summarize_records(doc.records);
  doc.wall_time_seconds = 1.25;
  return doc;
}

}  // namespace

TEST_CASE("json report round-trips and is deterministic") {
  const ReportDocument doc = sample_doc();
  const std::string a = to_json(doc);
  const std::string b = to_json(doc);
  CHECK(a == b);
  CHECK(a.find("wall_time") == std::string::npos);

  const json parsed = json::parse(a);
  CHECK((parsed["version"] == kToolVersion));
  CHECK((parsed["config"]["suite"] == "golden"));
  REQUIRE((parsed["records"].size() == 2));
  const auto& r0 = parsed["records"][0];
  CHECK((r0["identity_id"] == "golden.example"));
  CHECK((r0["inputs"]["x"] == "1"));
  CHECK((r0["closed_form"].get<double>() == doc.records[0].closed_form));
  CHECK((r0["oracle"].get<double>() == doc.records[0].oracle));
  CHECK((r0["abs_err"].get<double>() == doc.records[0].abs_err));
  CHECK(r0["mc_std_err"].is_null());
  CHECK((r0["pass"].get<bool>() == doc.records[0].pass));
  const auto& r1 = parsed["records"][1];
  CHECK((r1["mc_std_err"].get<double>() == 2e-4));

  REQUIRE((parsed["rows"].size() == 2));
  CHECK((parsed["rows"][0]["value"].get<double>() == doc.rows[0].value));
  CHECK((parsed["rows"][0]["branch"] == "Midpoint"));
  CHECK(parsed["rows"][1]["value"].is_null());
  CHECK((parsed["rows"][1]["error"] == "divergent moment"));

  CHECK((parsed["summary"]["total"].get<int>() == 2));
}

TEST_CASE("record pass policy") {
  const auto quad_ok = make_record("a", {}, 1.0, 1.0 + 5e-9, OracleKind::Quadrature, 1e-8);
  CHECK(quad_ok.pass);
  const auto quad_bad = make_record("a", {}, 1.0, 1.0 + 5e-8, OracleKind::Quadrature, 1e-8);
  CHECK(!quad_bad.pass);
  // relative scaling for large values
  const auto quad_rel = make_record("a", {}, 1e6, 1e6 + 1e-3, OracleKind::Quadrature, 1e-8);
  CHECK(quad_rel.pass);
  // statistical policy
  const auto mc_ok = make_record("m", {}, 0.0, 3e-4, OracleKind::MonteCarlo, 0.0, 1e-4);
  CHECK(mc_ok.pass);
  const auto mc_bad = make_record("m", {}, 0.0, 5e-4, OracleKind::MonteCarlo, 0.0, 1e-4);
  CHECK(!mc_bad.pass);
  // non-finite values never pass
  const auto inf_rec = make_record("i", {}, 1.0, std::nan(""), OracleKind::Reference, 1.0);
  CHECK(!inf_rec.pass);
}

TEST_CASE("csv output shape") {
  const ReportDocument doc = sample_doc();
  const std::string csv = to_csv(doc);
  CHECK(csv.find("identity_id,inputs,closed_form") != std::string::npos);
  CHECK(csv.find("func,umbra,x,k,n,index,value,branch") != std::string::npos);
  CHECK(csv.find("golden.example,umbra=bernoulli;x=1,") != std::string::npos);
  // error row keeps the value cell empty and carries the message
  CHECK((csv.find(",,divergent moment") != std::string::npos ||
         csv.find(",divergent moment") != std::string::npos));
  const std::string again = to_csv(doc);
  CHECK(csv == again);
}

TEST_CASE("text output mentions pass state and summary") {
  const ReportDocument doc = sample_doc();
  const std::string text = to_text(doc);
  CHECK(text.find("PASS golden.example") != std::string::npos);
  CHECK(text.find("summary: pass=") != std::string::npos);
}
