#include <doctest.h>

#include <algorithm>
#include <set>

#include "hypdef/error.hpp"
#include "hypdef/verify.hpp"

using namespace hypdef;

namespace {

CheckReport report(const std::string& id, Status s, double err, std::optional<double> tol) {
  CheckReport r;
  r.check_id = id;
  r.status = s;
  r.max_error = err;
  r.tolerance = tol;
  r.samples = 3;
  r.seed = 42;
  r.details = nlohmann::ordered_json::array({{{"x", 0.5}, {"error", err}}});
  return r;
}

}  // namespace

TEST_CASE("empty report list") {
  const std::vector<CheckReport> none;
  CHECK(nlohmann::json::parse(emit_json(none)) == nlohmann::json::array());
  CHECK(emit_json(none).find("[]") == 0);
  CHECK(exit_code(none) == 0);
}

TEST_CASE("exit codes") {
  CHECK(exit_code({report("a", Status::Pass, 0.0, 1.0)}) == 0);
  CHECK(exit_code({report("a", Status::Diverges, 0.0, 1.0)}) == 0);
  CHECK(exit_code({report("a", Status::Pass, 0.0, 1.0), report("b", Status::Fail, 2.0, 1.0)}) != 0);
}

TEST_CASE("status names") {
  for (Status s : {Status::Pass, Status::Fail, Status::Diverges}) CHECK(status_from_string(to_string(s)) == s);
  CHECK_THROWS_AS(status_from_string("ok"), ParseError);
}

TEST_CASE("json round-trip is stable") {
  const std::vector<CheckReport> in{report("x.one", Status::Pass, 1e-13, 1e-10),
                                    report("x.two", Status::Fail, 0.5, 1e-3),
                                    report("x.info", Status::Pass, 2.8, std::nullopt)};
  const std::string text = emit_json(in);
  const std::vector<CheckReport> out = parse_json(text);
  REQUIRE(out.size() == in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    CHECK(out[i].check_id == in[i].check_id);
    CHECK(out[i].status == in[i].status);
    CHECK(out[i].max_error == in[i].max_error);
    CHECK(out[i].tolerance == in[i].tolerance);
    CHECK(out[i].samples == in[i].samples);
    CHECK(out[i].seed == in[i].seed);
    CHECK(out[i].details == in[i].details);
  }
  CHECK(emit_json(out) == text);
  const auto j = nlohmann::json::parse(text);
  CHECK(j[2]["tolerance"].is_null());
  std::vector<std::string> keys;
  const auto first = nlohmann::ordered_json::parse(text)[0];
  for (auto it = first.begin(); it != first.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"check_id", "status", "max_error", "tolerance", "samples", "seed", "details"});
  CHECK_THROWS_AS(parse_json("{"), ParseError);
}

TEST_CASE("text output has one line per check") {
  const std::string text = emit_text({report("a.b", Status::Pass, 0.0, 1.0), report("c.d", Status::Fail, 2.0, 1.0)});
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
  CHECK(text.find("PASS  a.b") != std::string::npos);
  CHECK(text.find("FAIL  c.d") != std::string::npos);
}

TEST_CASE("every suite passes at the default configuration") {
  for (const std::string& suite : suite_names()) {
    VerifyConfig cfg;
    cfg.seed = 7;
    const auto reports = run_suite(suite, cfg);
    CHECK_MESSAGE(exit_code(reports) == 0, suite);
    std::set<std::string> ids;
    for (std::size_t i = 0; i < reports.size(); ++i) {
      CHECK(reports[i].check_id.rfind(suite + ".", 0) == 0);
      CHECK(reports[i].seed == 7);
      ids.insert(reports[i].check_id);
      if (i > 0) CHECK(reports[i - 1].check_id < reports[i].check_id);
    }
    CHECK(ids.size() == reports.size());
  }
}

TEST_CASE("reports are deterministic for a seed") {
  VerifyConfig cfg;
  cfg.seed = 3;
  CHECK(emit_json(run_suite("weitzenbock", cfg)) == emit_json(run_suite("weitzenbock", cfg)));
  cfg.seed = 4;
  const std::string other = emit_json(run_suite("weitzenbock", cfg));
  cfg.seed = 3;
  CHECK(other != emit_json(run_suite("weitzenbock", cfg)));
}

TEST_CASE("divergence is an expected outcome only when b2 is nonzero") {
  VerifyConfig cfg;
  cfg.b2 = 1.0;
  const auto reports = run_suite("cusp", cfg);
  bool seen = false;
  for (const auto& r : reports)
    if (r.check_id == "cusp.l2") {
      CHECK(r.status == Status::Diverges);
      seen = true;
    }
  CHECK(seen);
  CHECK(exit_code(reports) == 0);
}

TEST_CASE("tolerance override applies to asserted checks only") {
  VerifyConfig cfg;
  cfg.tol = 1e-30;
  const auto reports = run_suite("decay", cfg);
  CHECK(exit_code(reports) != 0);
  for (const auto& r : reports) {
    if (r.check_id == "decay.laplacian-leading-constant") {
      CHECK_FALSE(r.tolerance.has_value());
      CHECK(r.status == Status::Pass);
    } else {
      CHECK(r.tolerance == 1e-30);
    }
  }
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(run_suite("no-such-suite", {}), ConfigError);
  VerifyConfig cfg;
  cfg.field = "z^";
  CHECK_THROWS_AS(run_suite("horosphere", cfg), ParseError);
}

TEST_CASE("sampler") {
  Sampler a(9), b(9);
  for (int i = 0; i < 50; ++i) {
    const HPoint p = a.point(), q = b.point();
    CHECK(p.x == q.x);
    CHECK(p.y == q.y);
    CHECK(p.t == q.t);
    CHECK(p.x >= 0.0);
    CHECK(p.x <= 1.0);
    CHECK(p.t >= 0.05);
    CHECK(p.t <= 2.0);
  }
}
