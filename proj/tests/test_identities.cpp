#include "fqsum/identities.hpp"
#include "fqsum/render.hpp"
#include "findings.hpp"

#include <doctest.h>

#include <atomic>
#include <set>

using namespace fqsum;

namespace {

SumContext context(std::uint64_t q) {
  auto [p, r] = prime_power_decompose(q);
  return SumContext(build_field(p, r));
}

VerifyOptions exhaustive(std::size_t cap = 10) {
  VerifyOptions o;
  o.max_counterexamples = cap;
  return o;
}

VerifyOptions sampled(std::uint64_t samples, std::uint64_t seed, unsigned jobs = 1) {
  VerifyOptions o;
  o.mode = VerifyMode::Sampled;
  o.samples = samples;
  o.seed = seed;
  o.jobs = jobs;
  return o;
}

std::string dump(const std::vector<VerifyReport>& reports) {
  std::string out;
  for (const auto& r : reports) out += to_json(r).dump() + "\n";
  return out;
}

std::vector<std::string> names(const IdentityCase& c) {
  std::vector<std::string> out;
  for (const auto& p : c.params) out.push_back(p.name);
  return out;
}

}  // namespace

TEST_CASE("registry shape") {
  const auto& reg = registry();
  CHECK(reg.size() >= 26);
  std::set<std::string> ids;
  for (const auto& c : reg) {
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.statement.empty());
    CHECK_FALSE(c.mutation.empty());
    CHECK(c.lhs);
    CHECK(c.rhs);
  }
  for (const char* id : {"thm1.1", "thm1.2", "thm1.3", "cor1.1-sym", "cor1.1-diag", "cor1.1-y1", "prop2.1-a",
                         "prop2.1-b", "prop2.2", "prop2.3-a", "prop2.3-b", "thm3.1-a", "thm3.1-b", "thm3.3-a",
                         "thm3.3-b", "thm3.3-c", "thm3.4-a", "thm3.4-b", "cor3.1", "cor3.1-greene-extended",
                         "cor3.2-a", "cor3.2-b", "thm3.7", "cor3.3", "thm4.1", "thm4.2", "thm4.3-a", "thm4.3-b"}) {
    CHECK(ids.count(id) == 1);
  }
  for (const auto& f : findings::all()) CHECK(ids.count(f.restricted_id) == 1);
  CHECK(names(find_identity("thm3.3-a")) == std::vector<std::string>{"A", "B", "B'", "C", "x", "y"});
  CHECK(names(find_identity("prop2.3-a")) == std::vector<std::string>{"t"});
  CHECK_THROWS_AS(find_identity("bogus"), UnknownIdentityError);
}

TEST_CASE("clearing factors and divisibility sides") {
  CHECK(find_identity("thm1.1").clearing_power == 1);
  CHECK(find_identity("thm1.3").clearing_power == 2);
  for (const char* id : {"thm1.1", "thm1.3"}) CHECK(find_identity(id).divisible == DivisibleSide::Rhs);
  for (const char* id : {"thm4.1", "thm4.2", "thm4.3-a", "thm4.3-b"}) {
    CHECK(find_identity(id).clearing_power == 1);
    CHECK(find_identity(id).divisible == DivisibleSide::Lhs);
  }
}

TEST_CASE("domain sizes") {
  CHECK(find_identity("thm1.3").domain_size(5) == 6400);
  CHECK(find_identity("thm1.3").domain_size(4) == 1296);
  CHECK(find_identity("thm1.2").domain_size(3) == 8);
  CHECK(find_identity("thm3.3-a").domain_size(9) == 331776);
  CHECK(find_identity("thm3.7").domain_size(5) == 4 * 4 * 4 * 4 * 3 * 3);
  CHECK(find_identity("cor3.1").domain_size(5) == 4 * 4 * 4 * 4);
  CHECK(find_identity("thm4.1").domain_size(7) == 6 * 6 * 6 * 6 * 7 * 7 * 7);
}

TEST_CASE("spot checks") {
  SumContext c4 = context(4);
  const VerifyReport r = verify("thm1.3", c4, exhaustive());
  CHECK(r.cases == 1296);
  CHECK(r.passed());
  CHECK(r.counterexamples.empty());
  CHECK_FALSE(r.seed.has_value());

  SumContext c3 = context(3);
  const VerifyReport g = verify("thm1.2", c3, exhaustive());
  CHECK(g.cases == 8);
  CHECK(g.passed());
}

TEST_CASE("sign-flipped entries fail at q = 3") {
  SumContext c3 = context(3);
  VerifyOptions o = exhaustive();
  o.mutated = true;
  for (const char* id : {"prop2.1-b", "thm3.1-a", "cor3.3"}) {
    const VerifyReport r = verify(id, c3, o);
    CHECK(r.mutated);
    CHECK_FALSE(r.counterexamples.empty());
  }
}

TEST_CASE("every entry is sensitive to its mutation at q = 5") {
  SumContext c5 = context(5);
  VerifyOptions o = exhaustive(1);
  o.mutated = true;
  for (const auto& c : registry()) {
    CAPTURE(c.id);
    CHECK_FALSE(verify(c, c5, o).passed());
  }
}

TEST_CASE("all entries hold for q in {3, 4, 5} apart from the analysed failures") {
  for (std::uint64_t q : {3u, 4u, 5u}) {
    SumContext ctx = context(q);
    for (const auto& c : registry()) {
      CAPTURE(q);
      CAPTURE(c.id);
      const findings::Finding* f = findings::find(c.id);
      if (!f) {
        const VerifyReport r = verify(c, ctx, exhaustive());
        CHECK(r.passed());
        CHECK(r.not_divisible == 0);
        CHECK(r.cases == c.domain_size(q));
        continue;
      }
      const VerifyReport r = verify(c, ctx, exhaustive(1u << 20));
      CHECK(r.not_divisible == 0);
      CHECK(r.counterexamples.size() == r.failures);
      if (!f->fails_off_lines) CHECK(findings::failures_off_lines(*f, c, r) == 0);
      CHECK(verify(f->restricted_id, ctx, exhaustive()).passed());
    }
  }
}

TEST_CASE("the analysed failures are real at q = 5") {
  SumContext c5 = context(5);
  for (const auto& f : findings::all()) {
    CAPTURE(f.id);
    const VerifyReport r = verify(f.id, c5, exhaustive(1u << 20));
    CHECK(r.failures > 0);
    for (const auto& cx : r.counterexamples) CHECK(cx.reason == "mismatch");
  }
}

TEST_CASE("restricted domains are never evaluated outside the domain") {
  SumContext c5 = context(5);
  IdentityCase probe = find_identity("thm3.7");
  std::atomic<int> bad{0}, calls{0};
  SideFn inner = probe.lhs;
  probe.lhs = [&](const Args& a) {
    ++calls;
    auto [x, y] = a.elems<2>();
    if (x.is_zero() || x.is_one() || y.is_zero() || y.is_one()) ++bad;
    return inner(a);
  };
  CHECK(verify(probe, c5, exhaustive()).passed());
  CHECK(calls == 2304);
  CHECK(verify(probe, c5, sampled(500, 1)).passed());
  CHECK(calls == 2804);
  CHECK(bad == 0);
}

TEST_CASE("failure reasons") {
  SumContext c5 = context(5);
  IdentityCase c = find_identity("thm1.1");
  c.rhs = [](const Args& a) { return a.ctx().integer(1); };
  c.lhs = c.rhs;
  VerifyReport r = verify(c, c5, exhaustive(3));
  CHECK(r.failures == r.cases);
  CHECK(r.not_divisible == r.cases);
  REQUIRE(r.counterexamples.size() == 3);
  CHECK(r.counterexamples[0].reason.rfind("not-divisible", 0) == 0);
  CHECK(r.counterexamples[0].ordinal == 0);
  CHECK(r.counterexamples[2].ordinal == 2);

  c.divisible = DivisibleSide::None;
  c.lhs = [](const Args& a) { return a.ctx().integer(2); };
  r = verify(c, c5, exhaustive(0));
  CHECK(r.failures == r.cases);
  CHECK(r.counterexamples.empty());

  c.lhs = [](const Args&) -> CycInt { throw std::runtime_error("boom"); };
  r = verify(c, c5, exhaustive(1));
  REQUIRE(r.counterexamples.size() == 1);
  CHECK(r.counterexamples[0].reason == "error: boom");
  CHECK_FALSE(r.counterexamples[0].lhs.has_value());
}

TEST_CASE("counterexample values decode in parameter order") {
  SumContext c5 = context(5);
  const VerifyReport r = verify("thm3.3-b", c5, exhaustive(1));
  REQUIRE(r.counterexamples.size() == 1);
  const auto& cx = r.counterexamples[0];
  REQUIRE(cx.values.size() == 6);
  // mixed radix, first parameter most significant
  std::uint64_t ordinal = 0;
  const std::vector<std::uint64_t> radix{4, 4, 4, 4, 5, 5};
  for (std::size_t i = 0; i < 6; ++i) ordinal = ordinal * radix[i] + cx.values[i];
  CHECK(ordinal == cx.ordinal);
  CHECK(r.param_names == std::vector<std::string>{"A", "B", "B'", "C", "x", "y"});
}

TEST_CASE("sampling is deterministic and independent of jobs") {
  SumContext c5 = context(5);
  const std::string a = dump(verify_all(c5, sampled(1000, 42)));
  const std::string b = dump(verify_all(c5, sampled(1000, 42)));
  CHECK(a == b);
  CHECK(a != dump(verify_all(c5, sampled(1000, 43))));
  CHECK(a == dump(verify_all(c5, sampled(1000, 42, 3))));
  for (const auto& r : verify_all(c5, sampled(10, 42))) {
    CHECK(r.cases == 10);
    CHECK(r.seed == std::optional<std::uint64_t>(42));
  }
}

TEST_CASE("exhaustive reports are independent of jobs") {
  SumContext c7 = context(7);
  VerifyOptions one = exhaustive(5), many = exhaustive(5);
  many.jobs = 8;
  for (const char* id : {"thm1.1", "thm3.3-a", "thm3.7", "cor1.1-sym"}) {
    CHECK(to_json(verify(id, c7, one)).dump() == to_json(verify(id, c7, many)).dump());
  }
}

TEST_CASE("verify validates its options") {
  SumContext c3 = context(3);
  CHECK_THROWS(verify("thm1.1", c3, sampled(0, 1)));
  CHECK_THROWS_AS(verify("bogus", c3, exhaustive()), UnknownIdentityError);
}

TEST_CASE("verify_all records per-entry results in registry order") {
  SumContext c3 = context(3);
  const auto reports = verify_all(c3, exhaustive());
  REQUIRE(reports.size() == registry().size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].id == registry()[i].id);
    CHECK_FALSE(reports[i].error.has_value());
  }
}

TEST_CASE("report JSON") {
  SumContext c5 = context(5);
  const VerifyReport r = verify("thm3.3-b", c5, exhaustive(2));
  const Json j = to_json(r);
  CHECK(j["id"] == "thm3.3-b");
  CHECK(j["q"] == 5);
  CHECK(j["mode"] == "exhaustive");
  CHECK(j["seed"].is_null());
  CHECK(j["cases"] == 6400);
  CHECK(j["passed"] == false);
  CHECK_FALSE(j.contains("ms"));
  CHECK(to_json(r, true).contains("ms"));
  REQUIRE(j["counterexamples"].size() == 2);
  const Json& cx = j["counterexamples"][0];
  CHECK(cx["binding"].contains("B'"));
  CHECK(cx["lhs"]["n"] == 4);
  CHECK(cx["lhs"]["coeffs"][0].is_string());
  CHECK(Json::parse(j.dump()) == j);
}
