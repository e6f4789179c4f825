//  Copyright 2026 The latrepr Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include <doctest.h>

#include "latrepr/families.hpp"
#include "latrepr/generate.hpp"
#include "oracle.hpp"

using namespace latrepr;

namespace {

const ProbeVerdict& verdict(const DescriptorReport& r, Flag flag) {
  for (const auto& v : r.verdicts) {
    if (v.flag == flag) return v;
  }
  FAIL("no verdict for " << flag_name(flag));
  return r.verdicts.front();
}

bool refuted(const DescriptorReport& r, Flag flag) { return verdict(r, flag).status == ProbeStatus::kRefuted; }

}  // namespace

TEST_CASE("rationals in the unit interval") {
  const auto q = make_family("qunit");
  CHECK(q.leq("1/3", "1/2"));
  CHECK(q.join("1/3", "1/2") == "1/2");
  CHECK(q.meet("2/4", "1/3") == "1/3");
  CHECK(q.normalize(" 6/8 ") == "3/4");
  CHECK_THROWS_AS(q.normalize("3/2"), ParseError);
  CHECK_THROWS_AS(q.normalize("1/0"), ParseError);
  CHECK_THROWS_AS(q.normalize("a/b"), ParseError);

  CHECK(q.contains("cut:inv_sqrt2", "3/4"));
  CHECK_FALSE(q.contains("cut:inv_sqrt2", "2/3"));
  // 1/√2 lies in (0.7071, 0.7072).
  CHECK_FALSE(q.contains("cut:inv_sqrt2", "7071/10000"));
  CHECK(q.contains("cut:inv_sqrt2", "7072/10000"));
  CHECK(q.contains("cut:golden", "618034/1000000"));
  CHECK_FALSE(q.contains("cut:golden", "618033/1000000"));
}

TEST_CASE("irrational cuts are exact on both sides of their bracket") {
  for (const auto& r : {cut_inverse_sqrt2(), cut_golden(), cut_sqrt2_minus_one()}) {
    CHECK(r.eval(r.lo) * r.eval(r.hi) < 0);
    for (std::size_t k = 1; k <= 30; ++k) {
      const auto [lo, hi] = r.bracket(k);
      CHECK(hi - lo == (r.hi - r.lo) / Rational(boost::multiprecision::cpp_int(1) << k));
      CHECK_FALSE(r.below(lo));
      CHECK(r.below(hi));
    }
  }
}

TEST_CASE("non-positive grid with a bottom") {
  const auto g = make_family("nbar2bot");
  CHECK(g.meet("(-1,-2)", "(-2,-1)") == "(-2,-2)");
  CHECK(g.join("(-1,-2)", "(-2,-1)") == "(-1,-1)");
  CHECK(g.meet("bot", "(0,0)") == "bot");
  CHECK(g.top() == "(0,0)");
  CHECK_THROWS_AS(g.normalize("(1,0)"), ParseError);

  const auto t = g.truncate(2);
  CHECK(t.size() == 5);
  CHECK(is_distributive(t));

  const auto r = g.check("xge:-1");
  CHECK(refuted(r, Flag::kComplete));
  // The refuting chain descends in the second coordinate, toward the bottom.
  const auto& w = verdict(r, Flag::kComplete);
  REQUIRE(w.bound);
  CHECK(*w.bound == "bot");
  CHECK(w.witness.size() == NbarSquaredWithBottom::kChainLength);
  CHECK(r.matches());
}

TEST_CASE("non-positive grid over the naturals") {
  const auto g = make_family("nbar2nat");
  CHECK(g.leq("n5", "(-3,-7)"));
  CHECK_FALSE(g.leq("(-3,-7)", "n5"));
  CHECK(g.join("n2", "n7") == "n7");
  CHECK(g.meet("n9", "(-50,-50)") == "n9");
  CHECK(g.bottom() == "n0");
  CHECK(g.contains("xstrip:2", "(-2,-9)"));
  CHECK_FALSE(g.contains("xstrip:2", "(-3,0)"));
  CHECK_FALSE(g.contains("xstrip:2", "n100"));

  const NbarSquaredOverNats f;
  const auto v = f.refute_join_density(stack_grid(-1, -1));
  CHECK(v.refuted);
  CHECK(v.finite_subsets_checked > 0);
  CHECK(v.upper_bounds_checked > 0);
  CHECK_THROWS_AS(f.refute_join_density(stack_nat(3)), Error);
  for (const auto& d : g.density_checks()) CHECK(d.refuted);
}

TEST_CASE("finite and cofinite sets") {
  const auto b = make_family("fincofin");
  const FiniteCofiniteBA f;
  CHECK(complement(finite_set({1, 0})) == cofinite_set({0, 1}));
  CHECK(f.encode(complement(finite_set({0, 1}))) == "cof{0,1}");
  CHECK(b.join("fin{0}", "cof{0,1}") == "cof{1}");
  CHECK(b.meet("fin{0,2,3}", "cof{3}") == "fin{0,2}");
  CHECK(b.leq("fin{4}", "cof{0,1}"));
  CHECK_FALSE(b.leq("cof{}", "fin{0}"));
  CHECK_THROWS_AS(b.normalize("set{1}"), ParseError);

  const auto t = b.truncate(2);
  CHECK(t.size() == 4);
  CHECK(are_isomorphic(t, boolean_algebra(2)));

  const auto r = b.check("frechet");
  CHECK(refuted(r, Flag::kComplete));
  CHECK(*verdict(r, Flag::kComplete).bound == "fin{}");
  CHECK(r.matches());
}

TEST_CASE("unions of rational intervals") {
  const auto b = make_family("ratint");
  CHECK(b.join("[0,1/2)", "[1/2,1)") == b.top());
  CHECK(b.top() == "[0,1)");
  CHECK(b.meet("[0,1/2)", "[1/3,1)") == "[1/3,1/2)");
  CHECK(b.normalize("[1/2,1)+[0,1/4)+[1/4,1/3)") == "[0,1/3)+[1/2,1)");
  CHECK_THROWS_AS(make_interval_set({{Rational(1, 2), Rational(1, 3)}}), MalformedInterval);
  CHECK_THROWS_AS(make_interval_set({{Rational(0), Rational(2)}}), MalformedInterval);
  CHECK_THROWS_AS(b.normalize("[1/2,1/2)"), MalformedInterval);
  const RationalIntervalBA f;
  const auto a = f.decode("[1/5,2/5)+[3/5,4/5)");
  CHECK(f.join(a, complement(a)) == f.top());
  CHECK(f.meet(a, complement(a)) == f.bottom());
  CHECK(f.truncate(3).size() == 8);
}

TEST_CASE("truncations are the expected finite lattices") {
  const auto t = make_family("qunit").truncate(3);
  CHECK(t.size() == 5);  // 0, 1/3, 1/2, 2/3, 1
  CHECK(are_isomorphic(t, chain(5)));
  CHECK_THROWS_AS(make_family("qunit").truncate(0), Error);
  CHECK(make_family("nbar2nat").truncate(3).size() == 12);
}

TEST_CASE("truncation agrees with the oracle") {
  for (const auto& id : family_ids()) {
    CAPTURE(id);
    const auto r = make_family(id).coherence(5, 10000, 7);
    CHECK(r.pairs == 10000);
    CHECK(r.mismatches == 0);
    CHECK(r.comparisons > r.pairs);
  }
}

TEST_CASE("truncations match a brute-force order check") {
  for (const auto& id : family_ids()) {
    CAPTURE(id);
    const auto t = make_family(id).truncate(3);
    oracle::Matrix m(t.size(), std::vector<bool>(t.size()));
    for (Element a = 0; a < t.size(); ++a) {
      for (Element b = 0; b < t.size(); ++b) m[a][b] = t.leq(a, b);
    }
    CHECK(oracle::is_lattice(m));
    CHECK(oracle::distributive(m));
  }
}

TEST_CASE("every catalog claim is reproduced") {
  for (const auto& id : family_ids()) {
    const auto family = make_family(id);
    for (const auto& r : family.check_catalog()) {
      CAPTURE(id);
      CAPTURE(r.name);
      CHECK(r.matches());
      CHECK(r.verdicts.front().status == ProbeStatus::kVerified);
      for (const auto& v : r.verdicts) CHECK(v.budget == kDefaultBudget);
    }
  }
}

TEST_CASE("specific classifications") {
  const auto q = make_family("qunit");
  const auto half = q.check("principal:1/2");
  CHECK_FALSE(refuted(half, Flag::kComplete));
  // Elements below 1/2 ascend to it, and none is a member.
  CHECK(refuted(half, Flag::kCompletelyPrime));
  CHECK(*verdict(half, Flag::kCompletelyPrime).bound == "1/2");

  for (const auto& name : {"cut:inv_sqrt2", "cut:golden", "cut:sqrt2_minus_1"}) {
    const auto r = q.check(name);
    CHECK_FALSE(refuted(r, Flag::kComplete));
    CHECK_FALSE(refuted(r, Flag::kCompletelyPrime));
  }

  // A rational infimum with elements below it: the ascending chain refutes.
  for (const auto& x : {"1/7", "3/5", "11/12", "1"}) {
    CAPTURE(x);
    const auto r = q.check(std::string("principal:") + x);
    CHECK(refuted(r, Flag::kCompletelyPrime));
    CHECK(r.confirmed.back());
  }

  const auto ho = q.check("halfopen:1/4");
  CHECK(refuted(ho, Flag::kComplete));
  CHECK(ho.matches());

  const auto n = make_family("nbar2nat").check("ystrip:3");
  CHECK_FALSE(refuted(n, Flag::kComplete));
  CHECK_FALSE(refuted(n, Flag::kCompletelyPrime));

  const auto p = make_family("fincofin").check("point:4");
  CHECK(p.matches());
  CHECK_FALSE(refuted(p, Flag::kComplete));

  const auto i = make_family("ratint").check("point:2/7");
  CHECK(refuted(i, Flag::kComplete));
  CHECK(refuted(i, Flag::kCompletelyPrime));
  CHECK(i.matches());
}

TEST_CASE("a non-filter fails the filter check") {
  const UnitIntervalRationals f;
  FilterDescriptor<Rational> d;
  d.name = "gap";
  d.contains = [](const Rational& a) { return a >= Rational(1, 2) && a != Rational(2, 3); };
  const auto v = probe_descriptor(f, d);
  CHECK(v.front().status == ProbeStatus::kRefuted);
}

TEST_CASE("a false positive claim is refuted, and an unrefuted negative claim throws") {
  const UnitIntervalRationals f;
  auto d = UnitIntervalRationals::half_open(Rational(1, 2));
  d.claims = {{Flag::kComplete, true, "wrong on purpose"}};
  const auto v = probe_descriptor(f, d);
  CHECK_FALSE(v.back().matches());
  CHECK(confirm_refutation(f, d, v.back()));

  auto p = UnitIntervalRationals::principal(Rational(1, 2));
  p.claims = {{Flag::kComplete, false, "wrong on purpose"}};
  CHECK_THROWS_AS(check_descriptor(f, p), BudgetExhausted);
  CHECK_THROWS_AS(probe_descriptor(f, p, 0), Error);
}

TEST_CASE("lookup errors") {
  CHECK_THROWS_AS(make_family("reals"), UnknownFamily);
  CHECK_THROWS_AS(make_family("qunit").check("nonsense"), ParseError);
  CHECK_THROWS_AS(make_family("nbar2bot").check("xge:2"), ParseError);
}
