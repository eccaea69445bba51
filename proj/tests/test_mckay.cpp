#include <doctest.h>

#include "charcorr/errors.hpp"
#include "charcorr/mckay.hpp"
#include "test_util.hpp"

using namespace charcorr;
using namespace testutil;

namespace {

std::size_t standard_row(const CharacterTable& t) {
  const auto standard = fixed_point_character(t.classes) - ClassFunction::trivial(t.classes);
  return *t.find(standard);
}

}  // namespace

TEST_CASE("hypothesis flags") {
  const auto s = check_hypotheses(Subgroup::whole(s4()), 2);
  CHECK(s.solvable);
  CHECK(s.self_normalizing);
  CHECK(s.parity);
  const auto f3 = check_hypotheses(Subgroup::whole(f21()), 3);
  CHECK(f3.solvable);
  CHECK(f3.self_normalizing);
  CHECK(f3.parity);
  const auto f7 = check_hypotheses(Subgroup::whole(f21()), 7);
  CHECK_FALSE(f7.self_normalizing);
  CHECK(f7.normalizer.order() == 21);
  CHECK(f7.descent_refusal() == "self-normalizing hypothesis fails");
  const auto s3_3 = check_hypotheses(Subgroup::whole(s3()), 3);
  CHECK_FALSE(s3_3.parity);
  CHECK_THROWS_AS(check_hypotheses(Subgroup::whole(s3()), 4), InputError);
}

TEST_CASE("star map examples") {
  const auto inst = check_hypotheses(Subgroup::whole(s4()), 2);
  const auto& t = inst.table();
  const auto& tp = inst.sylow_table();
  CHECK(navarro_star(inst, 0) == 0);
  // a linear character restricts irreducibly
  for (auto c : t.linear()) {
    const auto res = restrict_to(t[c], inst.cache->fusion(inst.sylow, inst.group));
    CHECK(tp[navarro_star(inst, c)] == res);
  }
  const auto beta = navarro_star(inst, standard_row(t));
  CHECK(tp[beta].values() == std::vector<Cyc>{1, 1, 1, -1, -1});
  // degree 2 is excluded
  CHECK_THROWS_AS(navarro_star(inst, 2), HypothesisError);
  CHECK_THROWS_AS(navarro_star(check_hypotheses(Subgroup::whole(f21()), 7), 0), HypothesisError);
}

TEST_CASE("descent examples") {
  {
    const auto inst = check_hypotheses(Subgroup::whole(d8()), 2);
    for (std::size_t c = 0; c < 4; ++c) {
      const auto d = isaacs_descent(inst, c);
      CHECK(d.steps.empty());
      CHECK(d.xi == c);
    }
  }
  {
    const auto inst = check_hypotheses(Subgroup::whole(s4()), 2);
    const auto chi = standard_row(inst.table());
    const auto d = isaacs_descent(inst, chi);
    REQUIRE(d.steps.size() == 1);
    const auto& s = d.steps[0];
    CHECK(s.k.order() == 12);
    CHECK(s.l.order() == 4);
    CHECK(s.h == inst.sylow);
    CHECK(s.fixed_points == 1);
    CHECK(s.invariant_constituents == 1);
    const auto& tl = *inst.cache->table(s.l);
    CHECK(tl.degrees[s.theta] == 1);
    CHECK(s.theta != 0);
    CHECK(is_invariant(tl[s.theta], inst.sylow));
    CHECK(d.xi == navarro_star(inst, chi));
  }
  {
    const auto inst = check_hypotheses(Subgroup::whole(f21()), 3);
    const auto& t = inst.table();
    for (auto c : t.linear()) {
      const auto d = isaacs_descent(inst, c);
      REQUIRE(d.steps.size() == 1);
      CHECK(d.steps[0].k.order() == 7);
      CHECK(d.steps[0].l.order() == 1);
      CHECK(d.steps[0].theta == 0);
      CHECK(d.steps[0].h == inst.sylow);
      const auto res = restrict_to(t[c], inst.cache->fusion(inst.sylow, inst.group));
      CHECK(inst.sylow_table()[d.xi] == res);
    }
  }
  CHECK_THROWS_AS(isaacs_descent(check_hypotheses(Subgroup::whole(f21()), 7), 0), HypothesisError);
}

TEST_CASE("extension witnesses") {
  const auto inst = check_hypotheses(Subgroup::whole(s4()), 2);
  const auto& t = inst.table();
  const auto v4 = derived_series(inst.group)[2];
  const auto& tv = *inst.cache->table(v4);
  std::size_t lambda = 0;
  for (std::size_t i = 1; i < tv.size(); ++i)
    if (is_invariant(tv[i], inst.sylow)) lambda = i;
  const auto chi = standard_row(t);
  const auto w = check_extension(inst, v4, chi, lambda);
  CHECK(w.inertia == inst.sylow);
  const auto fus = inst.cache->fusion(v4, inst.sylow);
  CHECK(restrict_to(inst.sylow_table()[w.witness], fus) == tv[lambda]);
  // beta is one of the two extensions
  CHECK(restrict_to(inst.sylow_table()[navarro_star(inst, chi)], fus) == tv[lambda]);
  const auto triv = check_extension(inst, v4, 0, 0);
  CHECK(triv.inertia == inst.group);
  CHECK(triv.witness == 0);
  // theta must lie under chi
  CHECK_THROWS_AS(check_extension(inst, v4, 0, lambda), InputError);

  const auto f = check_hypotheses(Subgroup::whole(f21()), 3);
  const auto c7n = o_p_residual(f.group, 3);
  for (auto c : f.table().linear()) CHECK(check_extension(f, c7n, c, 0).inertia == f.group);
}

TEST_CASE("glauberman counts") {
  TableCache cache;
  const auto g = Subgroup::whole(s3());
  const auto c3 = sylow(g, 3);
  const auto c2 = sylow(g, 2);
  const auto one = Subgroup::trivial(s3());
  const auto& t1 = *cache.table(one);
  CHECK(check_glauberman_unique(c2, c3, one, t1[0], cache) == 1);
  CHECK(check_glauberman_unique(one, c3, c3, (*cache.table(c3))[1], cache) == 1);
  // P trivial acting on C3/1: all three linears are invariant
  CHECK(check_glauberman_unique(one, c3, one, t1[0], cache) == 3);
  CHECK_THROWS_AS(check_glauberman_unique(c3, c3, one, t1[0], cache), InputError);
}

TEST_CASE("McKay counts") {
  auto c = mckay_count(check_hypotheses(Subgroup::whole(s4()), 2));
  CHECK(c.group_count == 4);
  CHECK(c.normalizer_count == 4);
  c = mckay_count(check_hypotheses(Subgroup::whole(f21()), 3));
  CHECK(c.group_count == 3);
  CHECK(c.normalizer_count == 3);
  c = mckay_count(check_hypotheses(Subgroup::whole(c7()), 7));
  CHECK(c.group_count == 7);
  CHECK(c.normalizer_count == 7);
  CHECK(mckay_count(check_hypotheses(Subgroup::whole(f21()), 7)).equal());
}

TEST_CASE("verify_main") {
  for (auto [g, p, pairs] : {std::tuple{s4(), 2U, 4U}, {f21(), 3U, 3U}, {d8(), 2U, 4U}, {s3(), 2U, 2U}}) {
    const auto inst = check_hypotheses(Subgroup::whole(g), p);
    const auto r = verify_main(inst);
    CHECK(r.verdict);
    CHECK(r.records.size() == pairs);
    CHECK(r.star_bijective);
    CHECK(r.descent_bijective);
    for (const auto& rec : r.records) {
      CHECK(rec.coincide);
      CHECK(rec.failure.empty());
    }
    // parallel run reduces to the same records
    const auto r4 = verify_main(check_hypotheses(Subgroup::whole(g), p), 4);
    REQUIRE(r4.records.size() == r.records.size());
    for (std::size_t i = 0; i < r.records.size(); ++i) {
      CHECK(r4.records[i].chi == r.records[i].chi);
      CHECK(r4.records[i].star == r.records[i].star);
      CHECK(r4.records[i].descent == r.records[i].descent);
    }
  }
  CHECK_THROWS_AS(verify_main(check_hypotheses(Subgroup::whole(f21()), 7)), HypothesisError);
}

TEST_CASE("sylow choice independence") {
  const auto g = Subgroup::whole(s4());
  const auto base = check_hypotheses(g, 2);
  const auto r = verify_main(base);
  for (Elem x : g.elements()) {
    const auto q = conjugate(base.sylow, x);
    if (q == base.sylow) continue;
    const auto other = check_hypotheses(g, 2, q, base.cache);
    const auto r2 = verify_main(other);
    CHECK(r2.verdict == r.verdict);
    // star maps correspond under conjugation
    for (std::size_t i = 0; i < r.records.size(); ++i) {
      const auto& lam = base.sylow_table()[*r.records[i].star];
      const auto& mu = other.sylow_table()[*r2.records[i].star];
      for (std::size_t k = 0; k < lam.size(); ++k) {
        const Elem y = g.parent().conj(base.sylow_table().classes->rep(k), x);
        CHECK(mu[other.sylow_table().classes->class_of(y)] == lam[k]);
      }
    }
  }
}

TEST_CASE("lemma checks on small groups") {
  for (auto [g, p] : {std::pair{s4(), 2U}, {f21(), 3U}, {s3(), 2U}, {d8(), 2U}}) {
    const auto inst = check_hypotheses(Subgroup::whole(g), p);
    const auto& G = inst.group;
    CheckTally t;
    for (const auto& n : normal_subgroups(G)) {
      t.merge(check_invariant_constituents(inst, n));
      for (const auto& h : {inst.sylow, inst.normalizer})
        if (product_subgroup(n, h) == G) t.merge(check_restriction_bijection(G, n, h, *inst.cache));
      for (const auto& h : find_complements(G, n)) t.merge(check_complement_normalizer(G, n, h));
    }
    t.merge(check_frattini_identity(G, inst.sylow));
    t.merge(check_galois_equivariance(inst));
    CHECK(t.cases > 0);
    CHECK(t.ok());
  }
  // complements of A4: the six transposition subgroups; of V4: the four point stabilizers
  const auto G = Subgroup::whole(s4());
  const auto a4 = derived_subgroup(G);
  CHECK(find_complements(G, a4).size() == 6);
  CHECK(find_complements(G, derived_subgroup(a4)).size() == 4);
}
