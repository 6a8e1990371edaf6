#include <doctest.h>

#include <random>

#include "svred/errors.hpp"
#include "svred/families.hpp"
#include "svred/groebner.hpp"
#include "support/oracles.hpp"

using namespace svred;

namespace {

Polynomial var(const RingPtr& r, std::size_t i) { return Polynomial::variable(r->nvars(), i); }
std::string show(const Polynomial& p, const RingPtr& r) { return p.to_string(r->variables()); }

}  // namespace

TEST_SUITE("groebner-oracle") {
  TEST_CASE("buchberger small cases") {
    auto r = RingContext::make({"x", "y", "z"});
    auto x = var(r, 0), y = var(r, 1), z = var(r, 2);
    std::vector<Polynomial> xy{x, y};
    auto gb = buchberger(r, xy);
    REQUIRE(gb.elements().size() == 2);
    CHECK(gb.elements()[0] == y);
    CHECK(gb.elements()[1] == x);

    std::vector<Polynomial> sum{x + y};
    auto lex = buchberger(r, sum, TermOrder::lex(3));
    REQUIRE(lex.elements().size() == 1);
    CHECK(lex.elements()[0] == x + y);
    CHECK(show(lex.normal_form(x * y), r) == "-y^2");
    CHECK_FALSE(lex.contains(x * y));

    const Polynomial rel = x * x * y * y - z.pow(4);
    std::vector<Polynomial> one{rel};
    auto single = buchberger(r, one);
    REQUIRE(single.elements().size() == 1);
    CHECK(single.elements()[0] == rel);
  }

  TEST_CASE("normal forms") {
    auto r = RingContext::make({"x", "y", "z"});
    auto x = var(r, 0), y = var(r, 1), z = var(r, 2);
    std::vector<Polynomial> gx{x};
    CHECK(normal_form(x * y, buchberger(r, gx)).is_zero());
    // The direction of the rewrite depends on which side leads: with z
    // largest under lex, z^4 reduces to x^2 y^2; under degrevlex on
    // (x, y, z) the lead is x^2 y^2, which reduces to z^4.
    std::vector<Polynomial> rel{x * x * y * y - z.pow(4)};
    auto z_first = buchberger(r, rel, TermOrder::make(TermOrder::Kind::lex, {2, 0, 1}));
    CHECK(show(z_first.normal_form(z.pow(4)), r) == "x^2*y^2");
    auto drl = buchberger(r, rel);
    CHECK(show(drl.normal_form(x * x * y * y), r) == "z^4");
    CHECK(drl.normal_form(z.pow(4)) == z.pow(4));
    std::vector<Polynomial> both{x, y};
    CHECK(normal_form(Polynomial::constant(3, 1), buchberger(r, both)) == Polynomial::constant(3, 1));
  }

  TEST_CASE("term order validation") {
    CHECK_THROWS_AS(TermOrder::make(TermOrder::Kind::lex, {0, 0, 1}), StructuralError);
  }

  TEST_CASE("ideal_contains") {
    auto r = RingContext::make({"x", "y"});
    auto x = var(r, 0), y = var(r, 1);
    CHECK(ideal_contains(Ideal(r, {x}), Ideal(r, {x * x, x * y})).contained);
    auto fail = ideal_contains(Ideal(r, {x * x}), Ideal(r, {x}));
    CHECK_FALSE(fail.contained);
    REQUIRE(fail.witness);
    CHECK(*fail.witness == x);

    auto k5 = complete_graph_k5();
    const auto& g = k5.generators;
    Ideal i2 = level_ideal(k5.partition, 2);
    Ideal target = ideal_product(Ideal(k5.ring(), {g[0], g[1], g[2]}), ideal_power(k5.ideal, 2));
    CHECK(ideal_contains(target, ideal_power(i2, 3)).contained);
  }

  TEST_CASE("is_reduction") {
    auto r = RingContext::make({"x"});
    Ideal xi(r, {var(r, 0)});
    CHECK(is_reduction(xi, xi, 8) == 0u);

    auto d = dual_ci({2, 2});
    Ideal j(d.ring(), sv_generators(d.partition));
    CHECK(is_reduction(j, d.ideal, 1) == 1u);
    CHECK(oracle::reduction_at(j, d.ideal, 1));
    CHECK_FALSE(oracle::reduction_at(j, d.ideal, 0));

    auto h = hypersurface_example(2);
    Ideal jh(h.ring(), sv_generators(h.partition));
    auto s = is_reduction(jh, h.ideal, 3);
    REQUIRE(s);
    CHECK(*s <= 3);
    CHECK(oracle::reduction_at(jh, h.ideal, *s));
    if (*s > 0) CHECK_FALSE(oracle::reduction_at(jh, h.ideal, *s - 1));

    auto rr = RingContext::make({"x", "y"});
    try {
      is_reduction(Ideal(rr, {var(rr, 1)}), Ideal(rr, {var(rr, 0)}), 2);
      FAIL("expected a precondition error");
    } catch (const PreconditionError& e) {
      CHECK(e.witness() == "y");
    }
  }

  TEST_CASE("radical membership") {
    auto r = RingContext::make({"x", "y"});
    auto x = var(r, 0), y = var(r, 1);
    CHECK(radical_membership(x, Ideal(r, {x * x})));
    CHECK_FALSE(radical_membership(y, Ideal(r, {x})));

    auto h = hypersurface_example(2);
    Ideal j(h.ring(), sv_generators(h.partition));
    for (const auto& g : h.ideal.generators()) CHECK(radical_membership(g, j));
  }

  TEST_CASE("normal form membership agrees with divisibility on monomial ideals") {
    std::mt19937 rng(21);
    auto r = RingContext::make({"a", "b", "c", "d"});
    std::uniform_int_distribution<unsigned> e(0, 3);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Monomial> gens;
      for (int k = 0; k < 4; ++k) {
        std::vector<Exponent> v(4);
        for (auto& x : v) x = e(rng);
        if (Monomial(v).is_one()) v[0] = 1;
        gens.emplace_back(v);
      }
      Ideal ideal = Ideal::from_monomials(r, gens);
      auto gb = buchberger(r, ideal.generators());
      for (int q = 0; q < 25; ++q) {
        std::vector<Exponent> v(4);
        for (auto& x : v) x = e(rng) + e(rng);
        Monomial m(v);
        CHECK(gb.contains(Polynomial::from_monomial(m)) == monomial_member(m, gens));
      }
    }
  }

  TEST_CASE("containment agrees with the Macaulay matrix oracle") {
    std::mt19937 rng(8);
    auto r = RingContext::make({"a", "b", "c"});
    std::uniform_int_distribution<int> coeff(-3, 3);
    auto quadrics = oracle::monomials_of_degree(3, 2);
    auto cubics = oracle::monomials_of_degree(3, 3);
    auto random_form = [&](const std::vector<Monomial>& basis) {
      std::vector<Term> ts;
      for (const auto& m : basis)
        if (int c = coeff(rng); c != 0 && rng() % 2) ts.push_back({m, Rational(c)});
      return Polynomial::from_terms(3, ts);
    };
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Polynomial> gens{random_form(quadrics), random_form(quadrics)};
      auto gb = buchberger(r, gens);
      for (int q = 0; q < 8; ++q) {
        Polynomial f = random_form(cubics);
        if (q % 2 == 0) f = gens[0] * Polynomial::variable(3, q % 3) + Rational(2) * gens[1] * Polynomial::variable(3, 1);
        CHECK(gb.contains(f) == oracle::macaulay_contains(gens, f));
      }
    }
  }

  TEST_CASE("reduction implies equal radicals") {
    for (const auto& bundle : {dual_ci({2, 2}), even_cycle(2), binomial_example()}) {
      Certificate cert = bundle.certificate();
      Ideal j(bundle.ring(), cert.generators);
      REQUIRE(is_reduction(j, bundle.ideal, 8));
      for (const auto& g : bundle.ideal.generators()) CHECK(radical_membership(g, j));
    }
  }

  TEST_CASE("bases are deterministic") {
    auto b = binomial_example();
    auto first = buchberger(b.ring(), b.ideal.generators());
    auto second = buchberger(b.ring(), b.ideal.generators());
    CHECK(first.elements() == second.elements());
    CHECK(satisfies_buchberger_criterion(first));
  }
}
