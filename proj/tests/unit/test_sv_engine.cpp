#include <doctest.h>

#include "svred/errors.hpp"
#include "svred/families.hpp"
#include "svred/groebner.hpp"
#include "support/oracles.hpp"

using namespace svred;

namespace {

std::string show(const Polynomial& p, const RingPtr& r) { return p.to_string(r->variables()); }

std::vector<std::string> shown(const std::vector<Polynomial>& ps, const RingPtr& r) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(show(p, r));
  return out;
}

Partition singletons(const Ideal& ideal) {
  std::vector<std::vector<Polynomial>> parts;
  for (const auto& g : ideal.generators()) parts.push_back({g});
  return Partition(ideal, parts);
}

// Every stored witness is an exact identity with a lower target level.
void check_witness_identities(const Partition& p, const WitnessTable& table) {
  for (const auto& w : table) {
    if (w.via_oracle) continue;
    REQUIRE(w.target_level);
    CHECK(*w.target_level < w.level);
    Polynomial lhs = Polynomial::constant(p.ring()->nvars(), 1);
    for (std::size_t i : w.elements) lhs = lhs * p.part(w.level)[i];
    lhs = lhs.pow(w.exponent);
    CHECK(lhs == p.part(*w.target_level)[*w.target_index] * *w.cofactor);
  }
}

}  // namespace

TEST_SUITE("sv-engine") {
  TEST_CASE("partition invariants") {
    auto d = dual_ci({2, 2});
    const auto& g = d.ideal.generators();
    CHECK_THROWS_AS(Partition(d.ideal, {{g[0], g[1]}, {g[2], g[3]}}), ValidationError);
    CHECK_THROWS_AS(Partition(d.ideal, {{g[0]}, {g[1], g[2]}}), ValidationError);
    CHECK_THROWS_AS(Partition(d.ideal, {{g[0]}, {}, {g[1], g[2], g[3]}}), ValidationError);
    CHECK(d.partition.sizes() == std::vector<std::size_t>{1, 2, 1});
  }

  TEST_CASE("check_sv") {
    auto d = dual_ci({2, 2});
    auto res = check_sv(d.partition);
    REQUIRE(res.passed);
    REQUIRE(res.witnesses.size() == 1);
    const auto& w = res.witnesses[0];
    CHECK(w.level == 1);
    CHECK(*w.target_level == 0);
    CHECK(show(d.partition.part(0)[*w.target_index], d.ring()) == "x11*x21");
    CHECK(show(*w.cofactor, d.ring()) == "x12*x22");
    check_witness_identities(d.partition, res.witnesses);

    auto h = hypersurface_example(2);
    auto fail = check_sv(h.partition);
    CHECK_FALSE(fail.passed);
    REQUIRE(fail.failure);
    CHECK(fail.failure->level == 1);
    CHECK(fail.failure->elements == std::vector<std::size_t>{0, 1});

    auto all = singletons(complete_graph_k5().ideal);
    auto vacuous = check_sv(all);
    CHECK(vacuous.passed);
    CHECK(vacuous.witnesses.empty());
  }

  TEST_CASE("check_sv replays supplied witnesses") {
    auto d = dual_ci({2, 2});
    auto table = check_sv(d.partition).witnesses;
    CHECK(check_sv(d.partition, &table).passed);
    auto bad = table;
    bad[0].cofactor = *bad[0].cofactor * Polynomial::variable(4, 0);
    CHECK_THROWS_AS(check_sv(d.partition, &bad), ValidationError);
  }

  TEST_CASE("check_b") {
    auto h = hypersurface_example(2);
    auto res = check_b(h.partition, 4);
    REQUIRE(res.passed);
    CHECK(res.m_table == std::vector<unsigned>{1, 2});

    auto b = binomial_example();
    CHECK_FALSE(check_sv(b.partition).passed);
    auto rb = check_b(b.partition, 4);
    REQUIRE(rb.passed);
    bool oracle_used = false;
    for (const auto& w : rb.witnesses)
      if (w.level == 5) oracle_used = w.via_oracle;
    CHECK(oracle_used);

    CHECK_FALSE(check_b(hypersurface_example(3).partition, 2).passed);
  }

  TEST_CASE("SV pass implies B pass with m = 1") {
    for (const auto& bundle : {dual_ci({2, 2}), dual_ci({3, 2}), dual_ci({2, 2, 2}), dual_ci_sum({{2, 2}, {2, 2}}),
                               even_cycle(2)}) {
      if (!check_sv(bundle.partition).passed) continue;
      auto res = check_b(bundle.partition, 4);
      CHECK(res.passed);
      for (unsigned m : res.m_table) CHECK(m == 1);
    }
  }

  TEST_CASE("check_ba") {
    auto c2 = even_cycle(2);
    auto res = check_ba(c2.partition, *c2.ba);
    REQUIRE(res.passed);
    check_witness_identities(c2.partition, res.witnesses);
    bool seen = false;
    for (const auto& w : res.witnesses)
      if (w.level == 2) {
        seen = true;
        CHECK(show(c2.partition.part(*w.target_level)[*w.target_index], c2.ring()) == "x1*x2");
        CHECK(show(*w.cofactor, c2.ring()) == "x3*x4");
      }
    CHECK(seen);

    auto c3 = even_cycle(3);
    auto r3 = check_ba(c3.partition, *c3.ba);
    REQUIRE(r3.passed);
    for (const auto& w : r3.witnesses)
      if (w.level == 3) {
        CHECK(w.elements.size() == 3);
        CHECK(member_of_power(*w.cofactor, c3.ideal, 2));
      }

    auto d = dual_ci({2, 2});
    CHECK(check_ba(d.partition, default_ba_data(d.partition)).passed);
  }

  TEST_CASE("generators") {
    auto d = dual_ci({2, 2});
    CHECK(shown(sv_generators(d.partition), d.ring()) ==
          std::vector<std::string>{"x11*x21", "x12*x21 + x11*x22", "x12*x22"});
    auto all = singletons(d.ideal);
    CHECK(sv_generators(all) == d.ideal.generators());
    auto b = binomial_example();
    auto gb = shown(sv_generators(b.partition), b.ring());
    REQUIRE(gb.size() == 6);
    CHECK(gb.back() == "x1*x2 + x1*x3 + x4*x5");

    auto c = even_cycle(3);
    CHECK(shown(ba_generators(c.partition, *c.ba), c.ring()) ==
          std::vector<std::string>{"x1*x2", "x3*x4", "x5*x6", "x2*x3 + x1*x6", "x4*x5 + x1*x6"});
  }

  TEST_CASE("Ba data validation") {
    auto c = even_cycle(2);
    BaData bad = *c.ba;
    bad.matrices[2] = {{Rational(1), Rational(0)}};
    try {
      validate_ba_data(c.partition, bad);
      FAIL("expected a validation error");
    } catch (const ValidationError& e) {
      const std::string msg = e.what();
      CHECK(msg.find("level 2") != std::string::npos);
      CHECK(msg.find("{2}") != std::string::npos);
    }
    CHECK_THROWS_AS(ba_generators(c.partition, bad), ValidationError);
    BaData shape = *c.ba;
    shape.n[2] = 3;
    CHECK_THROWS_AS(validate_ba_data(c.partition, shape), ValidationError);
  }

  TEST_CASE("certified exponent") {
    auto d = dual_ci({2, 2});
    CHECK(certified_exponent(build_certificate(CertificateKind::sv, singletons(d.ideal))) == 1);
    auto cd = build_certificate(CertificateKind::sv, d.partition);
    CHECK(certified_exponent(cd) == 2);
    CHECK(oracle::reduction_at(Ideal(d.ring(), cd.generators), d.ideal, 1));
    auto h = hypersurface_example(2);
    auto ch = h.certificate();
    CHECK(certified_exponent(ch) == 4);
    CHECK(oracle::reduction_at(Ideal(h.ring(), ch.generators), h.ideal, 3));
    auto c = even_cycle(2).certificate();
    CHECK(certified_exponent(c) == 2 * 2 * 2);
    CHECK_THROWS_AS(certified_exponent(complete_graph_k5(2, 3, 4, 5).certificate()), UnsupportedError);
    CHECK_THROWS_AS(build_certificate(CertificateKind::sv, h.partition), ValidationError);
  }

  TEST_CASE("verify_certificate") {
    auto d = dual_ci({2, 2});
    auto rep = verify_certificate(d.certificate());
    CHECK(rep.passed);
    CHECK(rep.oracle_least_s == 1u);
    CHECK(rep.s_max == 1);

    auto k5 = complete_graph_k5(2, 3, 4, 5);
    auto rk = verify_certificate(k5.certificate());
    CHECK(rk.passed);
    CHECK(rk.extra_check_results == std::vector<bool>{true});
    CHECK(rk.s_max == kDefaultSMax);

    auto tampered = d.certificate();
    tampered.witnesses.pop_back();
    auto rt = verify_certificate(tampered);
    CHECK_FALSE(rt.passed);
    REQUIRE(rt.failed_stage());
    CHECK(rt.failed_stage()->stage == "replay");

    auto wrong_n = d.certificate();
    wrong_n.certified_n = 7;
    CHECK(verify_certificate(wrong_n).failed_stage()->stage == "exponent");

    auto wrong_gens = d.certificate();
    wrong_gens.generators.pop_back();
    CHECK(verify_certificate(wrong_gens).failed_stage()->stage == "generators");
  }

  TEST_CASE("scaling a part preserves the outcome") {
    for (const auto& bundle : {dual_ci({2, 2}), hypersurface_example(2), even_cycle(2), binomial_example()}) {
      for (std::size_t level = 0; level < bundle.partition.levels(); ++level) {
        auto parts = bundle.partition.parts();
        std::vector<Polynomial> gens;
        for (std::size_t l = 0; l < parts.size(); ++l)
          for (auto& p : parts[l]) {
            if (l == level) p = Rational(-3, 2) * p;
            gens.push_back(p);
          }
        Partition scaled(Ideal(bundle.ring(), gens), parts);
        CHECK(check_sv(scaled).passed == check_sv(bundle.partition).passed);
        CHECK(check_b(scaled, bundle.m_max).passed == check_b(bundle.partition, bundle.m_max).passed);
        if (bundle.ba) CHECK(check_ba(scaled, *bundle.ba).passed == check_ba(bundle.partition, *bundle.ba).passed);
        auto sv = check_sv(scaled);
        if (sv.passed) check_witness_identities(scaled, sv.witnesses);
      }
    }
  }

  TEST_CASE("certificate kind names") {
    CHECK(std::string(to_string(CertificateKind::oracle_only)) == "oracle-only");
    CHECK(certificate_kind_from_string("Ba") == CertificateKind::ba);
    CHECK_THROWS(certificate_kind_from_string("X"));
  }
}
