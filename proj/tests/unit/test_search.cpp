#include <doctest.h>

#include "svred/errors.hpp"
#include "svred/families.hpp"
#include "svred/search.hpp"

using namespace svred;

namespace {

SearchBudget budget_for(std::size_t r_target, unsigned workers = 1) {
  SearchBudget b;
  b.r_target = r_target;
  b.workers = workers;
  return b;
}

std::vector<std::vector<std::string>> printed(const Partition& p) {
  std::vector<std::vector<std::string>> out;
  for (const auto& part : p.parts()) {
    out.emplace_back();
    for (const auto& g : part) out.back().push_back(g.to_string(p.ring()->variables()));
  }
  return out;
}

}  // namespace

TEST_SUITE("partition-search") {
  TEST_CASE("rediscovers the dual_ci(2,2) layering") {
    auto d = dual_ci({2, 2});
    auto res = search_sv_partition(d.ideal, budget_for(2));
    REQUIRE(res.partition);
    CHECK(res.partition->levels() == 3);
    CHECK(check_sv(*res.partition).passed);
  }

  TEST_CASE("4-cycle") {
    auto c = even_cycle(2);
    auto res = search_sv_partition(c.ideal, budget_for(2));
    REQUIRE(res.partition);
    CHECK(res.partition->levels() == 3);
    CHECK(check_sv(*res.partition).passed);
    CHECK(printed(*res.partition) ==
          std::vector<std::vector<std::string>>{{"x1*x2"}, {"x2*x3", "x1*x4"}, {"x3*x4"}});
  }

  TEST_CASE("K5 has no partition with 4 parts") {
    auto k = complete_graph_k5();
    auto res = search_sv_partition(k.ideal, budget_for(3));
    CHECK_FALSE(res.partition);
    CHECK(res.exhaustive);
    CHECK(res.ell_estimate == 5u);
    CHECK(res.reason.find("analytic spread estimate 5") != std::string::npos);
  }

  TEST_CASE("rediscovery on dual_ci families") {
    for (const std::vector<unsigned>& h : {std::vector<unsigned>{1}, {3}, {2, 2}, {3, 2}, {2, 2, 2}, {3, 3}, {4, 2},
                                           {5, 2}, {2, 1, 2}}) {
      auto d = dual_ci(h);
      REQUIRE(d.ideal.size() <= 10);
      const std::size_t target = d.partition.r();
      auto res = search_sv_partition(d.ideal, budget_for(target));
      CAPTURE(d.params);
      REQUIRE(res.partition);
      CHECK(res.partition->r() <= target);
      CHECK(check_sv(*res.partition).passed);
    }
  }

  TEST_CASE("monotone in r_target") {
    for (const auto& ideal : {dual_ci({2, 2}).ideal, even_cycle(2).ideal, dual_ci({3, 2}).ideal}) {
      bool found = false;
      for (std::size_t k = 0; k < ideal.size(); ++k) {
        bool now = search_sv_partition(ideal, budget_for(k)).partition.has_value();
        if (found) CHECK(now);
        found = found || now;
      }
      CHECK(found);
    }
  }

  TEST_CASE("deterministic across worker counts") {
    for (const auto& ideal : {dual_ci({3, 2}).ideal, even_cycle(3).ideal, complete_graph_k5().ideal}) {
      auto one = search_sv_partition(ideal, budget_for(4, 1));
      for (unsigned w : {2u, 4u}) {
        auto many = search_sv_partition(ideal, budget_for(4, w));
        CHECK(one.partition.has_value() == many.partition.has_value());
        if (one.partition) CHECK(printed(*one.partition) == printed(*many.partition));
        CHECK(one.nodes == many.nodes);
        CHECK(one.reason == many.reason);
      }
    }
  }

  TEST_CASE("budget exhaustion is an absent result") {
    SearchBudget tiny = budget_for(3);
    tiny.node_limit = 1;
    auto res = search_sv_partition(complete_graph_k5().ideal, tiny);
    CHECK_FALSE(res.partition);
    CHECK_FALSE(res.exhaustive);
    CHECK(res.node_limit_hit);
  }

  TEST_CASE("preconditions") {
    auto h = hypersurface_example(2);
    CHECK_THROWS_AS(search_sv_partition(h.ideal, budget_for(1)), UnsupportedError);
    SearchBudget zero;
    zero.node_limit = 0;
    CHECK_THROWS_AS(search_sv_partition(dual_ci({2, 2}).ideal, zero), PreconditionError);
  }

  TEST_CASE("certify_equalities") {
    auto d = certify_equalities(dual_ci({2, 2}).ideal);
    REQUIRE(d.report);
    CHECK(d.report->ell_certified == 3u);
    CHECK(d.report->ara_lower == 3);
    CHECK(d.report->ara_upper == 3);
    CHECK(d.report->pd == 3);

    auto c = certify_equalities(even_cycle(2).ideal);
    REQUIRE(c.report);
    CHECK(c.report->ell_certified == 3u);
    CHECK(c.report->ara_upper == 3);

    auto k = certify_equalities(complete_graph_k5().ideal);
    CHECK(k.pd == 4);
    CHECK_FALSE(k.report);
  }
}
