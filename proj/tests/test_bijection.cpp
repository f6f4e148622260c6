#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "actbij/bijection.hpp"
#include "actbij/tutte.hpp"
#include "support/fixtures.hpp"
#include "support/printers.hpp"

using namespace actbij;
using fixtures::set;

namespace {

SignedSet sg(std::initializer_list<int> pos, std::initializer_list<int> neg) {
  return {ElementSet::of(pos), ElementSet::of(neg)};
}

std::vector<OrientedMatroid> family(int count, int max_edges, unsigned seed) {
  std::vector<OrientedMatroid> out{fixtures::k3(), fixtures::k4(), fixtures::flats_example(), fixtures::isthmus(),
                                   fixtures::loop()};
  std::mt19937 rng(seed);
  for (int i = 0; i < count; ++i) out.push_back(om_from_digraph(fixtures::random_multigraph(rng, 1, max_edges, 6)));
  return out;
}

std::vector<ElementSet> all_subsets(ElementSet ground) {
  std::vector<ElementSet> out;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << ground.size()); ++s) out.push_back(ground.pick(s));
  return out;
}

}  // namespace

// The grey region of the worked K4 example: its signed fundamental tableau
// for 136 has these rows, which pins it to the reorientation {3,5,6}.
TEST_CASE("fully optimal basis of the worked K4 region") {
  auto m = reorient(fixtures::k4(), set({3, 5, 6}));
  const auto b = set({1, 3, 6});
  CHECK(fundamental_cocircuit(m, b, 1) == sg({1, 2, 4}, {}));
  CHECK(fundamental_cocircuit(m, b, 3) == sg({3, 5}, {2, 4}));
  CHECK(fundamental_cocircuit(m, b, 6) == sg({5, 6}, {4}));
  CHECK(fundamental_circuit(m, b, 2) == sg({2, 3}, {1}));
  CHECK(fundamental_circuit(m, b, 4) == sg({3, 4, 6}, {1}));
  CHECK(fundamental_circuit(m, b, 5) == sg({5}, {3, 6}));

  CHECK(is_bounded(m, 1));
  CHECK(satisfies_sign_criterion(m, b));
  CHECK(satisfies_composition_criterion(m, b));
  CHECK(is_fully_optimal(m, b));
  CHECK(fully_optimal_basis(m) == b);
  CHECK(fully_optimal_basis(reorient(fixtures::k4(), set({1, 2, 4}))) == b);  // opposite

  auto other = reorient(fixtures::k4(), set({3, 5}));
  CHECK(is_bounded(other, 1));
  CHECK_FALSE(is_fully_optimal(other, b));
  CHECK(fully_optimal_basis(other) == set({1, 3, 5}));
  int passing = 0;
  for (ElementSet x : bases(other)) passing += is_fully_optimal(other, x);
  CHECK(passing == 1);
}

TEST_CASE("fully optimal basis on the triangle") {
  auto m = reorient(fixtures::k3(), set({3}));
  CHECK(is_bounded(m, 1));
  CHECK(is_fully_optimal(m, set({1, 3})));
  CHECK_FALSE(is_fully_optimal(m, set({1, 2})));
  // the composition conditions alone also accept 12, which is not uniactive
  CHECK(composition_conditions_hold(m, set({1, 2})));
  CHECK_FALSE(satisfies_composition_criterion(m, set({1, 2})));
  CHECK_THROWS_AS(is_fully_optimal(fixtures::k4(), set({1, 2, 4})), std::invalid_argument);
}

TEST_CASE("uniqueness of the fully optimal basis and agreement of the criteria") {
  for (const auto& m : family(60, 8, 41)) {
    if (m.size() == 0) continue;
    const Element p = m.ground().min();
    for (ElementSet a : all_subsets(m.ground())) {
      auto ma = reorient(m, a);
      const bool bounded = is_bounded(ma, p), dual_bounded = is_dual_bounded(ma, p);
      if (!bounded && !dual_bounded) continue;
      int by_sign = 0, by_composition = 0;
      for (ElementSet b : bases(ma)) {
        const bool s = satisfies_sign_criterion(ma, b);
        CHECK(s == satisfies_composition_criterion(ma, b));
        by_sign += s;
        by_composition += satisfies_composition_criterion(ma, b);
      }
      CHECK(by_sign == 1);
      CHECK(by_composition == 1);
      auto b = fully_optimal_basis(ma);
      auto act = basis_activities(ma, b);
      if (bounded) {
        CHECK(act.internal == set({p}));
        CHECK(act.external.empty());
      } else {
        CHECK(act.internal.empty());
        CHECK(act.external == set({p}));
      }
    }
  }
}

TEST_CASE("active basis examples") {
  auto k4 = fixtures::k4();
  CHECK(active_basis(k4) == set({1, 2, 4}));
  CHECK(active_basis(reorient(k4, set({2, 3, 4, 5}))) == set({1, 2, 6}));
  CHECK(active_basis(reorient(k4, set({3, 4, 5}))) == set({1, 4, 6}));
  CHECK(active_basis(om_from_lists(0, {}, {})) == ElementSet{});
  CHECK(active_basis(fixtures::loop()) == ElementSet{});
  CHECK(active_basis(fixtures::isthmus()) == set({1}));
}

TEST_CASE("inverse classes") {
  auto k3 = fixtures::k3();
  auto r12 = alpha_inverse_class(k3, set({1, 2}));
  CHECK(r12.class_members == std::vector<ElementSet>{{}, set({1}), set({2, 3}), set({1, 2, 3})});
  CHECK(format_chain(r12.filtration) == "[-]<1<1,2,3");

  auto k4 = fixtures::k4();
  auto r136 = alpha_inverse_class(k4, set({1, 3, 6}));
  std::set<std::uint32_t> got;
  for (ElementSet a : r136.class_members) got.insert(a.mask());
  CHECK(got == std::set<std::uint32_t>{set({3, 5, 6}).mask(), set({1, 2, 4}).mask()});

  auto r124 = alpha_inverse_class(k4, set({1, 2, 4}));
  CHECK(r124.class_members.size() == 8);
  CHECK(std::count(r124.class_members.begin(), r124.class_members.end(), ElementSet{}) == 1);
}

TEST_CASE("canonical bijection: preimages are the activity classes") {
  for (const auto& m : family(40, 10, 42)) {
    std::map<std::uint32_t, std::vector<ElementSet>> preimage;
    for (ElementSet a : all_subsets(m.ground())) preimage[active_basis(reorient(m, a)).mask()].push_back(a);
    auto all = bases(m);
    CHECK(preimage.size() == all.size());
    for (ElementSet b : all) {
      auto act = basis_activities(m, b);
      auto& pre = preimage[b.mask()];
      CHECK(pre.size() == (std::size_t{1} << (act.internal.size() + act.external.size())));
      auto cls = alpha_inverse_class(m, b);
      auto sorted = cls.class_members;
      std::sort(sorted.begin(), sorted.end());
      std::sort(pre.begin(), pre.end());
      CHECK(sorted == pre);
      CHECK(cls.filtration == active_filtration_basis(m, b));
      for (ElementSet a : cls.class_members) CHECK(active_filtration_orientation(reorient(m, a)) == cls.filtration);
    }
  }
}

TEST_CASE("activities are preserved") {
  for (const auto& m : family(40, 9, 43))
    for (ElementSet a : all_subsets(m.ground())) {
      auto ma = reorient(m, a);
      auto b = active_basis(ma);
      auto ba = basis_activities(ma, b);
      auto oa = orientation_activities(ma);
      CHECK(ba.internal == oa.dual_active);
      CHECK(ba.external == oa.active);
    }
}

TEST_CASE("the active basis does not depend on the reference") {
  std::mt19937 rng(44);
  for (const auto& m : family(20, 8, 45)) {
    std::uniform_int_distribution<std::uint32_t> any(0, (std::uint32_t{1} << m.size()) - 1);
    const ElementSet x = m.ground().pick(any(rng));
    auto ref = reorient(m, x);
    for (ElementSet a : all_subsets(m.ground())) CHECK(active_basis(reorient(ref, a)) == active_basis(reorient(m, x ^ a)));
  }
}

TEST_CASE("the active basis restricts along the active filtration") {
  for (const auto& m : family(30, 8, 46))
    for (ElementSet a : all_subsets(m.ground())) {
      auto ma = reorient(m, a);
      const auto chain = active_filtration_orientation(ma).chain();
      const auto whole = active_basis(ma);
      for (std::size_t i = 0; i < chain.size(); ++i)
        for (std::size_t j = i; j < chain.size(); ++j) {
          auto lower = active_basis(minor(ma, chain[i], {}));
          auto middle = active_basis(minor(ma, chain[j], chain[i]));
          auto upper = active_basis(contraction(ma, chain[j]));
          CHECK((lower & middle).empty());
          CHECK((lower | middle | upper) == whole);
        }
    }
}

TEST_CASE("recursive definitions agree") {
  std::mt19937 rng(47);
  for (const auto& m : family(40, 9, 48))
    for (ElementSet a : all_subsets(m.ground())) {
      auto ma = reorient(m, a);
      const auto expected = active_basis(ma);
      for (auto rule : {Induction::kLastDualActive, Induction::kLastActive, Induction::kAnyDualActive,
                        Induction::kAnyActive})
        for (auto dual_case : {DualBoundedCase::kDuality, DualBoundedCase::kCriterion, DualBoundedCase::kActiveDuality}) {
          CHECK(active_basis_recursive(ma, rule, dual_case, &rng) == expected);
          CHECK(active_basis_recursive(ma, rule, dual_case) == expected);
        }
    }
}

TEST_CASE("duality") {
  for (const auto& m : {fixtures::k3(), fixtures::k4()})
    for (ElementSet a : all_subsets(m.ground())) {
      auto ma = reorient(m, a);
      CHECK(active_basis(dual(ma)) == m.ground() - active_basis(ma));
    }

  int bounded = 0;
  auto k4 = fixtures::k4();
  for (ElementSet a : all_subsets(k4.ground())) {
    auto ma = reorient(k4, a);
    if (!is_bounded(ma, 1)) continue;
    ++bounded;
    auto c = check_active_duality(ma);
    CHECK(c.active_duality);
    CHECK(c.plain_duality);
  }
  CHECK(bounded == 4);

  // digon
  auto digon = om_from_lists(2, {{set({1}), set({2})}}, {{set({1, 2}), {}}});
  CHECK(is_bounded(digon, 1));
  CHECK(fully_optimal_basis(digon) == set({1}));
  CHECK(check_active_duality(digon).ok());

  CHECK_THROWS_AS(check_active_duality(k4), std::invalid_argument);
  CHECK_THROWS_AS(check_active_duality(fixtures::isthmus()), std::invalid_argument);
}

TEST_CASE("active duality on random 2-connected graphs") {
  std::mt19937 rng(49);
  int checked = 0;
  for (int i = 0; i < 30; ++i) {
    auto m = om_from_digraph(fixtures::random_connected_matroid_graph(rng, 2, 8, 5));
    for (ElementSet a : all_subsets(m.ground())) {
      auto ma = reorient(m, a);
      if (!is_bounded(ma, m.ground().min())) continue;
      ++checked;
      CHECK(check_active_duality(ma).ok());
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("uniactive exchange of the two smallest elements") {
  std::mt19937 rng(50);
  std::vector<OrientedMatroid> ms{fixtures::k3(), fixtures::k4(), fixtures::flats_example()};
  for (int i = 0; i < 30; ++i) ms.push_back(om_from_digraph(fixtures::random_connected_matroid_graph(rng, 2, 9, 5)));
  for (const auto& m : ms) {
    const Element p = m.ground().min(), p2 = m.ground().without(p).min();
    int internal = 0, external = 0;
    for (ElementSet b : bases(m)) {
      auto act = basis_activities(m, b);
      if (act.internal.size() == 1 && act.external.empty()) {
        ++internal;
        const ElementSet swapped = b.without(p).with(p2);
        REQUIRE(is_basis(m, swapped));
        auto sa = basis_activities(m, swapped);
        CHECK(sa.internal.empty());
        CHECK(sa.external.size() == 1);
      }
      if (act.internal.empty() && act.external.size() == 1) {
        ++external;
        CHECK(is_basis(m, b.without(p2).with(p)));
      }
    }
    CHECK(internal == external);
    CHECK(static_cast<std::uint64_t>(internal) == beta(m));
  }
}

TEST_CASE("refined bijection examples") {
  auto k4 = fixtures::k4();
  CHECK(refined_alpha(k4, {}) == set({1, 2, 4}));
  CHECK(refined_alpha(k4, set({1})) == set({2, 4}));
  CHECK(refined_alpha_inverse(k4, set({2, 4})) == set({1}));
  auto rep = refined_alpha_inverse(k4, active_basis(k4));
  auto act = orientation_activities(reorient(k4, rep));
  CHECK((rep & (act.active | act.dual_active)).empty());
}

TEST_CASE("refined bijection is a bijection carrying the four parameters") {
  for (const auto& m : family(30, 9, 51)) {
    std::set<std::uint32_t> image;
    for (ElementSet a : all_subsets(m.ground())) {
      const ElementSet x = refined_alpha(m, a);
      image.insert(x.mask());
      CHECK(refined_alpha_inverse(m, x) == a);
      auto th = reorientation_params(m, a);
      auto sp = subset_params(m, x);
      CHECK(sp.internal == th.theta_star);
      CHECK(sp.p == th.theta_star_bar);
      CHECK(sp.external == th.theta);
      CHECK(sp.q == th.theta_bar);
      // the class of a lands in the interval of its basis
      CHECK(sp.basis == active_basis(reorient(m, a)));
      CHECK(interval_of_basis(m, sp.basis).contains(x));
    }
    CHECK(image.size() == (std::size_t{1} << m.size()));
  }
}

TEST_CASE("activity report") {
  auto k4 = fixtures::k4();
  auto r = activity_report(k4, set({1}));
  CHECK(r.dual_active == set({1, 2, 4}));
  CHECK(r.active.empty());
  CHECK(r.theta_star == set({2, 4}));
  CHECK(r.theta_star_bar == set({1}));
  CHECK(r.image == set({2, 4}));
  CHECK(r.internal == set({2, 4}));
  CHECK(r.p == set({1}));
}
