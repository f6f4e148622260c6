#include "actbij/oriented_matroid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace actbij {

namespace {

void normalize(std::vector<SignedSet>& list) {
  for (auto& s : list) s = s.canonical();
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
}

int greedy_rank(ElementSet ground, const std::vector<SignedSet>& dependent, ElementSet within) {
  ElementSet cur;
  for (Element e : within & ground) {
    ElementSet next = cur.with(e);
    bool ok = std::none_of(dependent.begin(), dependent.end(),
                           [&](const SignedSet& c) { return c.support().subset_of(next); });
    if (ok) cur = next;
  }
  return cur.size();
}

// Inclusion-minimal nonempty supports among the candidates, canonicalized.
std::vector<SignedSet> minimal_nonempty(std::vector<SignedSet> cand) {
  cand.erase(std::remove_if(cand.begin(), cand.end(), [](const SignedSet& s) { return s.is_zero(); }),
             cand.end());
  normalize(cand);
  std::vector<SignedSet> out;
  for (const auto& c : cand) {
    bool minimal = std::none_of(cand.begin(), cand.end(), [&](const SignedSet& d) {
      return d.support() != c.support() && d.support().subset_of(c.support());
    });
    if (minimal) out.push_back(c);
  }
  return out;
}

std::string show(const SignedSet& s) {
  std::string out = "{";
  for (Element e : s.support()) {
    if (out.size() > 1) out += ',';
    out += (s.sign(e) > 0 ? '+' : '-') + std::to_string(e);
  }
  return out + "}";
}

void check_list(ElementSet ground, const std::vector<SignedSet>& list, const char* what) {
  for (size_t i = 0; i < list.size(); ++i) {
    const auto& s = list[i];
    if (s.is_zero()) throw InvalidMatroid(std::string(what) + " with empty support");
    if (s.positive.intersects(s.negative)) throw InvalidMatroid(std::string(what) + " with a doubly signed element");
    if (!s.support().subset_of(ground))
      throw InvalidMatroid(std::string(what) + " " + show(s) + " leaves the ground set");
    for (size_t j = 0; j < list.size(); ++j)
      if (i != j && list[j].support().subset_of(s.support()))
        throw InvalidMatroid(std::string(what) + " supports " + show(list[j]) + " and " + show(s) +
                             " are comparable");
  }
}

}  // namespace

OrientedMatroid OrientedMatroid::assemble(ElementSet ground, std::vector<SignedSet> circuits,
                                          std::vector<SignedSet> cocircuits) {
  OrientedMatroid m;
  m.ground_ = ground;
  normalize(circuits);
  normalize(cocircuits);
  m.circuits_ = std::move(circuits);
  m.cocircuits_ = std::move(cocircuits);
  m.rank_ = greedy_rank(ground, m.circuits_, ground);
  return m;
}

void validate(const OrientedMatroid& m) {
  check_list(m.ground(), m.circuits(), "circuit");
  check_list(m.ground(), m.cocircuits(), "cocircuit");
  for (const auto& c : m.circuits())
    for (const auto& d : m.cocircuits()) {
      ElementSet agree = (c.positive & d.positive) | (c.negative & d.negative);
      ElementSet disagree = (c.positive & d.negative) | (c.negative & d.positive);
      if (agree.empty() != disagree.empty())
        throw InvalidMatroid("circuit " + show(c) + " and cocircuit " + show(d) + " are not orthogonal");
    }
  int corank = greedy_rank(m.ground(), m.cocircuits(), m.ground());
  if (m.rank() + corank != m.size())
    throw InvalidMatroid("rank " + std::to_string(m.rank()) + " from circuits and rank " + std::to_string(corank) +
                         " from cocircuits do not add up to " + std::to_string(m.size()));
}

OrientedMatroid om_from_lists(ElementSet ground, std::vector<SignedSet> circuits, std::vector<SignedSet> cocircuits) {
  if (ground.max() > kMaxElements) throw InvalidMatroid("too many elements");
  for (const auto* list : {&circuits, &cocircuits})
    for (const auto& s : *list)
      if (s.is_zero()) throw InvalidMatroid("signed set with empty support");
  auto m = OrientedMatroid::assemble(ground, std::move(circuits), std::move(cocircuits));
  validate(m);
  return m;
}

OrientedMatroid om_from_lists(int n, std::vector<SignedSet> circuits, std::vector<SignedSet> cocircuits) {
  if (n < 0 || n > kMaxElements) throw InvalidMatroid("ground set size out of range: " + std::to_string(n));
  return om_from_lists(ElementSet::first(n), std::move(circuits), std::move(cocircuits));
}

OrientedMatroid dual(const OrientedMatroid& m) {
  return OrientedMatroid::assemble(m.ground(), m.cocircuits(), m.circuits());
}

OrientedMatroid reorient(const OrientedMatroid& m, ElementSet a) {
  auto flip = [a](std::vector<SignedSet> list) {
    for (auto& s : list) s = s.reoriented(a);
    return list;
  };
  return OrientedMatroid::assemble(m.ground(), flip(m.circuits()), flip(m.cocircuits()));
}

OrientedMatroid deletion(const OrientedMatroid& m, ElementSet a) {
  ElementSet keep = m.ground() - a;
  std::vector<SignedSet> circuits, restricted;
  for (const auto& c : m.circuits())
    if (c.support().subset_of(keep)) circuits.push_back(c);
  for (const auto& d : m.cocircuits()) restricted.push_back(d.restricted(keep));
  return OrientedMatroid::assemble(keep, std::move(circuits), minimal_nonempty(std::move(restricted)));
}

OrientedMatroid contraction(const OrientedMatroid& m, ElementSet a) {
  return dual(deletion(dual(m), a));
}

OrientedMatroid minor(const OrientedMatroid& m, ElementSet upper, ElementSet lower) {
  return contraction(deletion(m, m.ground() - upper), lower);
}

std::vector<SignedSet> positive_circuits(const OrientedMatroid& m) {
  std::vector<SignedSet> out;
  for (const auto& c : m.circuits())
    if (c.positive_up_to_sign()) out.push_back({c.support(), {}});
  return out;
}

std::vector<SignedSet> positive_cocircuits(const OrientedMatroid& m) {
  return positive_circuits(dual(m));
}

bool is_acyclic(const OrientedMatroid& m) {
  return std::none_of(m.circuits().begin(), m.circuits().end(),
                      [](const SignedSet& c) { return c.positive_up_to_sign(); });
}

bool is_totally_cyclic(const OrientedMatroid& m) {
  return std::none_of(m.cocircuits().begin(), m.cocircuits().end(),
                      [](const SignedSet& d) { return d.positive_up_to_sign(); });
}

bool is_independent(const OrientedMatroid& m, ElementSet x) {
  return std::none_of(m.circuits().begin(), m.circuits().end(),
                      [x](const SignedSet& c) { return c.support().subset_of(x); });
}

int rank_of(const OrientedMatroid& m, ElementSet x) { return greedy_rank(m.ground(), m.circuits(), x); }

bool is_loop(const OrientedMatroid& m, Element e) {
  return std::any_of(m.circuits().begin(), m.circuits().end(),
                     [e](const SignedSet& c) { return c.support() == ElementSet::single(e); });
}

bool is_isthmus(const OrientedMatroid& m, Element e) {
  return std::any_of(m.cocircuits().begin(), m.cocircuits().end(),
                     [e](const SignedSet& d) { return d.support() == ElementSet::single(e); });
}

std::vector<ElementSet> bases(const OrientedMatroid& m) {
  require_enumerable(m.size(), "bases");
  std::vector<Element> elems = m.ground().elements();
  std::vector<ElementSet> out;
  const int r = m.rank();
  const int n = static_cast<int>(elems.size());
  auto go = [&](auto&& self, int from, ElementSet cur) -> void {
    if (cur.size() == r) {
      out.push_back(cur);
      return;
    }
    for (int i = from; i + (r - cur.size()) <= n; ++i) {
      ElementSet next = cur.with(elems[i]);
      if (is_independent(m, next)) self(self, i + 1, next);
    }
  };
  go(go, 0, ElementSet{});
  return out;
}

bool is_basis(const OrientedMatroid& m, ElementSet b) {
  return b.subset_of(m.ground()) && b.size() == m.rank() && is_independent(m, b);
}

SignedSet fundamental_circuit(const OrientedMatroid& m, ElementSet basis, Element e) {
  const SignedSet* found = nullptr;
  for (const auto& c : m.circuits())
    if (c.support().contains(e) && c.support().subset_of(basis.with(e))) {
      if (found) throw InvalidMatroid("several fundamental circuits for element " + std::to_string(e));
      found = &c;
    }
  if (!found) throw InvalidMatroid("no fundamental circuit for element " + std::to_string(e));
  return found->oriented_positive_on(e);
}

SignedSet fundamental_cocircuit(const OrientedMatroid& m, ElementSet basis, Element b) {
  ElementSet outside = m.ground() - basis;
  const SignedSet* found = nullptr;
  for (const auto& d : m.cocircuits())
    if (d.support().contains(b) && d.support().subset_of(outside.with(b))) {
      if (found) throw InvalidMatroid("several fundamental cocircuits for element " + std::to_string(b));
      found = &d;
    }
  if (!found) throw InvalidMatroid("no fundamental cocircuit for element " + std::to_string(b));
  return found->oriented_positive_on(b);
}

FundamentalTableau::FundamentalTableau(const OrientedMatroid& m, ElementSet basis)
    : ground_(m.ground()), basis_(basis) {
  ElementSet seen;
  auto put = [&](Element e, const SignedSet& s) {
    if (seen.contains(e)) throw InvalidMatroid("basis has a repeated fundamental row at " + std::to_string(e));
    seen = seen.with(e);
    rows_[e - 1] = s.oriented_positive_on(e);
  };
  for (const auto& c : m.circuits()) {
    ElementSet out = c.support() - basis;
    if (out.size() == 1) put(out.min(), c);
  }
  for (const auto& d : m.cocircuits()) {
    ElementSet in = d.support() & basis;
    if (in.size() == 1) put(in.min(), d);
  }
  if (seen != ground_) throw InvalidMatroid("not a basis: " + format_set(basis));
}

bool is_bounded(const OrientedMatroid& m, Element p) {
  if (!m.ground().contains(p) || !is_acyclic(m)) return false;
  return std::all_of(m.cocircuits().begin(), m.cocircuits().end(), [p](const SignedSet& d) {
    return !d.positive_up_to_sign() || d.support().contains(p);
  });
}

bool is_dual_bounded(const OrientedMatroid& m, Element p) { return is_bounded(dual(m), p); }

bool is_connected(const OrientedMatroid& m) {
  if (m.size() <= 1) return true;
  std::vector<int> parent(kMaxElements + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& c : m.circuits()) {
    Element first = c.support().min();
    for (Element e : c.support()) parent[find(e)] = find(first);
  }
  Element root = find(m.ground().min());
  for (Element e : m.ground())
    if (find(e) != root) return false;
  return true;
}

}  // namespace actbij
