#include <doctest.h>

#include <set>

#include "kfc/atoms.hpp"

using namespace kfc;

TEST_CASE("atom shapes in the worked examples") {
  Crystal chain(1, {4});
  AtomDecomposition one(chain);
  CHECK(one.count() == 1);
  CHECK(one.atom(0).members.size() == 5);
  CHECK(one.atom(0).highest_weight == Weight{4, 0});

  Crystal pair(1, {1});
  AtomDecomposition two(pair);
  CHECK(two.count() == 1);
  CHECK(two.atom(0).members.size() == 2);

  Crystal adjoint(2, {2, 1});
  AtomDecomposition adj(adjoint);
  CHECK(adj.count() == 2);
  CHECK(adj.atom(0).members.size() == 7);
  CHECK(adj.atom(0).highest_weight == Weight{2, 1, 0});
  CHECK(adj.atom(1).members.size() == 1);
  CHECK(adj.atom(1).highest_weight == Weight{1, 1, 1});
  int zero_in_big = 0;
  for (int t : adj.atom(0).members)
    if (adjoint.weight(t) == Weight{1, 1, 1}) ++zero_in_big;
  CHECK(zero_in_big == 1);
}

TEST_CASE("doubled atomic numbers in rank one and two") {
  Crystal chain(1, {4});
  CHECK(atomic_number2(chain, chain.highest()) == 4);  // Z = 2
  for (int t = 0; t < chain.size(); ++t)
    CHECK(atomic_number2(chain, t) == 4);

  Crystal adjoint(2, {2, 1});
  AtomDecomposition adj(adjoint);
  CHECK(adj.atom(1).atomic_number2 == 2);  // singleton at zero has Z = 1
}

TEST_CASE("the two formulas for the atomic number agree") {
  for (auto [n, shape] : std::vector<std::pair<int, std::vector<int>>>{
           {1, {3}}, {2, {2, 1}}, {2, {2, 2}}, {3, {2, 1, 1}}}) {
    Crystal c(n, shape);
    for (int t = 0; t < c.size(); ++t) {
      int via_eps = rho_pair2(c.weight(t));
      for (const Root& beta : positive_roots(n))
        via_eps += 2 * c.eps_root(beta, t);
      CHECK(atomic_number2(c, t) == via_eps);
    }
  }
}

TEST_CASE("atoms partition the crystal and wear their axioms") {
  for (auto [n, shape] : std::vector<std::pair<int, std::vector<int>>>{
           {1, {4}}, {2, {2, 1}}, {2, {3, 1}}, {2, {2, 2}}, {3, {2, 1, 1}}}) {
    Crystal c(n, shape);
    AtomDecomposition atoms(c);
    size_t covered = 0;
    for (const Atom& atom : atoms.atoms()) {
      covered += atom.members.size();
      // distinct weights
      std::set<Weight> weights;
      for (int t : atom.members) {
        CHECK(weights.insert(c.weight(t)).second);
        CHECK(atomic_number2(c, t) == atom.atomic_number2);
      }
      // full lower interval of the highest weight
      auto interval = lower_interval(atom.highest_weight);
      CHECK(weights == std::set<Weight>(interval.begin(), interval.end()));
    }
    CHECK(covered == static_cast<size_t>(c.size()));
    // membership closed under the generating edges
    for (int t = 0; t < c.size(); ++t) {
      for (int i = 1; i <= n; ++i)
        CHECK(atoms.atom_index_of(c.s_act(i, t)) == atoms.atom_index_of(t));
      int down = c.f(n, t);
      if (down != -1)
        CHECK(atoms.atom_index_of(down) == atoms.atom_index_of(t));
    }
  }
}

TEST_CASE("tail-interval operators preserve atoms and see the interval") {
  for (auto [n, shape] : std::vector<std::pair<int, std::vector<int>>>{
           {2, {2, 1}}, {2, {2, 2}}, {3, {2, 1, 1}}}) {
    Crystal c(n, shape);
    AtomDecomposition atoms(c);
    for (int k = 1; k <= n; ++k) {
      Root beta(k, n);
      for (int t = 0; t < c.size(); ++t) {
        const Atom& atom = atoms.atom_of(t);
        int down = c.f_root(beta, t);
        if (down != -1)
          CHECK(atoms.atom_index_of(down) == atoms.atom_index_of(t));
        // f_beta^j(T) != 0 iff wt(T) - j*beta stays below the atom top.
        int reach = c.phi_root(beta, t);
        for (int j = 1; j <= reach + 2; ++j) {
          Weight moved = c.weight(t);
          moved[beta.lo - 1] -= j;
          moved[beta.hi] += j;
          bool inside = content_sum(moved) == content_sum(atom.highest_weight) &&
                        bruhat_leq(moved, atom.highest_weight);
          CHECK(inside == (j <= reach));
        }
      }
    }
  }
}

TEST_CASE("atom membership lookup") {
  Crystal c(2, {2, 1});
  AtomDecomposition atoms(c);
  CHECK(atoms.atom_of(c.highest()).highest_weight == Weight{2, 1, 0});
  for (int t = 0; t < c.size(); ++t)
    CHECK(atoms.atom_index_of(c.w_act(
              WeylElement{{2, 0, 1}}, t)) == atoms.atom_index_of(t));
}
