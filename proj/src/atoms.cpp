#include "kfc/atoms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kfc {

int atomic_number2(const Crystal& crystal, int t) {
  int z2 = -rho_pair2(crystal.weight(t));
  for (const Root& beta : positive_roots(crystal.rank()))
    z2 += 2 * crystal.phi_root(beta, t);
  return z2;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int m) : parent(m) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

AtomDecomposition::AtomDecomposition(const Crystal& crystal)
    : crystal_(&crystal) {
  int m = crystal.size();
  int n = crystal.rank();
  UnionFind uf(m);
  for (int t = 0; t < m; ++t) {
    for (int i = 1; i <= n; ++i) uf.unite(t, crystal.s_act(i, t));
    int down = crystal.f(n, t);
    if (down != -1) uf.unite(t, down);
  }

  std::vector<int> root_to_atom(m, -1);
  atom_of_.assign(m, -1);
  for (int t = 0; t < m; ++t) {
    int r = uf.find(t);
    if (root_to_atom[r] == -1) {
      root_to_atom[r] = static_cast<int>(atoms_.size());
      atoms_.emplace_back();
    }
    atoms_[root_to_atom[r]].members.push_back(t);
  }

  for (Atom& atom : atoms_) {
    int top = -1;
    for (int t : atom.members) {
      if (!is_dominant(crystal.weight(t))) continue;
      if (top == -1 || bruhat_leq(crystal.weight(top), crystal.weight(t)))
        top = t;
    }
    if (top == -1) throw std::logic_error("atom without dominant weight");
    atom.highest_weight = crystal.weight(top);
    atom.atomic_number2 = atomic_number2(crystal, top);
  }

  // Canonical order: highest weight lexicographically decreasing, larger
  // atoms first, then by first member.
  std::vector<int> order(atoms_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (atoms_[a].highest_weight != atoms_[b].highest_weight)
      return atoms_[a].highest_weight > atoms_[b].highest_weight;
    if (atoms_[a].members.size() != atoms_[b].members.size())
      return atoms_[a].members.size() > atoms_[b].members.size();
    return atoms_[a].members.front() < atoms_[b].members.front();
  });
  std::vector<Atom> sorted;
  sorted.reserve(atoms_.size());
  for (int a : order) sorted.push_back(std::move(atoms_[a]));
  atoms_ = std::move(sorted);
  for (size_t a = 0; a < atoms_.size(); ++a)
    for (int t : atoms_[a].members) atom_of_[t] = static_cast<int>(a);
}

}  // namespace kfc
