#include "kfc/wallcross.hpp"

#include <algorithm>
#include <stdexcept>

namespace kfc {

namespace {

long long affine_key(const AffineRoot& a) {
  return ((static_cast<long long>(a.level) * 64 + a.lo) * 64 + a.hi) * 4 +
         (a.sign > 0 ? 1 : 0);
}

}  // namespace

int MomentGraph::vertex_index(const Weight& mu) const {
  auto it = vidx_.find(weight_key(mu));
  return it == vidx_.end() ? -1 : it->second;
}

MomentGraph moment_graph(int n, const Weight& lambda) {
  if (!is_dominant(lambda))
    throw std::invalid_argument("moment_graph needs dominant lambda");
  MomentGraph g;
  g.n = n;
  g.lambda = lambda;
  g.vertices = lower_interval(lambda);
  for (size_t i = 0; i < g.vertices.size(); ++i)
    g.vidx_.emplace(weight_key(g.vertices[i]), static_cast<int>(i));

  g.in_degree.assign(g.vertices.size(), 0);
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    const Weight& mu = g.vertices[i];
    for (const Root& beta : positive_roots(n)) {
      Weight step = mu;
      for (int k = 1;; ++k) {
        step[beta.lo - 1] += 1;
        step[beta.hi] -= 1;
        int j = g.vertex_index(step);
        if (j < 0) break;  // the interval slice along beta is contiguous
        auto label = edge_label(mu, step);
        if (!label) throw std::logic_error("root-multiple pair without label");
        int cmp = reflection_compare(mu, *label);
        if (cmp == 0) throw std::logic_error("edge with weight-fixing label");
        MomentGraph::Edge e;
        e.label = *label;
        e.src = cmp > 0 ? static_cast<int>(i) : j;
        e.dst = cmp > 0 ? j : static_cast<int>(i);
        g.edges.push_back(e);
        ++g.in_degree[e.dst];
        (void)k;
      }
    }
  }
  return g;
}

std::vector<AffineRoot> wall_sequence(const MomentGraph& graph) {
  std::unordered_set<long long> seen;
  std::vector<AffineRoot> walls;
  for (const auto& e : graph.edges) {
    const AffineRoot& a = e.label;
    if (a.level <= 0 || a.sign > 0) continue;
    if (a.hi < graph.n) continue;  // parabolic label, crossed before the engine
    if (!seen.insert(affine_key(a)).second) continue;
    walls.push_back(a);
  }
  std::sort(walls.begin(), walls.end(), [](const AffineRoot& x, const AffineRoot& y) {
    if (x.level != y.level) return x.level > y.level;
    return x.lo > y.lo;
  });
  return walls;
}

std::vector<int> twisted_indegrees(const MomentGraph& graph,
                                   const std::vector<AffineRoot>& reversed) {
  std::unordered_set<long long> rev;
  for (const AffineRoot& a : reversed) rev.insert(affine_key(a));
  std::vector<int> deg(graph.vertices.size(), 0);
  for (const auto& e : graph.edges)
    ++deg[rev.count(affine_key(e.label)) ? e.src : e.dst];
  return deg;
}

namespace {

// An affine coroot as (level, finite part as a content vector).
struct AffineVec {
  int level;
  std::vector<int> v;
};

AffineRoot vec_to_root(const AffineVec& av) {
  int a = -1, b = -1;
  for (size_t i = 0; i < av.v.size(); ++i) {
    if (av.v[i] == 1) a = static_cast<int>(i);
    if (av.v[i] == -1) b = static_cast<int>(i);
  }
  if (a < 0 || b < 0) throw std::logic_error("not a root vector");
  if (a < b) return AffineRoot(av.level, a + 1, b, +1);
  return AffineRoot(av.level, b + 1, a, -1);
}

void apply_simple(int n, int i, AffineVec& x) {
  if (i == 0) {
    int k = x.v.front() - x.v.back();  // <gamma, theta^vee>
    x.level += k;
    x.v.front() -= k;
    x.v.back() += k;
  } else {
    std::swap(x.v[i - 1], x.v[i]);
  }
  (void)n;
}

}  // namespace

std::vector<AffineRoot> coxeter_word_inversions(int n, int m) {
  std::vector<AffineRoot> out;
  for (int j = 1; j <= m; ++j) {
    int letter = (j - 1) % (n + 1);  // word s_0 s_1 ... s_n repeating
    AffineVec x;
    x.v.assign(n + 1, 0);
    if (letter == 0) {
      x.level = 1;
      x.v.front() = -1;  // delta - theta^vee
      x.v.back() = 1;
    } else {
      x.level = 0;
      x.v[letter - 1] = 1;
      x.v[letter] = -1;
    }
    for (int p = j - 1; p >= 1; --p) apply_simple(n, (p - 1) % (n + 1), x);
    out.push_back(vec_to_root(x));
  }
  return out;
}

std::vector<AffineRoot> walls_by_crossing_time(
    const std::vector<AffineRoot>& walls,
    const std::vector<long long>& fund_coeffs, long long d_coeff) {
  std::vector<AffineRoot> out = walls;
  auto time_less = [&](const AffineRoot& x, const AffineRoot& y) {
    // crossing time -<eta_P,a>/level; all levels positive
    long long vx = wall_value(fund_coeffs, d_coeff, x);
    long long vy = wall_value(fund_coeffs, d_coeff, y);
    return -vx * y.level < -vy * x.level;
  };
  std::stable_sort(out.begin(), out.end(), time_less);
  return out;
}

WallCrossEngine::WallCrossEngine(const Crystal& crystal,
                                 const AtomDecomposition& atoms)
    : crystal_(&crystal), atoms_(&atoms) {
  int n = crystal.rank();
  graph_ = moment_graph(n, crystal.weight(crystal.highest()));
  walls_ = wall_sequence(graph_);

  std::unordered_map<long long, int> wall_index;
  for (size_t i = 0; i < walls_.size(); ++i)
    wall_index.emplace(affine_key(walls_[i]), static_cast<int>(i));

  atom_graphs_.reserve(atoms.count());
  for (const Atom& atom : atoms.atoms()) {
    AtomGraph ag;
    ag.graph = moment_graph(n, atom.highest_weight);
    ag.wall_pos.reserve(ag.graph.edges.size());
    for (const auto& e : ag.graph.edges) {
      const AffineRoot& a = e.label;
      if (a.level > 0 && a.sign < 0 && a.hi == n) {
        auto it = wall_index.find(affine_key(a));
        if (it == wall_index.end())
          throw std::logic_error("atom wall label missing from global walls");
        ag.wall_pos.push_back(it->second);
      } else {
        ag.wall_pos.push_back(-1);
      }
    }
    ag.vertex_of.reserve(atom.members.size());
    for (int t : atom.members) {
      int v = ag.graph.vertex_index(crystal.weight(t));
      if (v < 0) throw std::logic_error("atom weight outside its interval");
      ag.vertex_of.push_back(v);
    }
    atom_graphs_.push_back(std::move(ag));
  }

  r2_.assign(crystal.size(), 0);
}

int WallCrossEngine::walls_remaining() const {
  return state_ == State::kEngine ? size_m() - crossed_ : size_m();
}

void WallCrossEngine::init_mv() {
  for (int t = 0; t < crystal_->size(); ++t)
    r2_[t] = -rho_pair2(crystal_->weight(t));
  state_ = State::kMv;
  crossed_ = 0;
}

std::vector<int> WallCrossEngine::atom_arr(const AtomGraph& ag,
                                           int crossed) const {
  std::vector<int> deg(ag.graph.vertices.size(), 0);
  for (size_t e = 0; e < ag.graph.edges.size(); ++e) {
    bool rev = ag.wall_pos[e] >= crossed && ag.wall_pos[e] >= 0;
    const auto& edge = ag.graph.edges[e];
    ++deg[rev ? edge.src : edge.dst];
  }
  return deg;
}

void WallCrossEngine::init_parabolic() {
  int n = crystal_->rank();
  std::vector<Root> parabolic_roots;
  for (const Root& beta : positive_roots(n))
    if (beta.hi < n) parabolic_roots.push_back(beta);

  for (int a = 0; a < atoms_->count(); ++a) {
    const Atom& atom = atoms_->atom(a);
    const AtomGraph& ag = atom_graphs_[a];
    std::vector<int> arr = atom_arr(ag, 0);
    for (size_t k = 0; k < atom.members.size(); ++k) {
      int t = atom.members[k];
      int value = atomic_number2(*crystal_, t) - 2 * arr[ag.vertex_of[k]];
      const Weight& w = crystal_->weight(t);
      int closed = -rho_pair2(w);
      for (const Root& beta : parabolic_roots)
        closed += 2 * (crystal_->phi_root(beta, t) - length_along(w, beta));
      if (value != closed)
        throw std::logic_error(
            "parabolic initialization: in-degree formula and closed form "
            "disagree at element " +
            crystal_->element(t).encoding());
      r2_[t] = value;
    }
  }
  state_ = State::kEngine;
  crossed_ = 0;
}

StepReport WallCrossEngine::cross_next() {
  if (state_ != State::kEngine)
    throw std::logic_error("engine not initialized at the parabolic state");
  if (crossed_ >= size_m()) throw std::logic_error("no walls left to cross");

  const AffineRoot wall = walls_[crossed_];
  const Root beta(wall.lo, wall.hi);
  const int level = wall.level;

  StepReport report;
  report.wall = wall;

  std::map<Weight, LaurentPoly> before = eta_kl_all();

  // First pass: psi images and the swapping-function contract, using the
  // pre-crossing recharge values.
  std::unordered_set<int> psi_image;
  std::vector<std::pair<int, int>> deltas;  // (element, +-2)
  for (int a = 0; a < atoms_->count(); ++a) {
    const Atom& atom = atoms_->atom(a);
    for (int t : atom.members) {
      const Weight& w = crystal_->weight(t);
      int cmp = reflection_compare(w, wall);
      if (cmp < 0) {
        // wt(T) is the upper weight nu; psi_nu(T) = e_beta^{<mu,beta^vee>+c}.
        deltas.push_back({t, -2});
        Weight mu = reflect(w, wall);
        int power = pairing(mu, beta) + level;
        int img = t;
        for (int p = 0; p < power && img != -1; ++p)
          img = crystal_->e_root(beta, img);
        if (img == -1) {
          report.swap_ok = false;
          report.failures.push_back("psi undefined at " +
                                    crystal_->element(t).encoding() +
                                    " across wall " + to_string(wall));
          continue;
        }
        if (!(crystal_->weight(img) == mu) ||
            atoms_->atom_index_of(img) != a) {
          report.swap_ok = false;
          report.failures.push_back("psi left the weight space or atom at " +
                                    crystal_->element(t).encoding());
          continue;
        }
        if (!psi_image.insert(img).second) {
          report.swap_ok = false;
          report.failures.push_back("psi not injective at image " +
                                    crystal_->element(img).encoding());
        }
        if (r2_[img] != r2_[t] - 2) {
          report.swap_ok = false;
          report.failures.push_back("psi does not drop the recharge by 1 at " +
                                    crystal_->element(t).encoding());
        }
      }
    }
  }
  for (int a = 0; a < atoms_->count(); ++a) {
    const Atom& atom = atoms_->atom(a);
    for (int t : atom.members) {
      const Weight& w = crystal_->weight(t);
      if (reflection_compare(w, wall) > 0) {
        Weight up = reflect(w, wall);
        if (bruhat_leq(up, atom.highest_weight) && psi_image.count(t))
          deltas.push_back({t, +2});
      }
    }
  }
  for (auto [t, d] : deltas) r2_[t] += d;
  ++crossed_;
  report.m = size_m() - crossed_;

  check_arr_identity(report);

  std::vector<AffineRoot> uncrossed(walls_.begin() + crossed_, walls_.end());
  if (!check_gammam(graph_, uncrossed, wall, &report.failures))
    report.gammam_ok = false;

  // Wall-crossing recurrence on the renormalized graded dimensions.
  std::map<Weight, LaurentPoly> after = eta_kl_all();
  const LaurentPoly vm2 = LaurentPoly::monomial(-2);
  const LaurentPoly one_minus = LaurentPoly::one() - vm2;
  for (const Weight& mu : graph_.vertices) {
    int cmp = reflection_compare(mu, wall);
    if (cmp < 0) continue;  // handled from the lower partner
    if (cmp == 0 || graph_.vertex_index(reflect(mu, wall)) < 0) {
      if (!(after.at(mu) == before.at(mu))) {
        report.recurrence_ok = false;
        report.failures.push_back("polynomial changed at untouched weight " +
                                  weight_key(mu));
      }
      continue;
    }
    Weight nu = reflect(mu, wall);
    if (!(after.at(nu) == vm2 * before.at(nu)) ||
        !(after.at(mu) == before.at(mu) + one_minus * before.at(nu))) {
      report.recurrence_ok = false;
      report.failures.push_back("crossing recurrence fails at pair (" +
                                weight_key(mu) + ", " + weight_key(nu) +
                                ") across " + to_string(wall));
    }
  }
  return report;
}

void WallCrossEngine::check_arr_identity(StepReport& report) const {
  for (int a = 0; a < atoms_->count(); ++a) {
    const Atom& atom = atoms_->atom(a);
    const AtomGraph& ag = atom_graphs_[a];
    std::vector<int> arr = atom_arr(ag, crossed_);
    for (size_t k = 0; k < atom.members.size(); ++k) {
      int t = atom.members[k];
      if (r2_[t] != atom.atomic_number2 - 2 * arr[ag.vertex_of[k]]) {
        report.arr_identity_ok = false;
        report.failures.push_back("recharge differs from Z - Arr at " +
                                  crystal_->element(t).encoding());
      }
    }
  }
}

bool WallCrossEngine::check_gammam(const MomentGraph& graph,
                                   const std::vector<AffineRoot>& reversed,
                                   const AffineRoot& wall,
                                   std::vector<std::string>* failures) {
  std::vector<int> deg = twisted_indegrees(graph, reversed);
  bool ok = true;
  for (size_t i = 0; i < graph.vertices.size(); ++i) {
    const Weight& mu = graph.vertices[i];
    if (reflection_compare(mu, wall) <= 0) continue;
    int j = graph.vertex_index(reflect(mu, wall));
    if (j < 0) continue;
    if (deg[i] != deg[j] - 1) {
      ok = false;
      if (failures)
        failures->push_back("in-degree identity fails at pair (" +
                            weight_key(mu) + ", " +
                            weight_key(graph.vertices[j]) + ")");
    }
  }
  return ok;
}

LaurentPoly WallCrossEngine::eta_kl(const Weight& mu) const {
  LaurentPoly out;
  for (int t : crystal_->weight_space(mu)) out.add_term(r2_[t], 1);
  return out;
}

std::map<Weight, LaurentPoly> WallCrossEngine::eta_kl_all() const {
  std::map<Weight, LaurentPoly> out;
  for (const Weight& mu : crystal_->weights_present()) out[mu] = eta_kl(mu);
  return out;
}

LaurentPoly WallCrossEngine::kl_poly(const Weight& mu) const {
  return eta_kl(mu).shift(length(mu));
}

}  // namespace kfc
