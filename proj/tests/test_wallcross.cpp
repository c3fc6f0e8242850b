#include <doctest.h>

#include <map>

#include "kfc/charge.hpp"
#include "kfc/wallcross.hpp"

using namespace kfc;

namespace {

std::map<Weight, int> length_by_vertex(const MomentGraph& g) {
  std::map<Weight, int> out;
  for (size_t i = 0; i < g.vertices.size(); ++i)
    out[g.vertices[i]] = g.in_degree[i];
  return out;
}

std::map<Weight, std::string> state_strings(const WallCrossEngine& engine) {
  std::map<Weight, std::string> out;
  for (auto& [mu, poly] : engine.eta_kl_all()) out[mu] = poly.to_string();
  return out;
}

}  // namespace

TEST_CASE("moment graph of the adjoint weight in rank two") {
  MomentGraph g = moment_graph(2, Weight{2, 1, 0});
  CHECK(g.vertices.size() == 7);
  CHECK(g.edges.size() == 15);
  for (size_t i = 0; i < g.vertices.size(); ++i)
    CHECK(g.in_degree[i] == length(g.vertices[i]));

  // vertex (0,1,2) is the bottom -theta; its single in-edge comes from zero
  int bottom = g.vertex_index(Weight{0, 1, 2});
  REQUIRE(bottom >= 0);
  CHECK(g.in_degree[bottom] == 1);
  int found = 0;
  for (const auto& e : g.edges) {
    if (e.dst == bottom) {
      CHECK(g.vertices[e.src] == Weight{1, 1, 1});
      CHECK(e.label == AffineRoot(1, 1, 2, -1));
      ++found;
    }
  }
  CHECK(found == 1);

  int top = g.vertex_index(Weight{2, 1, 0});
  CHECK(g.in_degree[top] == rho_pair2(Weight{2, 1, 0}));
}

TEST_CASE("in-degree equals length across dominant weights") {
  for (auto [n, lambda] : std::vector<std::pair<int, Weight>>{
           {1, {5, 0}}, {2, {3, 1, 0}}, {3, {2, 1, 1, 0}}}) {
    MomentGraph g = moment_graph(n, lambda);
    for (size_t i = 0; i < g.vertices.size(); ++i)
      CHECK(g.in_degree[i] == length(g.vertices[i]));
  }
}

TEST_CASE("trivial moment graph") {
  MomentGraph g = moment_graph(2, Weight{0, 0, 0});
  CHECK(g.vertices.size() == 1);
  CHECK(g.edges.empty());
  CHECK(wall_sequence(g).empty());
}

TEST_CASE("wall sequences in the worked examples") {
  MomentGraph chain = moment_graph(1, Weight{4, 0});
  auto walls1 = wall_sequence(chain);
  REQUIRE(walls1.size() == 3);
  CHECK(walls1[0] == AffineRoot(3, 1, 1, -1));
  CHECK(walls1[1] == AffineRoot(2, 1, 1, -1));
  CHECK(walls1[2] == AffineRoot(1, 1, 1, -1));

  MomentGraph adj = moment_graph(2, Weight{2, 1, 0});
  auto walls2 = wall_sequence(adj);
  REQUIRE(walls2.size() == 2);
  CHECK(walls2[0] == AffineRoot(1, 2, 2, -1));  // delta - a2^vee
  CHECK(walls2[1] == AffineRoot(1, 1, 2, -1));  // delta - theta^vee
}

TEST_CASE("word inversions reproduce the wall order reversed") {
  auto inv1 = coxeter_word_inversions(1, 3);
  REQUIRE(inv1.size() == 3);
  CHECK(inv1[0] == AffineRoot(1, 1, 1, -1));
  CHECK(inv1[1] == AffineRoot(2, 1, 1, -1));
  CHECK(inv1[2] == AffineRoot(3, 1, 1, -1));

  auto inv2 = coxeter_word_inversions(2, 6);
  REQUIRE(inv2.size() == 6);
  CHECK(inv2[0] == AffineRoot(1, 1, 2, -1));
  CHECK(inv2[1] == AffineRoot(1, 2, 2, -1));
  CHECK(inv2[2] == AffineRoot(2, 1, 2, -1));
  CHECK(inv2[3] == AffineRoot(2, 2, 2, -1));
  CHECK(inv2[4] == AffineRoot(3, 1, 2, -1));
  CHECK(inv2[5] == AffineRoot(3, 2, 2, -1));

  // For any graph: the crossing order reversed is a prefix of the
  // inversion order filtered to the labels present.
  for (auto [n, lambda] : std::vector<std::pair<int, Weight>>{
           {1, {4, 0}}, {2, {3, 1, 0}}, {3, {2, 1, 1, 0}}}) {
    MomentGraph g = moment_graph(n, lambda);
    auto walls = wall_sequence(g);
    std::vector<AffineRoot> reversed(walls.rbegin(), walls.rend());
    auto inversions = coxeter_word_inversions(n, 12 * (n + 1));
    std::vector<AffineRoot> filtered;
    for (const AffineRoot& a : inversions)
      for (const AffineRoot& w : walls)
        if (a == w) filtered.push_back(a);
    REQUIRE(filtered.size() == reversed.size());
    for (size_t i = 0; i < filtered.size(); ++i)
      CHECK(filtered[i] == reversed[i]);
  }
}

TEST_CASE("a concrete cocharacter crosses the walls in the listed order") {
  for (auto [n, lambda] : std::vector<std::pair<int, Weight>>{
           {1, {4, 0}}, {2, {3, 1, 0}}, {3, {2, 1, 1, 0}}}) {
    MomentGraph g = moment_graph(n, lambda);
    auto walls = wall_sequence(g);
    if (walls.empty()) continue;
    int max_level = walls.front().level;
    // A_1 << ... << A_{n-1} << C << A_n per the parabolic chamber recipe.
    std::vector<long long> fund(n, 0);
    long long spread = 0;
    for (int i = 0; i + 1 < n; ++i) {
      fund[i] = i + 1;
      spread += fund[i];
    }
    long long c_coeff = max_level * spread + 1;
    fund[n - 1] = c_coeff + 1;
    auto sorted = walls_by_crossing_time(walls, fund, c_coeff);
    REQUIRE(sorted.size() == walls.size());
    for (size_t i = 0; i < walls.size(); ++i) CHECK(sorted[i] == walls[i]);
  }
}

TEST_CASE("twisted in-degrees on the rank-one ladder") {
  MomentGraph g = moment_graph(1, Weight{4, 0});
  auto walls = wall_sequence(g);  // [3d-a, 2d-a, d-a]

  std::map<Weight, int> base = length_by_vertex(g);
  CHECK(base.at(Weight{0, 4}) == 3);
  CHECK(base.at(Weight{4, 0}) == 4);

  // all three walls uncrossed
  auto deg3 = twisted_indegrees(g, walls);
  std::map<Weight, int> expect3{
      {{0, 4}, 0}, {{1, 3}, 1}, {{2, 2}, 2}, {{3, 1}, 3}, {{4, 0}, 4}};
  for (size_t i = 0; i < g.vertices.size(); ++i)
    CHECK(deg3[i] == expect3.at(g.vertices[i]));

  // only the two lowest levels uncrossed
  std::vector<AffineRoot> partial{AffineRoot(2, 1, 1, -1),
                                  AffineRoot(1, 1, 1, -1)};
  auto deg2 = twisted_indegrees(g, partial);
  std::map<Weight, int> expect2{
      {{0, 4}, 1}, {{1, 3}, 0}, {{2, 2}, 2}, {{3, 1}, 3}, {{4, 0}, 4}};
  for (size_t i = 0; i < g.vertices.size(); ++i)
    CHECK(deg2[i] == expect2.at(g.vertices[i]));

  // reversing the complement restores each orientation exactly once
  std::vector<AffineRoot> complement{AffineRoot(3, 1, 1, -1)};
  auto degc = twisted_indegrees(g, complement);
  for (size_t i = 0; i < g.vertices.size(); ++i)
    CHECK(deg2[i] + degc[i] ==
          g.in_degree[i] + deg3[i]);
}

TEST_CASE("off-by-one in-degree identity at every ladder step") {
  MomentGraph g = moment_graph(1, Weight{4, 0});
  auto walls = wall_sequence(g);
  for (size_t j = 0; j < walls.size(); ++j) {
    std::vector<AffineRoot> uncrossed(walls.begin() + j + 1, walls.end());
    std::vector<std::string> failures;
    CHECK(WallCrossEngine::check_gammam(g, uncrossed, walls[j], &failures));
    CHECK(failures.empty());
  }
  // vacuous when no pair lies inside the interval
  MomentGraph tiny = moment_graph(2, Weight{1, 0, 0});
  std::vector<std::string> failures;
  CHECK(WallCrossEngine::check_gammam(tiny, {}, AffineRoot(5, 1, 2, -1),
                                      &failures));
}

TEST_CASE("recharge trace for the rank-one ladder") {
  Crystal c(1, {4});
  AtomDecomposition atoms(c);
  WallCrossEngine engine(c, atoms);
  REQUIRE(engine.walls().size() == 3);

  auto r2_by_weight = [&]() {
    std::map<Weight, int> out;
    for (int t = 0; t < c.size(); ++t) out[c.weight(t)] = engine.recharge2(t);
    return out;
  };

  engine.init_mv();
  std::map<Weight, int> mv{
      {{0, 4}, 4}, {{1, 3}, 2}, {{2, 2}, 0}, {{3, 1}, -2}, {{4, 0}, -4}};
  CHECK(r2_by_weight() == mv);

  engine.init_parabolic();  // rank one: the parabolic state is the MV state
  CHECK(r2_by_weight() == mv);

  StepReport s1 = engine.cross_next();
  CHECK(s1.ok());
  CHECK(s1.m == 2);
  CHECK(s1.wall == AffineRoot(3, 1, 1, -1));
  std::map<Weight, int> after1{
      {{0, 4}, 2}, {{1, 3}, 4}, {{2, 2}, 0}, {{3, 1}, -2}, {{4, 0}, -4}};
  CHECK(r2_by_weight() == after1);

  StepReport s2 = engine.cross_next();
  CHECK(s2.ok());
  std::map<Weight, int> after2{
      {{0, 4}, 0}, {{1, 3}, 4}, {{2, 2}, 2}, {{3, 1}, -2}, {{4, 0}, -4}};
  CHECK(r2_by_weight() == after2);

  StepReport s3 = engine.cross_next();
  CHECK(s3.ok());
  CHECK(engine.done());
  std::map<Weight, int> after3{
      {{0, 4}, -2}, {{1, 3}, 2}, {{2, 2}, 4}, {{3, 1}, 0}, {{4, 0}, -4}};
  CHECK(r2_by_weight() == after3);

  for (int t = 0; t < c.size(); ++t)
    CHECK(engine.recharge2(t) == charge2(c, t) - length(c.weight(t)));
}

TEST_CASE("recharge trace for the rank-two adjoint crystal") {
  Crystal c(2, {2, 1});
  AtomDecomposition atoms(c);
  WallCrossEngine engine(c, atoms);
  REQUIRE(engine.walls().size() == 2);

  engine.init_mv();
  std::map<Weight, std::string> mv{
      {{2, 1, 0}, "v^-4"}, {{2, 0, 1}, "v^-2"}, {{1, 2, 0}, "v^-2"},
      {{1, 1, 1}, "2"},    {{0, 2, 1}, "v^2"},  {{1, 0, 2}, "v^2"},
      {{0, 1, 2}, "v^4"}};
  CHECK(state_strings(engine) == mv);
  CHECK(engine.eta_kl(Weight{1, 1, 1}).eval_one() == 2);

  engine.init_parabolic();
  std::map<Weight, std::string> parabolic{
      {{2, 1, 0}, "v^-4"}, {{2, 0, 1}, "v^-2"}, {{1, 2, 0}, "v^-2"},
      {{1, 1, 1}, "1+v^2"}, {{0, 2, 1}, "1"},   {{1, 0, 2}, "v^2"},
      {{0, 1, 2}, "v^4"}};
  CHECK(state_strings(engine) == parabolic);

  StepReport s1 = engine.cross_next();
  CHECK(s1.ok());
  CHECK(s1.wall == AffineRoot(1, 2, 2, -1));
  std::map<Weight, std::string> mid{
      {{2, 1, 0}, "v^-4"}, {{2, 0, 1}, "v^-2"}, {{1, 2, 0}, "v^-2"},
      {{1, 1, 1}, "2v^2"}, {{0, 2, 1}, "1"},    {{1, 0, 2}, "1"},
      {{0, 1, 2}, "v^4"}};
  CHECK(state_strings(engine) == mid);

  StepReport s2 = engine.cross_next();
  CHECK(s2.ok());
  CHECK(s2.wall == AffineRoot(1, 1, 2, -1));
  std::map<Weight, std::string> kl{
      {{2, 1, 0}, "v^-4"}, {{2, 0, 1}, "v^-2"}, {{1, 2, 0}, "v^-2"},
      {{1, 1, 1}, "v^2+v^4"}, {{0, 2, 1}, "1"}, {{1, 0, 2}, "1"},
      {{0, 1, 2}, "v^2"}};
  CHECK(state_strings(engine) == kl);

  CHECK(engine.kl_poly(Weight{1, 1, 1}).to_q_string() == "q+q^2");
  CHECK(engine.kl_poly(Weight{2, 1, 0}).to_string() == "1");
}

TEST_CASE("crossing recurrence arithmetic from the rank-two table") {
  LaurentPoly vm2 = LaurentPoly::monomial(-2);
  LaurentPoly h_nu = LaurentPoly::monomial(4);          // v^4 at -theta
  LaurentPoly h_mu = LaurentPoly::monomial(2, 2);       // 2v^2 at zero
  CHECK(vm2 * h_nu == LaurentPoly::monomial(2));        // v^2
  CHECK(h_mu + (LaurentPoly::one() - vm2) * h_nu ==
        LaurentPoly::monomial(2) + LaurentPoly::monomial(4));  // v^2+v^4
}

TEST_CASE("engine sweep keeps every per-step identity") {
  for (auto [n, shape] : std::vector<std::pair<int, std::vector<int>>>{
           {1, {3}}, {1, {5}}, {2, {2, 1}}, {2, {2, 2}}, {2, {3, 1, 1}},
           {3, {2, 1, 1}}}) {
    Crystal c(n, shape);
    AtomDecomposition atoms(c);
    WallCrossEngine engine(c, atoms);
    engine.init_mv();
    engine.init_parabolic();
    while (!engine.done()) {
      StepReport report = engine.cross_next();
      for (const std::string& f : report.failures) FAIL_CHECK(f);
      CHECK(report.ok());
    }
    for (const Weight& mu : dominant_weights_below(c.weight(c.highest())))
      CHECK(engine.kl_poly(mu) == kostka_foulkes(c, mu));
  }
}

TEST_CASE("empty crystal trace") {
  Crystal c(1, {0});
  AtomDecomposition atoms(c);
  WallCrossEngine engine(c, atoms);
  CHECK(engine.walls().empty());
  engine.init_mv();
  engine.init_parabolic();
  CHECK(engine.done());
  CHECK(engine.kl_poly(Weight{0, 0}).to_string() == "1");
}
