#include "moduli/algebra/interpolate.hpp"
#include "moduli/fatgraph/enumerate.hpp"
#include "moduli/polytope/polytope.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <functional>

using namespace moduli;

namespace {

IncidenceSystem sys(std::vector<std::vector<int>> m) { return IncidenceSystem{std::move(m)}; }

// Exhaustive oracle: every x in [1, max]^E.
std::vector<LengthVector> brute_solutions(const IncidenceSystem& a, const LengthVector& b) {
  std::int64_t max = 1;
  for (auto v : b) max = std::max(max, v);
  std::vector<LengthVector> out;
  LengthVector x(a.cols());
  std::function<void(std::size_t)> walk = [&](std::size_t e) {
    if (e == x.size()) {
      for (std::size_t i = 0; i < a.rows(); ++i) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < x.size(); ++j) s += a.matrix[i][j] * x[j];
        if (s != b[i]) return;
      }
      out.push_back(x);
      return;
    }
    for (std::int64_t v = 1; v <= max; ++v) {
      x[e] = v;
      walk(e + 1);
    }
  };
  walk(0);
  return out;
}

const SimplexSpec kP1{{1, 2}, 2, {0, 0}};  // x + 2y <= 2
const SimplexSpec kP2{{1, 1}, 1, {0, 0}};  // x + y <= 1

Rational brute_simplex(const SimplexSpec& s, long k, bool interior) {
  Rational total(0);
  const long bound = k * s.bound;
  std::vector<long> x(s.dimension());
  std::function<void(std::size_t, long)> walk = [&](std::size_t i, long used) {
    if (i == x.size()) {
      if (interior && used >= bound) return;
      Rational w(1);
      for (std::size_t j = 0; j < x.size(); ++j) w *= oracle::ipow(x[j], s.weight[j]);
      total += w;
      return;
    }
    for (long v = interior ? 1 : 0; used + s.constraint[i] * v <= bound; ++v) {
      x[i] = v;
      walk(i + 1, used + s.constraint[i] * v);
    }
  };
  walk(0, 0);
  return total;
}

}  // namespace

TEST_CASE("count_solutions") {
  CHECK(count_solutions(sys({{2, 2, 2}}), LengthVector{6}) == 1);
  CHECK(count_solutions(sys({{2, 1, 1}, {0, 1, 0}, {0, 0, 1}}), LengthVector{6, 2, 2}) == 1);
  CHECK(count_solutions(sys({{2, 2}}), LengthVector{4}) == 1);
  CHECK(count_solutions(sys({{2, 2, 2}}), LengthVector{7}) == 0);
  CHECK(count_solutions(sys({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}), LengthVector{0, 2, 2}) == 0);
}

TEST_CASE("enumerate_solutions") {
  auto sols = [](std::vector<std::vector<int>> m, LengthVector b) {
    return enumerate_solutions(sys(std::move(m)), b).solutions;
  };
  CHECK(sols({{2, 2, 2}}, {8}) == std::vector<LengthVector>{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
  CHECK(sols({{2, 2, 2}}, {4}).empty());
  CHECK(sols({{2, 2}}, {6}) == std::vector<LengthVector>{{1, 2}, {2, 1}});
  const SolutionSet set = enumerate_solutions(sys({{2, 2}}), LengthVector{6});
  const auto j = to_json(set);
  CHECK(j["A"] == nlohmann::json::parse("[[2,2]]"));
  CHECK(j["b"] == nlohmann::json::parse("[6]"));
  CHECK(j["solutions"] == nlohmann::json::parse("[[1,2],[2,1]]"));
}

TEST_CASE("solutions match exhaustive search on enumerated systems") {
  for (auto [g, n] : {std::pair{0, 3}, {0, 4}, {1, 1}, {1, 2}}) {
    for (const auto& e : enumerate(g, n)) {
      const IncidenceSystem a = incidence_matrix(e.graph);
      for (const auto& b : oracle::admissible(n, 10)) {
        const auto brute = brute_solutions(a, b);
        const SolutionSet set = enumerate_solutions(a, b);
        CHECK(set.solutions == brute);
        CHECK(count_solutions(a, b) == static_cast<long>(brute.size()));
      }
      // odd totals never have solutions
      LengthVector odd(n, 1);
      if (n % 2 == 0) odd[0] = 2;
      CHECK(count_solutions(a, odd) == 0);
    }
  }
}

TEST_CASE("direct count") {
  CHECK(direct_count(0, 3, LengthVector{2, 2, 2}) == 1);
  CHECK(direct_count(1, 1, LengthVector{4}) == make_rational(1, 4));
  CHECK(direct_count(0, 4, LengthVector{2, 2, 2, 2}) == 3);
  for (auto [g, n] : {std::pair{0, 3}, {0, 4}, {1, 1}, {1, 2}})
    for (const auto& b : oracle::admissible(n, 12)) CHECK(direct_count(g, n, b) == oracle::table1(g, n, b));
  // below 4g+2n-2 every type vanishes
  for (auto [g, n] : {std::pair{0, 4}, {0, 5}, {1, 1}, {1, 2}})
    for (const auto& b : oracle::admissible(n, 4 * g + 2 * n - 3)) CHECK(direct_count(g, n, b) == 0);
}

TEST_CASE("dessin listings") {
  const DessinListing one = list_dessins(1, 1, LengthVector{4});
  REQUIRE(one.entries.size() == 1);
  CHECK(one.entries[0].automorphisms == 4);
  CHECK(one.entries[0].metrics.size() == 1);
  CHECK(one.weighted_total == make_rational(1, 4));
  const DessinListing pants = list_dessins(0, 3, LengthVector{2, 2, 2});
  CHECK(pants.weighted_total == 1);
  std::size_t total = 0;
  for (const auto& e : pants.entries) total += e.metrics.size();
  CHECK(total == 1);
  CHECK(list_dessins(1, 1, LengthVector{2}).entries.empty());
  CHECK(list_dessins(1, 1, LengthVector{2}).weighted_total == 0);
}

TEST_CASE("weighted simplex counts") {
  CHECK(weighted_simplex_count(kP1, 1, false) == 4);
  CHECK(weighted_simplex_count(kP1, 1, true) == 0);
  const SimplexSpec xy{{1, 2}, 2, {1, 1}};
  CHECK(weighted_simplex_count(xy, 3, false) == brute_simplex(xy, 3, false));
  for (const auto& spec : {kP1, kP2})
    for (unsigned a = 0; a <= 3; ++a)
      for (unsigned b = 0; a + b <= 5; ++b) {
        const SimplexSpec s{spec.constraint, spec.bound, {a, b}};
        for (long k = 0; k <= 8; ++k) {
          CHECK(weighted_simplex_count(s, k, false) == brute_simplex(s, k, false));
          CHECK(weighted_simplex_count(s, k, true) == brute_simplex(s, k, true));
        }
      }
}

TEST_CASE("Ehrhart polynomiality") {
  // vol(P1) = 1, vol(P2) = 1/2
  for (auto [spec, vol] : {std::pair{kP1, Rational(1)}, {kP2, make_rational(1, 2)}}) {
    std::vector<Node> nodes;
    for (long k = 1; k <= 3; ++k) nodes.emplace_back(k, weighted_simplex_count(spec, k, false));
    const UniPolynomial p = interpolate_univariate(nodes);
    CHECK(p.degree() == 2);
    CHECK(p.coefficient(2) == vol);
    for (long k = 1; k <= 12; ++k) CHECK(p.evaluate(k) == weighted_simplex_count(spec, k, false));
  }
}

TEST_CASE("weighted Ehrhart reciprocity") {
  for (const auto& spec : {kP1, kP2})
    for (unsigned a = 0; a <= 5; ++a)
      for (unsigned b = 0; a + b <= 5; ++b) {
        const SimplexSpec s{spec.constraint, spec.bound, {a, b}};
        const unsigned deg = a + b + 2;
        std::vector<Node> nodes;
        for (long k = 0; k <= static_cast<long>(deg); ++k) nodes.emplace_back(k, weighted_simplex_count(s, k, false));
        const UniPolynomial closed = interpolate_univariate(nodes);
        const Rational sign = (a + b + 2) % 2 == 0 ? 1 : -1;
        for (long k = 1; k <= 10; ++k)
          CHECK(weighted_simplex_count(s, k, true) == sign * closed.evaluate(Rational(-k)));
      }
}
