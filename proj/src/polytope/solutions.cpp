#include "moduli/polytope/polytope.hpp"

#include "moduli/errors.hpp"


namespace moduli {

namespace {

struct Column {
  int first;
  int second;  // == first when the edge runs twice along one boundary
};

std::vector<Column> columns_of(const IncidenceSystem& sys) {
  std::vector<Column> cols;
  for (std::size_t e = 0; e < sys.cols(); ++e) {
    std::vector<int> rows;
    for (std::size_t i = 0; i < sys.rows(); ++i) {
      const int a = sys.matrix[i][e];
      if (a < 0 || a > 2) throw RefusalError("incidence entries must lie in {0,1,2}");
      for (int k = 0; k < a; ++k) rows.push_back(static_cast<int>(i));
    }
    if (rows.size() != 2) throw RefusalError("incidence column " + std::to_string(e) + " does not sum to 2");
    cols.push_back({rows[0], rows[1]});
  }
  return cols;
}

// Depth-first over edges; `need` holds the least each row must still absorb
// (every remaining x_e >= 1), which bounds the current edge from above.
template <typename Visit>
void search(const std::vector<Column>& cols, std::vector<std::int64_t>& residual,
            std::vector<std::int64_t>& need, LengthVector& x, std::size_t e, Visit& visit) {
  if (e == cols.size()) {
    for (auto r : residual)
      if (r != 0) return;
    visit(x);
    return;
  }
  const auto [r1, r2] = cols[e];
  std::int64_t hi;
  if (r1 == r2) {
    need[r1] -= 2;
    hi = (residual[r1] - need[r1]) / 2;
  } else {
    --need[r1];
    --need[r2];
    hi = std::min(residual[r1] - need[r1], residual[r2] - need[r2]);
  }
  for (std::int64_t v = 1; v <= hi; ++v) {
    residual[r1] -= v;
    residual[r2] -= v;
    x[e] = v;
    search(cols, residual, need, x, e + 1, visit);
    residual[r1] += v;
    residual[r2] += v;
  }
  if (r1 == r2) need[r1] += 2;
  else {
    ++need[r1];
    ++need[r2];
  }
}

template <typename Visit>
void for_each_solution(const IncidenceSystem& sys, std::span<const std::int64_t> b, Visit&& visit) {
  if (b.size() != sys.rows()) throw RefusalError("boundary vector length does not match incidence rows");
  std::int64_t total = 0;
  for (auto v : b) {
    if (v < 0) throw RefusalError("boundary lengths must be nonnegative");
    total += v;
  }
  if (total % 2 != 0) return;  // columns sum to 2
  const auto cols = columns_of(sys);
  std::vector<std::int64_t> residual(b.begin(), b.end());
  std::vector<std::int64_t> need(sys.rows(), 0);
  for (const auto& c : cols) {
    ++need[c.first];
    ++need[c.second];
  }
  for (std::size_t i = 0; i < need.size(); ++i)
    if (need[i] > residual[i]) return;
  LengthVector x(cols.size(), 0);
  search(cols, residual, need, x, 0, visit);
}

}  // namespace

Integer count_solutions(const IncidenceSystem& system, std::span<const std::int64_t> b) {
  unsigned long count = 0;
  auto visit = [&](const LengthVector&) { ++count; };
  for_each_solution(system, b, visit);
  return Integer(count);
}

SolutionSet enumerate_solutions(const IncidenceSystem& system, std::span<const std::int64_t> b) {
  SolutionSet out{system, LengthVector(b.begin(), b.end()), {}};
  auto visit = [&](const LengthVector& x) { out.solutions.push_back(x); };
  for_each_solution(system, b, visit);
  return out;
}

nlohmann::json to_json(const SolutionSet& set) {
  return {{"A", set.system.matrix}, {"b", set.b}, {"solutions", set.solutions}};
}

}  // namespace moduli
