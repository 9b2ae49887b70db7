#include "moduli/fatgraph/canonical.hpp"

namespace moduli::detail {

std::vector<int> dart_colors(const FatGraph& g) {
  std::vector<int> colors(g.tau0.size(), 0);
  if (g.boundary_labels.empty()) return colors;
  const auto owner = boundary_of_dart(g);
  for (std::size_t x = 0; x < colors.size(); ++x) colors[x] = g.boundary_labels[owner[x]];
  return colors;
}

std::vector<int> traversal_order(const FatGraph& g, int root) {
  const int size = static_cast<int>(g.tau0.size());
  std::vector<int> number(size, -1);
  std::vector<int> order;
  order.reserve(size);
  number[root] = 0;
  order.push_back(root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int d = order[i];
    for (int next : {g.tau1[d], g.tau0[d]})
      if (number[next] < 0) {
        number[next] = static_cast<int>(order.size());
        order.push_back(next);
      }
  }
  return order;
}

std::string rooted_code(const FatGraph& g, int root, const std::vector<int>& colors) {
  const auto order = traversal_order(g, root);
  std::vector<int> number(g.tau0.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) number[order[i]] = static_cast<int>(i);
  std::string code;
  code.reserve(1 + 3 * order.size());
  code.push_back(static_cast<char>(g.tau0.size()));
  for (int d : order) {
    code.push_back(static_cast<char>(number[g.tau0[d]]));
    code.push_back(static_cast<char>(number[g.tau1[d]]));
    code.push_back(static_cast<char>(colors[d]));
  }
  return code;
}

}  // namespace moduli::detail
