#include "moduli/fatgraph/enumerate.hpp"

#include "moduli/fatgraph/canonical.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

namespace moduli {

int min_edges(int g, int n) { return std::max(1, 2 * g + n - 1); }
int max_edges(int g, int n) { return 6 * g - 6 + 3 * n; }

namespace {

// Builds rooted maps in the order the canonical traversal discovers darts,
// so dart ids are traversal numbers and every rooted map appears exactly
// once. Dart i is expanded by choosing tau1(i) then tau0(i), each either a
// fresh dart or an already discovered one with that slot still open.
class RootedMapGenerator {
public:
  RootedMapGenerator(int darts, int vertices, int boundaries)
      : darts_(darts), vertices_(vertices), boundaries_(boundaries),
        tau0_(darts, -1), tau1_(darts, -1), pre0_(darts, -1) {}

  std::vector<UnlabeledClass> run() {
    created_ = 1;
    expand_tau1(0);
    return std::move(found_);
  }

private:
  void expand_tau1(int i) {
    if (i == created_) {
      finish();
      return;
    }
    if (tau1_[i] != -1) {
      expand_tau0(i);
      return;
    }
    if (created_ < darts_) {
      const int fresh = created_++;
      link1(i, fresh);
      expand_tau0(i);
      unlink1(i, fresh);
      --created_;
    }
    for (int e = i + 1; e < created_; ++e) {
      if (tau1_[e] != -1) continue;
      link1(i, e);
      expand_tau0(i);
      unlink1(i, e);
    }
  }

  void expand_tau0(int i) {
    if (created_ < darts_) {
      const int fresh = created_++;
      tau0_[i] = fresh;
      pre0_[fresh] = i;
      expand_tau1(i + 1);
      pre0_[fresh] = -1;
      tau0_[i] = -1;
      --created_;
    }
    int head = i, length = 1;
    while (pre0_[head] != -1) {
      head = pre0_[head];
      ++length;
    }
    for (int e = 0; e < created_; ++e) {
      if (pre0_[e] != -1) continue;
      if (e == head) {
        if (length < 3 || closed_ == vertices_) continue;
        ++closed_;
      }
      tau0_[i] = e;
      pre0_[e] = i;
      expand_tau1(i + 1);
      pre0_[e] = -1;
      tau0_[i] = -1;
      if (e == head) --closed_;
    }
  }

  void link1(int a, int b) {
    tau1_[a] = b;
    tau1_[b] = a;
  }
  void unlink1(int a, int b) {
    tau1_[a] = -1;
    tau1_[b] = -1;
  }

  void finish() {
    if (created_ != darts_ || closed_ != vertices_) return;
    FatGraph g{tau0_, tau1_, {}};
    const auto cycles = boundary_cycles(g);
    if (static_cast<int>(cycles.size()) != boundaries_) return;

    const std::vector<int> colors(darts_, 0);
    const std::string base = detail::rooted_code(g, 0, colors);
    std::vector<int> roots;
    for (int r = 0; r < darts_; ++r) {
      const std::string code = detail::rooted_code(g, r, colors);
      if (code < base) return;  // not the canonical root
      if (code == base) roots.push_back(r);
    }

    const auto owner = boundary_of_dart(g);
    UnlabeledClass cls{g, {}};
    for (int r : roots) {
      // automorphism: dart numbered i from root 0 (i.e. dart i) -> order_r[i]
      const auto order = detail::traversal_order(g, r);
      std::vector<int> action(cycles.size());
      for (std::size_t c = 0; c < cycles.size(); ++c) action[c] = owner[order[cycles[c].front()]];
      cls.boundary_action.push_back(std::move(action));
    }
    found_.push_back(std::move(cls));
  }

  int darts_, vertices_, boundaries_;
  std::vector<int> tau0_, tau1_, pre0_;
  int created_ = 0;
  int closed_ = 0;
  std::vector<UnlabeledClass> found_;
};

// Labelings are maps cycle -> label; an automorphism phi sends labeling L
// to L o phi^{-1}. One representative per orbit, first in lexicographic order.
void add_labelings(const UnlabeledClass& cls, std::vector<EnumeratedGraph>& out) {
  const std::size_t n = cls.boundary_action.front().size();
  int kernel = 0;
  for (const auto& act : cls.boundary_action) {
    bool trivial = true;
    for (std::size_t c = 0; c < n; ++c) trivial &= act[c] == static_cast<int>(c);
    kernel += trivial;
  }
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  std::set<std::vector<int>> seen;
  do {
    if (seen.contains(labels)) continue;
    for (const auto& act : cls.boundary_action) {
      std::vector<int> image(n);
      for (std::size_t c = 0; c < n; ++c) image[act[c]] = labels[c];
      seen.insert(std::move(image));
    }
    FatGraph g = cls.graph;
    g.boundary_labels = labels;
    out.push_back({std::move(g), kernel});
  } while (std::next_permutation(labels.begin(), labels.end()));
}

}  // namespace

std::vector<UnlabeledClass> enumerate_unlabeled(int g, int n, int edges) {
  require_stable(g, n);
  const int vertices = 2 - 2 * g - n + edges;
  if (vertices < 1 || 2 * edges < 3 * vertices) return {};
  if (2 * edges > 255) throw RefusalError("fatgraph enumeration limited to 127 edges");
  return RootedMapGenerator(2 * edges, vertices, n).run();
}

const std::vector<EnumeratedGraph>& enumerate(int g, int n) {
  require_stable(g, n);
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const std::vector<EnumeratedGraph>>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({g, n}); it != cache.end()) return *it->second;
  }
  auto result = std::make_shared<std::vector<EnumeratedGraph>>();
  for (int e = min_edges(g, n); e <= max_edges(g, n); ++e)
    for (const auto& cls : enumerate_unlabeled(g, n, e)) add_labelings(cls, *result);

  std::vector<std::pair<std::string, std::size_t>> keys;
  for (std::size_t i = 0; i < result->size(); ++i) keys.emplace_back(canonical_form((*result)[i].graph), i);
  std::sort(keys.begin(), keys.end());
  std::vector<EnumeratedGraph> sorted;
  sorted.reserve(keys.size());
  for (const auto& [key, i] : keys) sorted.push_back(std::move((*result)[i]));
  *result = std::move(sorted);

  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(std::pair{g, n}, std::move(result));
  return *it->second;
}

}  // namespace moduli
