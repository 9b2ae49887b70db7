#include "moduli/recursion/symbolic.hpp"

#include "moduli/errors.hpp"

#include <fstream>
#include <sstream>
#include <unistd.h>

namespace moduli {

namespace {

std::filesystem::path cache_file(const std::filesystem::path& dir, int g, int n) {
  return dir / ("N_" + std::to_string(g) + "_" + std::to_string(n) + ".json");
}

}  // namespace

bool FamilyStore::contains(int g, int n) const {
  std::lock_guard lock(mu_);
  return families_.contains({g, n});
}

void FamilyStore::put(LatticeCountPolynomial family) {
  std::lock_guard lock(mu_);
  const std::pair key{family.g, family.n};
  families_.insert_or_assign(key, std::make_unique<const LatticeCountPolynomial>(std::move(family)));
}

const LatticeCountPolynomial& FamilyStore::get(int g, int n) {
  require_stable(g, n);
  std::lock_guard lock(mu_);
  if (auto it = families_.find({g, n}); it != families_.end()) return *it->second;
  std::optional<LatticeCountPolynomial> family = load(g, n);
  if (!family) {
    family = symbolic_step(g, n, *this);
    save(*family);
  }
  auto [it, inserted] =
      families_.try_emplace({g, n}, std::make_unique<const LatticeCountPolynomial>(std::move(*family)));
  return *it->second;
}

std::optional<LatticeCountPolynomial> FamilyStore::load(int g, int n) {
  if (!cache_dir_) return std::nullopt;
  const auto path = cache_file(*cache_dir_, g, n);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    auto family = family_from_json(nlohmann::json::parse(in));
    if (family.g != g || family.n != n) throw RefusalError("cache file holds a different (g,n)");
    return family;
  } catch (const std::exception&) {
    ++rejected_;
    return std::nullopt;
  }
}

void FamilyStore::save(const LatticeCountPolynomial& family) const {
  if (!cache_dir_) return;
  std::error_code ec;
  std::filesystem::create_directories(*cache_dir_, ec);
  if (ec) return;  // a read-only cache only costs recomputation
  const auto path = cache_file(*cache_dir_, family.g, family.n);
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << to_json(family).dump() << "\n";
    if (!out) return;
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace moduli
