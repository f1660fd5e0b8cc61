#include "netfuzz/cube.hpp"

#include <algorithm>

namespace netfuzz {

namespace {

auto lower_bound_net(const std::vector<std::pair<NetId, bool>>& lits, NetId net) {
  return std::lower_bound(lits.begin(), lits.end(), net,
                          [](const auto& lit, NetId n) { return lit.first < n; });
}

}  // namespace

std::optional<bool> Cube::get(NetId net) const {
  const auto it = lower_bound_net(lits_, net);
  if (it != lits_.end() && it->first == net) return it->second;
  return std::nullopt;
}

void Cube::set(NetId net, bool value) {
  const auto it = std::lower_bound(lits_.begin(), lits_.end(), net,
                                   [](const auto& lit, NetId n) { return lit.first < n; });
  if (it != lits_.end() && it->first == net)
    it->second = value;
  else
    lits_.insert(it, {net, value});
}

void Cube::erase(NetId net) {
  const auto it = std::lower_bound(lits_.begin(), lits_.end(), net,
                                   [](const auto& lit, NetId n) { return lit.first < n; });
  if (it != lits_.end() && it->first == net) lits_.erase(it);
}

bool cubes_conflict(const Cube& a, const Cube& b) {
  auto ia = a.literals().begin();
  auto ib = b.literals().begin();
  while (ia != a.literals().end() && ib != b.literals().end()) {
    if (ia->first < ib->first)
      ++ia;
    else if (ib->first < ia->first)
      ++ib;
    else {
      if (ia->second != ib->second) return true;
      ++ia;
      ++ib;
    }
  }
  return false;
}

bool cube_subsumes(const Cube& big, const Cube& small) {
  for (const auto& [net, value] : small.literals()) {
    const auto got = big.get(net);
    if (!got || *got != value) return false;
  }
  return true;
}

Cube cube_union(const Cube& a, const Cube& b) {
  Cube out = a;
  for (const auto& [net, value] : b.literals()) out.set(net, value);
  return out;
}

}  // namespace netfuzz
