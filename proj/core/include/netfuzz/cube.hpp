#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "netfuzz/types.hpp"

namespace netfuzz {

/// Partial assignment over directly controllable nets (PIs and flip-flop
/// outputs). Unmentioned inputs are don't-care. Literals are kept sorted by
/// net id, so equal cubes compare equal and iteration is deterministic.
class Cube {
public:
  Cube() = default;

  std::optional<bool> get(NetId net) const;

  /// Overwrites an existing literal with the same net.
  void set(NetId net, bool value);

  void erase(NetId net);

  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }

  std::span<const std::pair<NetId, bool>> literals() const { return lits_; }

  friend bool operator==(const Cube&, const Cube&) = default;

private:
  std::vector<std::pair<NetId, bool>> lits_;
};

/// True iff some net is assigned 0 in one cube and 1 in the other.
bool cubes_conflict(const Cube& a, const Cube& b);

/// True iff every literal of `small` appears in `big` with the same value.
bool cube_subsumes(const Cube& big, const Cube& small);

/// Union of compatible cubes; call cubes_conflict first.
Cube cube_union(const Cube& a, const Cube& b);

}  // namespace netfuzz
