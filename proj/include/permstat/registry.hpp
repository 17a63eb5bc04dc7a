#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

enum class StatKind { mahonian, eulerian, partial };

std::string_view to_string(StatKind kind);

struct StatisticDescriptor {
  std::string name;
  StatKind kind = StatKind::partial;
  std::string variant;  // e.g. "index-based descent bottom (not Mahonian)"
  std::function<std::int64_t(const Permutation&)> eval;
};

/// Immutable name -> evaluator table. Names are the stable identifiers used
/// by the CLI and JSON output.
class Registry {
 public:
  explicit Registry(std::vector<StatisticDescriptor> entries);

  const std::vector<StatisticDescriptor>& entries() const { return entries_; }

  bool contains(std::string_view name) const;

  /// Throws Errc::unknown_name.
  const StatisticDescriptor& at(std::string_view name) const;

  std::int64_t evaluate(std::string_view name, const Permutation& p) const {
    return at(name).eval(p);
  }

  std::vector<std::string> names(StatKind kind) const;

 private:
  std::vector<StatisticDescriptor> entries_;
};

/// All statistics of the engine:
///   mahonian: stat, stati, inv, maj, den, mak_val, mad_val, hag
///   eulerian: des, exc, ska
///   partial:  mak_idx, mad_idx (flagged non-Mahonian variants), dtop,
///             dbot_idx, dbot_val, ddif_idx, ddif_val, ebot, etop, edif,
///             res, ine, hage
const Registry& default_registry();

}  // namespace permstat
