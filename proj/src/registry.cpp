#include "permstat/registry.hpp"

#include <algorithm>

#include "permstat/classical.hpp"
#include "permstat/fisher_yates.hpp"

namespace permstat {

std::string_view to_string(StatKind kind) {
  switch (kind) {
    case StatKind::mahonian: return "mahonian";
    case StatKind::eulerian: return "eulerian";
    case StatKind::partial: return "partial";
  }
  return "?";
}

Registry::Registry(std::vector<StatisticDescriptor> entries)
    : entries_(std::move(entries)) {
  for (size_t i = 0; i < entries_.size(); ++i)
    for (size_t k = i + 1; k < entries_.size(); ++k)
      if (entries_[i].name == entries_[k].name)
        throw Error(Errc::malformed, "duplicate statistic '" + entries_[i].name + "'");
}

bool Registry::contains(std::string_view name) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const auto& e) { return e.name == name; });
}

const StatisticDescriptor& Registry::at(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.name == name) return e;
  throw Error(Errc::unknown_name,
              "unknown statistic '" + std::string(name) + "'");
}

std::vector<std::string> Registry::names(StatKind kind) const {
  std::vector<std::string> out;
  for (const auto& e : entries_)
    if (e.kind == kind) out.push_back(e.name);
  return out;
}

const Registry& default_registry() {
  static const Registry registry = [] {
    using P = const Permutation&;
    std::vector<StatisticDescriptor> e;
    auto add = [&](std::string name, StatKind kind, std::string variant,
                   std::function<std::int64_t(P)> f) {
      e.push_back({std::move(name), kind, std::move(variant), std::move(f)});
    };

    add("stat", StatKind::mahonian, "", [](P p) { return stat(p); });
    add("stati", StatKind::mahonian, "", [](P p) { return stati(p); });
    add("inv", StatKind::mahonian, "", [](P p) { return inv(p); });
    add("maj", StatKind::mahonian, "",
        [](P p) { return descent_partials(p).maj; });
    add("den", StatKind::mahonian, "",
        [](P p) { return composite(Composite::den, p); });
    add("mak_val", StatKind::mahonian, "value-based descent bottom",
        [](P p) { return composite(Composite::mak_val, p); });
    add("mad_val", StatKind::mahonian, "value-based descent bottom",
        [](P p) { return composite(Composite::mad_val, p); });
    add("hag", StatKind::mahonian, "",
        [](P p) { return composite(Composite::hag, p); });

    add("des", StatKind::eulerian, "",
        [](P p) { return descent_partials(p).des; });
    add("exc", StatKind::eulerian, "",
        [](P p) { return excedance_partials(p).exc; });
    add("ska", StatKind::eulerian, "", [](P p) { return ska(p); });

    add("mak_idx", StatKind::partial, "index-based descent bottom (not Mahonian)",
        [](P p) { return composite(Composite::mak_idx, p); });
    add("mad_idx", StatKind::partial, "index-based descent bottom (not Mahonian)",
        [](P p) { return composite(Composite::mad_idx, p); });
    add("dtop", StatKind::partial, "",
        [](P p) { return descent_partials(p).dtop; });
    add("dbot_idx", StatKind::partial, "",
        [](P p) { return descent_partials(p).dbot_idx; });
    add("dbot_val", StatKind::partial, "",
        [](P p) { return descent_partials(p).dbot_val; });
    add("ddif_idx", StatKind::partial, "",
        [](P p) { return descent_partials(p).ddif_idx; });
    add("ddif_val", StatKind::partial, "",
        [](P p) { return descent_partials(p).ddif_val; });
    add("ebot", StatKind::partial, "",
        [](P p) { return excedance_partials(p).ebot; });
    add("etop", StatKind::partial, "",
        [](P p) { return excedance_partials(p).etop; });
    add("edif", StatKind::partial, "",
        [](P p) { return excedance_partials(p).edif; });
    add("res", StatKind::partial, "", [](P p) { return res(p); });
    add("ine", StatKind::partial, "", [](P p) { return ine(p); });
    add("hage", StatKind::partial, "", [](P p) { return hage(p); });

    return Registry(std::move(e));
  }();
  return registry;
}

}  // namespace permstat
