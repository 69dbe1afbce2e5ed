#include "dyncore/roughset.hpp"

#include <algorithm>
#include <map>

#include "dyncore/errors.hpp"

namespace dyncore {

namespace {

void check_attrs(const SubSystem& table, AttrSet attrs) {
  if (!attrs.is_subset_of(table.parent().all_attributes())) {
    throw DomainError("attribute set references attributes outside C");
  }
}

/// Class id (in first-occurrence order) for every object of `table`,
/// positionally aligned with table.objects().
std::vector<std::size_t> class_ids(const SubSystem& table, AttrSet attrs,
                                   std::size_t& num_classes) {
  const auto& sys = table.parent();
  const auto idx = attrs.indices();
  std::map<std::vector<ValueCode>, std::size_t> seen;
  std::vector<std::size_t> ids;
  ids.reserve(table.size());
  std::vector<ValueCode> key(idx.size());
  for (ObjectIndex row : table.objects()) {
    for (std::size_t k = 0; k < idx.size(); ++k) key[k] = sys.value(row, idx[k]);
    auto [it, inserted] = seen.try_emplace(key, seen.size());
    ids.push_back(it->second);
  }
  num_classes = seen.size();
  return ids;
}

}  // namespace

Partition condition_classes(const SubSystem& table, AttrSet attrs) {
  check_attrs(table, attrs);
  std::size_t n = 0;
  const auto ids = class_ids(table, attrs, n);
  Partition p;
  p.blocks.resize(n);
  const auto objects = table.objects();
  for (std::size_t i = 0; i < objects.size(); ++i) {
    p.blocks[ids[i]].push_back(objects[i]);
  }
  return p;
}

bool GeneralizedDecision::consistent() const {
  return std::all_of(decisions.begin(), decisions.end(),
                     [](const auto& d) { return d.size() == 1; });
}

GeneralizedDecision generalized_decision(const SubSystem& table) {
  GeneralizedDecision g;
  g.classes = condition_classes(table, table.parent().all_attributes());
  g.decisions.reserve(g.classes.blocks.size());
  for (const auto& block : g.classes.blocks) {
    std::vector<ValueCode> ds;
    for (ObjectIndex row : block) ds.push_back(table.parent().decision(row));
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    g.decisions.push_back(std::move(ds));
  }
  return g;
}

std::vector<ObjectIndex> positive_region(const SubSystem& table, AttrSet attrs) {
  const auto classes = condition_classes(table, attrs);
  std::vector<ObjectIndex> pos;
  for (const auto& block : classes.blocks) {
    const ValueCode d = table.parent().decision(block.front());
    const bool pure = std::all_of(block.begin(), block.end(), [&](ObjectIndex r) {
      return table.parent().decision(r) == d;
    });
    if (pure) pos.insert(pos.end(), block.begin(), block.end());
  }
  std::sort(pos.begin(), pos.end());
  return pos;
}

DiscernibilityMatrix discernibility_matrix(const SubSystem& table,
                                           Execution exec) {
  const auto& sys = table.parent();
  const auto objects = table.objects();
  const std::size_t n = objects.size();

  // Generalized decision per condition class, interned to an id, plus a
  // positive-region flag; both looked up per object below.
  std::size_t num_classes = 0;
  const auto cls = class_ids(table, sys.all_attributes(), num_classes);
  std::vector<std::vector<ValueCode>> class_decisions(num_classes);
  for (std::size_t i = 0; i < n; ++i) {
    class_decisions[cls[i]].push_back(sys.decision(objects[i]));
  }
  std::vector<std::size_t> class_decision_id(num_classes);
  std::vector<char> class_in_pos(num_classes);
  std::map<std::vector<ValueCode>, std::size_t> interned;
  for (std::size_t c = 0; c < num_classes; ++c) {
    auto& ds = class_decisions[c];
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    class_decision_id[c] = interned.try_emplace(ds, interned.size()).first->second;
    class_in_pos[c] = ds.size() == 1;
  }
  std::vector<std::size_t> decision_id(n);
  std::vector<char> in_pos(n);
  for (std::size_t i = 0; i < n; ++i) {
    decision_id[i] = class_decision_id[cls[i]];
    in_pos[i] = class_in_pos[cls[i]];
  }

  const std::size_t width = sys.num_attributes();
  std::vector<std::vector<DiscernibilityCell>> rows(n);
  const bool parallel = exec == Execution::parallel;
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (std::size_t i = 0; i < n; ++i) {
    const auto xi = sys.row(objects[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (decision_id[i] == decision_id[j]) continue;
      if (!in_pos[i] && !in_pos[j]) continue;
      const auto xj = sys.row(objects[j]);
      std::uint64_t mask = 0;
      for (std::size_t a = 0; a < width; ++a) {
        if (xi[a] != xj[a]) mask |= std::uint64_t{1} << a;
      }
      rows[i].push_back({objects[i], objects[j], AttrSet::from_mask(mask)});
    }
  }

  DiscernibilityMatrix m;
  for (auto& r : rows) {
    m.cells.insert(m.cells.end(), r.begin(), r.end());
  }
  return m;
}

bool is_reduct(const SubSystem& table, AttrSet attrs) {
  check_attrs(table, attrs);
  const auto target = positive_region(table, table.parent().all_attributes());
  if (positive_region(table, attrs) != target) return false;
  for (std::size_t a : attrs.indices()) {
    AttrSet smaller = attrs;
    smaller.erase(a);
    if (positive_region(table, smaller) == target) return false;
  }
  return true;
}

}  // namespace dyncore
