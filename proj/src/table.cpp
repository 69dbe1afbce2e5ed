#include "dyncore/table.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "dyncore/errors.hpp"

namespace dyncore {

ValueCode ValueDictionary::intern(std::string_view value) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == value) return static_cast<ValueCode>(i);
  }
  values_.emplace_back(value);
  return static_cast<ValueCode>(values_.size() - 1);
}

DecisionSystem::DecisionSystem(
    std::string id, std::vector<std::string> condition_names,
    std::string decision_name,
    std::vector<ValueDictionary> condition_dictionaries,
    ValueDictionary decision_dictionary,
    std::vector<std::vector<ValueCode>> condition_rows,
    std::vector<ValueCode> decisions)
    : id_(std::move(id)),
      condition_names_(std::move(condition_names)),
      decision_name_(std::move(decision_name)),
      condition_dictionaries_(std::move(condition_dictionaries)),
      decision_dictionary_(std::move(decision_dictionary)),
      decisions_(std::move(decisions)) {
  if (decisions_.empty()) throw SchemaError("decision table has no rows");
  if (condition_rows.size() != decisions_.size()) {
    throw SchemaError("row count mismatch between condition and decision");
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : condition_names_) {
    if (!seen.insert(name).second) {
      throw SchemaError("duplicate attribute name '" + name + "'");
    }
  }
  if (seen.count(decision_name_) != 0) {
    throw SchemaError("decision attribute '" + decision_name_ +
                      "' is also a condition attribute");
  }
  if (condition_dictionaries_.size() != condition_names_.size()) {
    throw SchemaError("one dictionary per condition attribute required");
  }
  const std::size_t width = condition_names_.size();
  codes_.reserve(condition_rows.size() * width);
  for (std::size_t r = 0; r < condition_rows.size(); ++r) {
    if (condition_rows[r].size() != width) {
      throw SchemaError("row " + std::to_string(r) + " has " +
                        std::to_string(condition_rows[r].size()) +
                        " condition values, expected " + std::to_string(width));
    }
    for (std::size_t a = 0; a < width; ++a) {
      if (condition_rows[r][a] >= condition_dictionaries_[a].size()) {
        throw SchemaError("code out of dictionary range");
      }
      codes_.push_back(condition_rows[r][a]);
    }
    if (decisions_[r] >= decision_dictionary_.size()) {
      throw SchemaError("decision code out of dictionary range");
    }
  }
}

DecisionSystem DecisionSystem::from_codes(
    const std::vector<std::vector<ValueCode>>& condition_rows,
    const std::vector<ValueCode>& decisions,
    std::vector<std::string> condition_names, std::string decision_name) {
  if (condition_names.empty() && !condition_rows.empty()) {
    for (std::size_t a = 0; a < condition_rows[0].size(); ++a) {
      condition_names.push_back("c" + std::to_string(a));
    }
  }
  std::vector<ValueDictionary> dicts(condition_names.size());
  ValueDictionary decision_dict;
  std::vector<std::vector<ValueCode>> rows;
  rows.reserve(condition_rows.size());
  for (const auto& raw : condition_rows) {
    if (raw.size() != dicts.size()) {
      throw SchemaError("row width " + std::to_string(raw.size()) +
                        " does not match " + std::to_string(dicts.size()) +
                        " attribute names");
    }
    std::vector<ValueCode> coded(raw.size());
    for (std::size_t a = 0; a < raw.size(); ++a) {
      coded[a] = dicts[a].intern(std::to_string(raw[a]));
    }
    rows.push_back(std::move(coded));
  }
  std::vector<ValueCode> coded_decisions;
  coded_decisions.reserve(decisions.size());
  for (ValueCode d : decisions) {
    coded_decisions.push_back(decision_dict.intern(std::to_string(d)));
  }
  return DecisionSystem("codes", std::move(condition_names),
                        std::move(decision_name), std::move(dicts),
                        std::move(decision_dict), std::move(rows),
                        std::move(coded_decisions));
}

bool operator==(const DecisionSystem& a, const DecisionSystem& b) {
  return a.condition_names_ == b.condition_names_ &&
         a.decision_name_ == b.decision_name_ &&
         a.condition_dictionaries_ == b.condition_dictionaries_ &&
         a.decision_dictionary_ == b.decision_dictionary_ &&
         a.codes_ == b.codes_ && a.decisions_ == b.decisions_;
}

SubSystem::SubSystem(std::shared_ptr<const DecisionSystem> parent,
                     std::vector<ObjectIndex> objects)
    : parent_(std::move(parent)), objects_(std::move(objects)) {
  if (!parent_) throw DomainError("subsystem requires a parent system");
  if (objects_.empty()) {
    throw DomainError("a subsystem must have a non-empty universe");
  }
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (objects_[i] >= parent_->num_objects()) {
      throw DomainError("object index " + std::to_string(objects_[i]) +
                        " out of range for " +
                        std::to_string(parent_->num_objects()) + " rows");
    }
    if (i > 0 && objects_[i] <= objects_[i - 1]) {
      throw DomainError("subsystem indices must be strictly increasing");
    }
  }
}

SubSystem SubSystem::whole(std::shared_ptr<const DecisionSystem> parent) {
  if (!parent) throw DomainError("subsystem requires a parent system");
  std::vector<ObjectIndex> all(parent->num_objects());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return SubSystem(std::move(parent), std::move(all));
}

Family::Family(std::vector<SubSystem> members, std::optional<SamplingPlan> plan)
    : members_(std::move(members)), plan_(std::move(plan)) {
  if (members_.empty()) throw DomainError("a family needs at least one member");
  for (const auto& m : members_) {
    if (m.parent_ptr() != members_.front().parent_ptr()) {
      throw DomainError("family members must share one parent system");
    }
  }
}

namespace {

std::vector<std::string_view> split_line(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(line.substr(start));
      break;
    }
    cells.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return cells;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = nl + 1;
  }
  // Trailing blank lines carry no rows.
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

}  // namespace

DecisionSystem parse_decision_table(std::string_view text,
                                    std::string_view decision_column,
                                    std::string id) {
  if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") {
    text.remove_prefix(3);
  }
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("input has no header row");

  const auto header = split_line(lines[0]);
  std::optional<std::size_t> decision_pos;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i].empty()) {
      throw MissingValueError("header column " + std::to_string(i + 1) +
                              " has an empty name");
    }
    if (header[i] == decision_column) {
      if (decision_pos) {
        throw SchemaError("decision column '" + std::string(decision_column) +
                          "' appears twice");
      }
      decision_pos = i;
    }
  }
  if (!decision_pos) {
    throw SchemaError("decision column '" + std::string(decision_column) +
                      "' not found in header");
  }

  std::vector<std::string> names;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i != *decision_pos) names.emplace_back(header[i]);
  }
  std::vector<ValueDictionary> dicts(names.size());
  ValueDictionary decision_dict;
  std::vector<std::vector<ValueCode>> rows;
  std::vector<ValueCode> decisions;

  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto cells = split_line(lines[l]);
    if (cells.size() != header.size()) {
      throw ParseError("line " + std::to_string(l + 1) + " has " +
                       std::to_string(cells.size()) + " cells, header has " +
                       std::to_string(header.size()));
    }
    std::vector<ValueCode> row;
    row.reserve(names.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].empty()) {
        throw MissingValueError("empty cell at line " + std::to_string(l + 1) +
                                ", column '" + std::string(header[i]) +
                                "' (missing values are not supported)");
      }
      if (i == *decision_pos) {
        decisions.push_back(decision_dict.intern(cells[i]));
      } else {
        const std::size_t a = row.size();
        row.push_back(dicts[a].intern(cells[i]));
      }
    }
    rows.push_back(std::move(row));
  }
  return DecisionSystem(std::move(id), std::move(names),
                        std::string(decision_column), std::move(dicts),
                        std::move(decision_dict), std::move(rows),
                        std::move(decisions));
}

std::string write_decision_table(const DecisionSystem& system) {
  std::string out;
  for (const auto& name : system.attribute_names()) {
    out += name;
    out += ',';
  }
  out += system.decision_name();
  out += '\n';
  for (ObjectIndex r = 0; r < system.num_objects(); ++r) {
    for (std::size_t a = 0; a < system.num_attributes(); ++a) {
      out += system.dictionary(a).value(system.value(r, a));
      out += ',';
    }
    out += system.decision_dictionary().value(system.decision(r));
    out += '\n';
  }
  return out;
}

SubSystem make_subsystem(std::shared_ptr<const DecisionSystem> system,
                         std::vector<ObjectIndex> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return SubSystem(std::move(system), std::move(indices));
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::bounded(std::uint64_t n) {
  // 2^64 mod n, computed without 128-bit arithmetic.
  const std::uint64_t rem = (0 - n) % n;
  while (true) {
    const std::uint64_t u = next();
    if (rem == 0 || u < 0 - rem) return u % n;
  }
}

std::vector<ObjectIndex> sample_indices(SplitMix64& rng, std::size_t n,
                                        std::size_t m) {
  std::vector<ObjectIndex> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  for (std::size_t i = 0; i < m; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.bounded(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(m);
  std::sort(pool.begin(), pool.end());
  return pool;
}

Family sample_family(std::shared_ptr<const DecisionSystem> system,
                     const SamplingPlan& plan) {
  if (!system) throw DomainError("sample_family requires a system");
  if (plan.fractions.empty()) {
    throw ParameterError("at least one sampling fraction is required");
  }
  if (plan.samples_per_fraction == 0) {
    throw ParameterError("samples per fraction must be positive");
  }
  for (const auto& f : plan.fractions) {
    if (f.num == 0 || f.num > f.den) {
      throw ParameterError("sampling fraction " + f.to_string() +
                           " outside (0, 1]");
    }
  }
  const std::size_t n = system->num_objects();
  SplitMix64 rng(plan.seed);
  std::vector<SubSystem> members;
  members.reserve(plan.fractions.size() * plan.samples_per_fraction);
  for (const auto& f : plan.fractions) {
    const auto m = static_cast<std::size_t>(ceil_mul(f, n));
    for (std::size_t s = 0; s < plan.samples_per_fraction; ++s) {
      members.emplace_back(system, sample_indices(rng, n, m));
    }
  }
  return Family(std::move(members), plan);
}

}  // namespace dyncore
