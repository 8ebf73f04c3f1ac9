#include "promo/domain.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "promo/csv.hpp"
#include "promo/error.hpp"

namespace promo {

const FeatureValue* UserProfile::find(std::string_view name) const {
  auto it = features.find(std::string(name));
  return it == features.end() ? nullptr : &it->second;
}

std::optional<double> UserProfile::numeric(std::string_view name) const {
  const FeatureValue* v = find(name);
  if (!v) return std::nullopt;
  if (const double* d = std::get_if<double>(v); d && std::isfinite(*d)) return *d;
  return std::nullopt;
}

std::optional<std::string_view> UserProfile::categorical(std::string_view name) const {
  const FeatureValue* v = find(name);
  if (!v) return std::nullopt;
  if (const std::string* s = std::get_if<std::string>(v)) return std::string_view(*s);
  return std::nullopt;
}

Slate assemble_slate(const std::vector<std::string>& promoted,
                     const std::vector<std::string>& regular,
                     std::size_t capacity) {
  if (capacity < 1 || capacity > Slate::kCapacity)
    throw ValidationError("assemble_slate: capacity must be in 1.." +
                          std::to_string(Slate::kCapacity));
  std::unordered_set<std::string> seen;
  seen.reserve(promoted.size() + regular.size());
  for (const auto* group : {&promoted, &regular})
    for (const std::string& id : *group)
      if (!seen.insert(id).second)
        throw ValidationError("assemble_slate: duplicate item id '" + id + "'");

  Slate slate;
  slate.entries.reserve(std::min(capacity, promoted.size() + regular.size()));
  for (const std::string& id : promoted) {
    if (slate.entries.size() == capacity) break;
    slate.entries.push_back(id);
  }
  for (const std::string& id : regular) {
    if (slate.entries.size() == capacity) break;
    slate.entries.push_back(id);
  }
  return slate;
}

std::vector<std::string> visible_prefix(const Slate& slate) {
  std::size_t n = std::min(Slate::kVisibleCount, slate.entries.size());
  return {slate.entries.begin(), slate.entries.begin() + n};
}

std::vector<std::string> order_promoted(std::vector<ScoredItem> items) {
  std::stable_sort(items.begin(), items.end(), [](const ScoredItem& a, const ScoredItem& b) {
    if (a.score.has_value() != b.score.has_value()) return a.score.has_value();
    if (!a.score.has_value()) return false;  // unscored pairs keep input order
    if (*a.score != *b.score) return *a.score > *b.score;
    return a.item_id < b.item_id;
  });
  std::vector<std::string> out;
  out.reserve(items.size());
  for (auto& it : items) out.push_back(std::move(it.item_id));
  return out;
}

std::vector<Item> load_catalog(const std::filesystem::path& path) {
  csv::Table t = csv::read_file(path);
  int id_col = t.column("item_id");
  int kind_col = t.column("kind");
  int label_col = t.column("label");
  if (id_col < 0 || kind_col < 0 || label_col < 0)
    throw IoError("catalog " + path.string() + ": header must contain item_id,kind,label");

  std::vector<Item> items;
  std::unordered_set<std::string> seen;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    Item item;
    item.item_id = row[id_col];
    item.label = row[label_col];
    const std::string& kind = row[kind_col];
    if (kind == "Promoted") item.kind = ItemKind::kPromoted;
    else if (kind == "Regular") item.kind = ItemKind::kRegular;
    else
      throw IoError("catalog " + path.string() + " row " + std::to_string(r + 2) +
                    ": kind must be Promoted or Regular, got '" + kind + "'");
    if (item.item_id.empty())
      throw IoError("catalog " + path.string() + " row " + std::to_string(r + 2) +
                    ": empty item_id");
    if (!seen.insert(item.item_id).second)
      throw IoError("catalog " + path.string() + ": duplicate item_id '" + item.item_id + "'");
    items.push_back(std::move(item));
  }
  return items;
}

}  // namespace promo
