#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace promo {

/// A feature value is numeric or categorical. Missing features are simply
/// absent from the profile map.
using FeatureValue = std::variant<double, std::string>;

struct UserProfile {
  std::string user_id;
  std::map<std::string, FeatureValue> features;

  /// nullptr when the feature is missing.
  const FeatureValue* find(std::string_view name) const;
  /// Numeric value, or nullopt when missing / non-numeric / non-finite.
  std::optional<double> numeric(std::string_view name) const;
  /// Categorical value, or nullopt when missing / non-categorical.
  std::optional<std::string_view> categorical(std::string_view name) const;
};

enum class ItemKind { kPromoted, kRegular };

struct Item {
  std::string item_id;
  ItemKind kind = ItemKind::kRegular;
  std::string label;
};

/// The ordered recommendation list. Positions 1..4 are visible without a
/// swipe; the list never exceeds 15 entries and promoted entries always
/// precede regular ones (assemble_slate enforces both).
struct Slate {
  static constexpr std::size_t kCapacity = 15;
  static constexpr std::size_t kVisibleCount = 4;

  std::vector<std::string> entries;

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
};

/// Concatenates promoted before regular, preserving each group's input order,
/// truncated to `capacity`. Throws ValidationError on a duplicate item id
/// (within or across groups) or a capacity outside 1..15.
Slate assemble_slate(const std::vector<std::string>& promoted,
                     const std::vector<std::string>& regular,
                     std::size_t capacity = Slate::kCapacity);

/// First min(4, size) entries.
std::vector<std::string> visible_prefix(const Slate& slate);

struct ScoredItem {
  std::string item_id;
  std::optional<double> score;  // calibrated probability when available
};

/// Display order among promoted items: scored items first, descending score,
/// then unscored items in their input order; ties broken by item_id.
std::vector<std::string> order_promoted(std::vector<ScoredItem> items);

/// Catalog file: CSV with columns item_id,kind,label. kind is "Promoted" or
/// "Regular". Duplicate ids are rejected.
std::vector<Item> load_catalog(const std::filesystem::path& path);

}  // namespace promo
