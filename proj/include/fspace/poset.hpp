#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fspace {

using PointId = std::string;
using IndexPair = std::pair<std::size_t, std::size_t>;

/**
 * A finite T0 space, stored as the Hasse diagram of its specialization order.
 *
 * Points keep their insertion order. `covers()` holds index pairs (x, y) with
 * x covered by y, sorted. A Poset is immutable once built; all factories
 * validate their input and throw std::invalid_argument on malformed data.
 */
class Poset {
public:
  Poset() = default;

  /// Builds from an explicit covering relation. Rejects self-loops, cycles,
  /// duplicate points, unknown identifiers and non-covering (transitive) pairs.
  static Poset from_covers(std::vector<PointId> points,
                           const std::vector<std::pair<PointId, PointId>> &covers);

  /// Builds from any set of strict relations x < y; the order is the
  /// transitive closure and the stored covers are its transitive reduction.
  static Poset from_relations(std::vector<PointId> points,
                              const std::vector<std::pair<PointId, PointId>> &relations);

  /// Index-based variant of from_relations.
  static Poset from_index_relations(std::vector<PointId> points,
                                    const std::vector<IndexPair> &relations);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  const std::vector<PointId> &points() const { return points_; }
  const std::vector<IndexPair> &covers() const { return covers_; }
  const PointId &point(std::size_t i) const { return points_.at(i); }

  std::optional<std::size_t> find(std::string_view id) const;
  /// Throws std::out_of_range("no such point: ...") for unknown identifiers.
  std::size_t index_of(std::string_view id) const;

  std::span<const std::size_t> upper_covers(std::size_t i) const { return up_.at(i); }
  std::span<const std::size_t> lower_covers(std::size_t i) const { return down_.at(i); }

  /// Length of the longest chain ending at point i; minimal points have level 1.
  std::size_t level(std::size_t i) const { return level_.at(i); }
  std::size_t level_of(std::string_view id) const { return level(index_of(id)); }
  /// Number of Hasse levels (0 for the empty poset).
  std::size_t height() const { return height_; }

  /// Strict order x < y, answered by a search over upper covers.
  bool less(std::size_t x, std::size_t y) const;

  /// Same points in the same order and the same covering pairs.
  friend bool operator==(const Poset &, const Poset &) = default;

private:
  Poset(std::vector<PointId> points, std::vector<IndexPair> covers);

  std::vector<PointId> points_;
  std::vector<IndexPair> covers_;
  std::unordered_map<PointId, std::size_t> index_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
  std::vector<std::size_t> level_;
  std::size_t height_ = 0;
};

/// Number of covering pairs incident to the point.
std::size_t hasse_degree(const Poset &p, std::string_view id);

struct BeatReport {
  std::vector<PointId> up_beats;   ///< exactly one upper cover
  std::vector<PointId> down_beats; ///< exactly one lower cover

  bool empty() const { return up_beats.empty() && down_beats.empty(); }
};

BeatReport beat_points(const Poset &p);

/// No up-beat or down-beat points.
bool is_minimal(const Poset &p);

/// Removes one point and returns the induced subposet.
Poset remove_point(const Poset &p, std::size_t i);

/// Strips beat points one at a time, always the earliest in point order,
/// until the space is minimal.
Poset core(const Poset &p);

/// A level- and cover-preserving bijection P -> Q, indexed by P's point
/// indices, or nullopt when the posets are not isomorphic.
std::optional<std::vector<std::size_t>> isomorphic(const Poset &p, const Poset &q);

} // namespace fspace
