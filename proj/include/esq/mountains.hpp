#pragma once

// Mountains of a medial axis: the subtrees left after cutting the axis at its
// valley nodes (internal clearance minima). Each mountain is rooted at its
// peak, so every path toward the root has non-decreasing clearance and the
// largest MEC containing q on such a path is found by binary lifting.

#include <unordered_map>
#include <vector>

#include "esq/medial_axis.hpp"

namespace esq {

struct Mountain {
  int peak = -1;
  std::vector<int> nodes;
  std::vector<int> arcs;
  std::vector<int> valleys;  // valley nodes bordering this mountain
};

class MountainForest {
 public:
  static MountainForest build(const MedialAxis& axis);

  const std::vector<Mountain>& mountains() const { return mountains_; }
  int mountain_of_arc(int arc) const { return arc_mountain_[arc]; }
  /// Mountains containing the node (several for a valley).
  const std::vector<int>& mountains_of_node(int node) const { return node_mountains_[node]; }
  bool is_valley(int node) const { return valley_[node]; }
  /// Longest root path over all mountains, in nodes.
  int max_depth() const { return max_depth_; }

  /// Parent toward the peak, or -1 at the peak.
  int parent(int mountain, int node) const;
  /// Nodes from `node` up to the peak.
  std::vector<int> path_to_peak(int mountain, int node) const;
  /// End node of `arc` nearer the peak of its mountain.
  int peakward_end(const MedialAxis& axis, int arc) const;

  /// Largest MEC containing q centered on the path from `start` (an axis
  /// point of the mountain whose MEC contains q) to the peak. Among equal
  /// radii the point nearest the peak wins. Throws PreconditionViolated.
  AxisPoint rising_search(const MedialAxis& axis, int mountain, const AxisPoint& start, Point2 q) const;

  /// The largest MEC containing q over the whole mountain, given any entry
  /// point of the mountain whose MEC contains q.
  AxisPoint mim_query(const MedialAxis& axis, int mountain, const AxisPoint& entry, Point2 q) const {
    return rising_search(axis, mountain, entry, q);
  }

 private:
  struct NodeInfo {
    int parent = -1;
    int depth = 0;
    std::vector<int> up;  // ancestors 2^j steps toward the peak
  };

  std::vector<Mountain> mountains_;
  std::vector<int> arc_mountain_;
  std::vector<std::vector<int>> node_mountains_;
  std::vector<bool> valley_;
  std::vector<std::unordered_map<int, NodeInfo>> info_;
  int max_depth_ = 0;
};

/// Closed-disk test used by all axis searches, with a tolerance scaled to r.
bool mec_contains(const AxisPoint& x, Point2 q);

/// Node of the component of `root` (ignoring removed nodes) whose removal
/// leaves pieces of at most half the component size.
int centroid_of_subtree(const std::vector<std::vector<int>>& adj, int root, const std::vector<char>& removed);

}  // namespace esq
