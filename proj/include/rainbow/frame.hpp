#pragma once

#include "rainbow/core.hpp"

namespace rainbow {

/// The fixed data of a constructive panconnectivity argument for the pair
/// (x, y): a third vertex z with xz missing from graph `missing`.
///
/// The reduced collection H keeps every graph except `missing`, restricted to
/// V \ {x, y, z}; H_j additionally drops graph j.
struct ProofFrame {
  Vertex x = 0;
  Vertex y = 0;
  Vertex z = 0;
  Color missing = 0;

  Mask removed_vertices() const { return bit(x) | bit(y) | bit(z); }

  SubCollectionView h_view(const GraphCollection& coll) const {
    return restrict(coll, removed_vertices(), bit(missing));
  }

  SubCollectionView hj_view(const GraphCollection& coll, Color j) const {
    return restrict(coll, removed_vertices(), bit(missing) | bit(j));
  }

  friend bool operator==(const ProofFrame&, const ProofFrame&) = default;
};

}  // namespace rainbow
