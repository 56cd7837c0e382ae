#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "igq/bbw/ext.hpp"

namespace igq::bbw {

/// S^sym U*(twist), sitting in block `block` of a Lefschetz collection.
struct CollectionObject {
  int sym = 0;
  int twist = 0;
  int block = 0;
  std::string str() const;
};

/// Support partition of the collection S^{i-1}U* on the space.
std::vector<int> support_partition(const Space& space);

/// Objects block by block: block j holds S^0U*(j), ..., S^{lambda_j - 1}U*(j).
std::vector<CollectionObject> lefschetz_collection(const Space& space);

struct PairViolation {
  std::size_t from = 0;
  std::size_t to = 0;
  ExtProfile profile;
};

struct CollectionReport {
  std::size_t objects = 0;
  std::size_t pairs_checked = 0;
  std::vector<std::size_t> non_exceptional;
  std::vector<PairViolation> violations;
  /// Pairs (including self-pairs) whose Serre partner profile disagrees.
  std::size_t serre_mismatches = 0;
  bool ok() const { return non_exceptional.empty() && violations.empty() && serre_mismatches == 0; }
};

/// Every object exceptional, every Ext from a later object to an earlier one zero.
CollectionReport verify_collection(const Space& space);

struct OrthogonalityEntry {
  CollectionObject object;
  ExtProfile profile;
};

struct OrthogonalityReport {
  int i = 0;
  std::vector<OrthogonalityEntry> entries;
  bool ok() const;
};

/// Ext(G, F_i(k-i)) for every G in the blocks A, A(1), ..., A(k-i), where
/// A = <O, U*, ..., S^{k-2}U*>, against the Left resolution.
OrthogonalityReport check_f_orthogonality(const Space& space, int i);

/// Alternating sums of chi(T_t(j)) over the long exact sequence, for j = 0..2k-1.
std::vector<std::int64_t> sequence_euler_sums(const Space& space);

/// Ext profile equals its Serre partner profile.
bool serre_consistent(const Space& space, const BundleSum& source, const BundleSum& target);

}  // namespace igq::bbw
