#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "igq/bbw/weights.hpp"

namespace igq::bbw {

/// scalar_mult copies of S^sym U*(twist), placed in complex degree hom_shift.
struct BundleTerm {
  int sym = 0;
  int twist = 0;
  std::int64_t scalar_mult = 1;
  int hom_shift = 0;

  std::int64_t rank() const { return scalar_mult * (sym + 1); }
  std::string str() const;
  friend bool operator==(const BundleTerm&, const BundleTerm&) = default;
};

/// Formal sum of bundle terms; duplicates merged, sorted by (hom_shift, twist, sym).
class BundleSum {
 public:
  BundleSum() = default;
  explicit BundleSum(std::vector<BundleTerm> terms);

  const std::vector<BundleTerm>& terms() const& { return terms_; }
  std::vector<BundleTerm> terms() && { return std::move(terms_); }
  bool empty() const { return terms_.empty(); }
  std::int64_t rank() const;
  BundleSum twisted(int by) const;
  BundleSum shifted(int by) const;
  std::string str() const;

  friend bool operator==(const BundleSum&, const BundleSum&) = default;

 private:
  std::vector<BundleTerm> terms_;
};

/// Hom(S^a U*(c), S^b U*(d)) split into irreducibles.
BundleSum hom_bundle(int a, int c, int b, int d);

/// Sparse degree -> dimension map. For complexes the map holds the E1 totals;
/// they are the Ext dimensions when conclusive.
struct ExtProfile {
  std::map<int, std::int64_t> dims;
  bool conclusive = true;
  std::int64_t euler = 0;

  std::int64_t total() const;
  bool is_zero() const { return dims.empty(); }
  /// "0" or "{d:dim, ...}".
  std::string str() const;
  friend bool operator==(const ExtProfile&, const ExtProfile&) = default;
};

/// Ext^*(S^a U*(c), S^b U*(d)).
ExtProfile ext_bundles(const Space& space, int a, int c, int b, int d);

/// Ext^* between complexes, from the E1 page of the Hom double complex.
/// Conclusive iff no two consecutive total degrees are occupied.
ExtProfile ext_complexes(const Space& space, const BundleSum& source, const BundleSum& target);

/// Serre partner profile: dims of Ext^{dim-d}(target, source(-index)), re-indexed by d.
ExtProfile serre_partner(const Space& space, const BundleSum& source, const BundleSum& target);

enum class Side { Left, Right };

/// Terms T_0..T_{2k-1} of the long exact sequence on G(2,2k) (and its
/// restriction to IG(2,2k)); T_t sits in hom_shift t.
BundleSum long_exact_terms(int k);

/// Resolution of F_i: Left is T_0..T_{i-1} ending in degree 0, Right is
/// T_i..T_{2k-1} starting in degree 0.
BundleSum f_complex(int i, int k, Side side);

/// Ext^*(F_i(twist_i), F_j(twist_j)) with the Right resolution on the source
/// and the Left one on the target.
ExtProfile ext_f_pair(const Space& space, int i, int j, int twist_i, int twist_j);

/// k for spaces carrying the long exact sequence: G(2,2k) and IG(2,2k).
int sequence_k(const Space& space);

}  // namespace igq::bbw
