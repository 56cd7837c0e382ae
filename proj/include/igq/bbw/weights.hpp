#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace igq::bbw {

/// G(2,m) or IG(2,2k).
class Space {
 public:
  enum class Kind { Grassmannian, Isotropic };

  static Space grassmannian(int m);
  static Space isotropic(int k);

  Kind kind() const { return kind_; }
  int param() const { return param_; }
  int dimension() const;
  int index() const;
  int ambient_dim() const;
  /// Length of the weight vectors fed to Borel-Bott-Weil.
  int rank() const;
  std::string name() const;

  friend bool operator==(const Space&, const Space&) = default;

 private:
  Space(Kind kind, int param) : kind_(kind), param_(param) {}
  Kind kind_;
  int param_;
};

struct CohomologyResult {
  bool vanishes = true;
  int degree = 0;
  std::vector<int> highest_weight;
  std::int64_t rep_dimension = 0;

  static CohomologyResult zero() { return {}; }
  /// (-1)^degree * rep_dimension, or 0.
  std::int64_t euler() const;
};

/// Weyl dimension of the GL(m) irrep with dominant highest weight.
std::int64_t gl_dimension(const std::vector<int>& highest_weight);
/// Weyl dimension of the Sp(2k) irrep with dominant highest weight.
std::int64_t sp_dimension(const std::vector<int>& highest_weight);

/// Cohomology of the homogeneous bundle with weight (w1, w2, 0, ..., 0) on G(2,m).
CohomologyResult bbw_gl(const std::vector<int>& weight, int m);
/// Same on IG(2,2k), weight of length k.
CohomologyResult bbw_sp(const std::vector<int>& weight, int k);

/// Length of the signed permutation sorting v (regular, no zero entries) to a
/// strictly decreasing positive sequence, by adjacent swaps and last-entry sign
/// flips.
int sp_sort_length(std::vector<int> v);
/// Closed-form count #{i<j: v_i<v_j} + #{i<j: v_i+v_j<0} + #{v_i<0}.
int sp_inversion_length(const std::vector<int>& v);

/// Cohomology of S^sym U*(twist) on the space.
CohomologyResult bundle_cohomology(const Space& space, int sym, int twist);

}  // namespace igq::bbw
