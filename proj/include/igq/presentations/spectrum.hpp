#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "igq/presentations/presentation.hpp"

namespace igq::presentations {

struct HomomorphismReport {
  int n = 0;
  bool quantum = false;
  bool ok = false;
  /// Sign of the q-substitution that made every image vanish (0 if none).
  int lambda = 0;
  std::size_t dim_one = 0;  // quotient dimension of the I-presentation
  std::size_t dim_two = 0;  // quotient dimension of the II-presentation
  /// Normal forms of the images for each tried sign, in generator order.
  std::vector<std::vector<std::string>> residues;
};

/// Maps the I-generators through sigma_in_ab and reduces them modulo the
/// II-basis; the quantum case searches q -> +q, then q -> -q.
HomomorphismReport verify_homomorphism(int n, bool quantum);

struct SpectrumReport {
  std::size_t total_dim = 0;
  std::size_t tangent_dim_origin = 0;
  std::size_t local_length_origin = 0;
  std::size_t offorigin_dim = 0;
  std::size_t offorigin_distinct_points = 0;

  /// Whether the linear-form projection separated all off-origin points.
  bool projection_verified = false;
  std::vector<long> projection_coefficients;
  std::size_t projection_attempts = 0;
  /// Length of the origin's component computed without saturation, and
  /// whether it matches total_dim - offorigin_dim.
  std::size_t origin_length_direct = 0;
  bool saturation_guard = false;
  std::string eliminant;

  bool operator==(const SpectrumReport&) const = default;
};

/// dim Q[x]/(I + (x_1^N, ..., x_k^N)): the length of the origin's component
/// once N reaches that length.
std::size_t origin_length(const Ideal& ideal, std::size_t exponent);

/// Quantum II-presentation at q = 1 split into its origin and off-origin parts.
SpectrumReport decompose_spectrum(int n);

/// sum_i c_i x_i.
Polynomial linear_form(const RingPtr& ring, const std::vector<long>& coefficients);

/// Distinct values of the linear form on the (zero-dimensional) ideal's
/// points: distinct roots of the eliminant of w - l, obtained as the minimal
/// polynomial of l on the quotient. `eliminant` receives its text.
std::size_t count_points_by_projection(const Ideal& ideal, const std::vector<long>& coefficients,
                                       std::string* eliminant = nullptr);

/// `count` terms of 1, 2, 3, 5, 7, 11, ... starting `attempt` places in.
std::vector<long> linear_form_coefficients(std::size_t count, std::size_t attempt);

struct SubstitutionCount {
  std::size_t squarefree_degree = 0;
  std::size_t excluded_origin = 0;
  std::size_t excluded_second_zero = 0;
  std::size_t excluded_diagonal = 0;
  std::size_t remaining = 0;
  std::size_t pairs = 0;
};

/// Off-origin points from the single-variable substitution: distinct roots of
/// (z^{2n} - z)^{2n} - z^{2n} minus z = 0, z2 = 0 and z1 = z2, halved.
/// Throws std::logic_error when the remaining count is odd.
SubstitutionCount count_offorigin_by_substitution(int n);

}  // namespace igq::presentations
