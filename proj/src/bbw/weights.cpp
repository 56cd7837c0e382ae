#include "igq/bbw/weights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace igq::bbw {

Space Space::grassmannian(int m) {
  if (m < 4) throw std::invalid_argument("G(2,m) needs m >= 4");
  return Space(Kind::Grassmannian, m);
}

Space Space::isotropic(int k) {
  if (k < 2) throw std::invalid_argument("IG(2,2k) needs k >= 2");
  return Space(Kind::Isotropic, k);
}

int Space::dimension() const {
  return kind_ == Kind::Grassmannian ? 2 * (param_ - 2) : 4 * param_ - 5;
}

int Space::index() const {
  return kind_ == Kind::Grassmannian ? param_ : 2 * param_ - 1;
}

int Space::ambient_dim() const {
  return kind_ == Kind::Grassmannian ? param_ : 2 * param_;
}

int Space::rank() const { return param_; }

std::string Space::name() const {
  if (kind_ == Kind::Grassmannian) return "G(2," + std::to_string(param_) + ")";
  return "IG(2," + std::to_string(2 * param_) + ")";
}

std::int64_t CohomologyResult::euler() const {
  if (vanishes) return 0;
  return degree % 2 == 0 ? rep_dimension : -rep_dimension;
}

namespace {

// Exact product of positive fractions; every factor is reduced on entry.
class FractionProduct {
 public:
  void times(std::int64_t num, std::int64_t den) {
    std::int64_t g = std::gcd(num, den_);
    num /= g;
    den_ /= g;
    g = std::gcd(num_, den);
    num_ /= g;
    den /= g;
    if (__builtin_mul_overflow(num_, num, &num_) || __builtin_mul_overflow(den_, den, &den_))
      throw std::overflow_error("Weyl dimension overflow");
  }
  std::int64_t value() const {
    if (num_ % den_ != 0) throw std::logic_error("Weyl dimension is not an integer");
    return num_ / den_;
  }

 private:
  std::int64_t num_ = 1;
  std::int64_t den_ = 1;
};

void require_bundle_weight(const std::vector<int>& weight, int length) {
  if (static_cast<int>(weight.size()) != length)
    throw std::invalid_argument("weight has the wrong length");
  if (weight[0] < weight[1]) throw std::invalid_argument("weight is not dominant on the fiber");
  for (int i = 2; i < length; ++i)
    if (weight[i] != 0) throw std::invalid_argument("weight has a nonzero tail");
}

}  // namespace

std::int64_t gl_dimension(const std::vector<int>& lambda) {
  const int m = static_cast<int>(lambda.size());
  FractionProduct p;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) p.times(lambda[i] - lambda[j] + j - i, j - i);
  return p.value();
}

std::int64_t sp_dimension(const std::vector<int>& lambda) {
  const int k = static_cast<int>(lambda.size());
  std::vector<int> rho(k), v(k);
  for (int i = 0; i < k; ++i) {
    rho[i] = k - i;
    v[i] = lambda[i] + rho[i];
  }
  FractionProduct p;
  for (int i = 0; i < k; ++i) {
    p.times(v[i], rho[i]);
    for (int j = i + 1; j < k; ++j) {
      p.times(v[i] - v[j], rho[i] - rho[j]);
      p.times(v[i] + v[j], rho[i] + rho[j]);
    }
  }
  return p.value();
}

CohomologyResult bbw_gl(const std::vector<int>& weight, int m) {
  require_bundle_weight(weight, m);
  std::vector<int> v(m);
  for (int i = 0; i < m; ++i) v[i] = weight[i] + (m - 1 - i);

  int inversions = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (v[i] == v[j]) return CohomologyResult::zero();
      if (v[i] < v[j]) ++inversions;
    }

  std::sort(v.begin(), v.end(), std::greater<>());
  CohomologyResult r;
  r.vanishes = false;
  r.degree = inversions;
  r.highest_weight.resize(m);
  for (int i = 0; i < m; ++i) r.highest_weight[i] = v[i] - (m - 1 - i);
  r.rep_dimension = gl_dimension(r.highest_weight);
  return r;
}

int sp_sort_length(std::vector<int> v) {
  const int k = static_cast<int>(v.size());
  int steps = 0;
  for (;;) {
    bool moved = false;
    for (int i = 0; i + 1 < k; ++i)
      if (v[i] < v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        moved = true;
        break;
      }
    if (!moved && v[k - 1] < 0) {
      v[k - 1] = -v[k - 1];
      moved = true;
    }
    if (!moved) return steps;
    ++steps;
  }
}

int sp_inversion_length(const std::vector<int>& v) {
  const int k = static_cast<int>(v.size());
  int len = 0;
  for (int i = 0; i < k; ++i) {
    if (v[i] < 0) ++len;
    for (int j = i + 1; j < k; ++j) {
      if (v[i] < v[j]) ++len;
      if (v[i] + v[j] < 0) ++len;
    }
  }
  return len;
}

CohomologyResult bbw_sp(const std::vector<int>& weight, int k) {
  require_bundle_weight(weight, k);
  std::vector<int> v(k);
  for (int i = 0; i < k; ++i) v[i] = weight[i] + (k - i);

  for (int i = 0; i < k; ++i) {
    if (v[i] == 0) return CohomologyResult::zero();
    for (int j = i + 1; j < k; ++j)
      if (std::abs(v[i]) == std::abs(v[j])) return CohomologyResult::zero();
  }

  CohomologyResult r;
  r.vanishes = false;
  r.degree = sp_sort_length(v);
  for (int& x : v) x = std::abs(x);
  std::sort(v.begin(), v.end(), std::greater<>());
  r.highest_weight.resize(k);
  for (int i = 0; i < k; ++i) r.highest_weight[i] = v[i] - (k - i);
  r.rep_dimension = sp_dimension(r.highest_weight);
  return r;
}

CohomologyResult bundle_cohomology(const Space& space, int sym, int twist) {
  if (sym < 0) throw std::invalid_argument("negative symmetric power");
  std::vector<int> weight(space.rank(), 0);
  weight[0] = sym + twist;
  weight[1] = twist;
  return space.kind() == Space::Kind::Grassmannian ? bbw_gl(weight, space.param())
                                                    : bbw_sp(weight, space.param());
}

}  // namespace igq::bbw
