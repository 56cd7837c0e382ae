#include "igq/bbw/ext.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace igq::bbw {

std::string BundleTerm::str() const {
  std::string s;
  if (scalar_mult != 1) s += std::to_string(scalar_mult) + "*";
  if (sym == 0)
    s += "O";
  else if (sym == 1)
    s += "U*";
  else
    s += "S^" + std::to_string(sym) + "U*";
  if (twist != 0) s += "(" + std::to_string(twist) + ")";
  if (hom_shift != 0) s += "[" + std::to_string(-hom_shift) + "]";
  return s;
}

BundleSum::BundleSum(std::vector<BundleTerm> terms) {
  auto key = [](const BundleTerm& t) { return std::tuple(t.hom_shift, t.twist, t.sym); };
  std::sort(terms.begin(), terms.end(),
            [&](const BundleTerm& x, const BundleTerm& y) { return key(x) < key(y); });
  for (const BundleTerm& t : terms) {
    if (t.scalar_mult < 0) throw std::invalid_argument("negative multiplicity");
    if (t.scalar_mult == 0) continue;
    if (!terms_.empty() && key(terms_.back()) == key(t))
      terms_.back().scalar_mult += t.scalar_mult;
    else
      terms_.push_back(t);
  }
}

std::int64_t BundleSum::rank() const {
  std::int64_t r = 0;
  for (const BundleTerm& t : terms_) r += t.rank();
  return r;
}

BundleSum BundleSum::twisted(int by) const {
  std::vector<BundleTerm> out = terms_;
  for (BundleTerm& t : out) t.twist += by;
  return BundleSum(std::move(out));
}

BundleSum BundleSum::shifted(int by) const {
  std::vector<BundleTerm> out = terms_;
  for (BundleTerm& t : out) t.hom_shift += by;
  return BundleSum(std::move(out));
}

std::string BundleSum::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const BundleTerm& t : terms_) {
    if (!s.empty()) s += " + ";
    s += t.str();
  }
  return s;
}

BundleSum hom_bundle(int a, int c, int b, int d) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative symmetric power");
  std::vector<BundleTerm> terms;
  for (int i = 0; i <= std::min(a, b); ++i) terms.push_back({a + b - 2 * i, d - c - a + i, 1, 0});
  return BundleSum(std::move(terms));
}

std::int64_t ExtProfile::total() const {
  std::int64_t s = 0;
  for (const auto& [d, n] : dims) s += n;
  return s;
}

std::string ExtProfile::str() const {
  if (dims.empty()) return "0";
  std::string s = "{";
  for (const auto& [d, n] : dims) {
    if (s.size() > 1) s += ", ";
    s += std::to_string(d) + ":" + std::to_string(n);
  }
  return s + "}";
}

namespace {

void accumulate(ExtProfile& p, int degree, std::int64_t dim) {
  if (dim == 0) return;
  p.dims[degree] += dim;
  p.euler += degree % 2 == 0 ? dim : -dim;
}

void settle_conclusive(ExtProfile& p) {
  p.conclusive = true;
  for (const auto& [d, n] : p.dims)
    if (p.dims.count(d + 1)) p.conclusive = false;
}

}  // namespace

ExtProfile ext_bundles(const Space& space, int a, int c, int b, int d) {
  ExtProfile p;
  const BundleSum hom = hom_bundle(a, c, b, d);
  for (const BundleTerm& t : hom.terms()) {
    CohomologyResult h = bundle_cohomology(space, t.sym, t.twist);
    if (!h.vanishes) accumulate(p, h.degree, t.scalar_mult * h.rep_dimension);
  }
  return p;
}

ExtProfile ext_complexes(const Space& space, const BundleSum& source, const BundleSum& target) {
  ExtProfile p;
  for (const BundleTerm& s : source.terms())
    for (const BundleTerm& t : target.terms()) {
      ExtProfile e = ext_bundles(space, s.sym, s.twist, t.sym, t.twist);
      for (const auto& [deg, dim] : e.dims)
        accumulate(p, deg + t.hom_shift - s.hom_shift, s.scalar_mult * t.scalar_mult * dim);
    }
  settle_conclusive(p);
  return p;
}

ExtProfile serre_partner(const Space& space, const BundleSum& source, const BundleSum& target) {
  ExtProfile dual = ext_complexes(space, target, source.twisted(-space.index()));
  ExtProfile p;
  for (const auto& [deg, dim] : dual.dims) accumulate(p, space.dimension() - deg, dim);
  settle_conclusive(p);
  return p;
}

namespace {

std::int64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::int64_t b = 1;
  for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

}  // namespace

BundleSum long_exact_terms(int k) {
  if (k < 2) throw std::invalid_argument("sequence needs k >= 2");
  std::vector<BundleTerm> terms;
  for (int t = 0; t < k; ++t) terms.push_back({k - 1 - t, t - k, binomial(2 * k, t), t});
  for (int s = 0; s < k; ++s) terms.push_back({s, 0, binomial(2 * k, k - 1 - s), k + s});
  return BundleSum(std::move(terms));
}

BundleSum f_complex(int i, int k, Side side) {
  if (i < 1 || i > k) throw std::invalid_argument("F_i index out of range");
  std::vector<BundleTerm> terms;
  const BundleSum seq = long_exact_terms(k);
  for (const BundleTerm& t : seq.terms()) {
    const bool left = t.hom_shift < i;
    if (left != (side == Side::Left)) continue;
    BundleTerm moved = t;
    moved.hom_shift = left ? t.hom_shift - (i - 1) : t.hom_shift - i;
    terms.push_back(moved);
  }
  return BundleSum(std::move(terms));
}

int sequence_k(const Space& space) {
  if (space.kind() == Space::Kind::Isotropic) return space.param();
  if (space.param() % 2 != 0) throw std::invalid_argument("the sequence lives on G(2,2k) only");
  return space.param() / 2;
}

ExtProfile ext_f_pair(const Space& space, int i, int j, int twist_i, int twist_j) {
  const int k = sequence_k(space);
  return ext_complexes(space, f_complex(i, k, Side::Right).twisted(twist_i),
                       f_complex(j, k, Side::Left).twisted(twist_j));
}

}  // namespace igq::bbw
