#include "igq/bbw/collections.hpp"

#include <stdexcept>

namespace igq::bbw {

std::string CollectionObject::str() const {
  return BundleTerm{sym, twist, 1, 0}.str();
}

std::vector<int> support_partition(const Space& space) {
  const int p = space.param();
  std::vector<int> lambda;
  if (space.kind() == Space::Kind::Isotropic) {
    lambda.assign(p - 1, p);
    lambda.insert(lambda.end(), p, p - 1);
  } else if (p % 2 == 1) {
    lambda.assign(p, p / 2);
  } else {
    lambda.assign(p / 2, p / 2);
    lambda.insert(lambda.end(), p / 2, p / 2 - 1);
  }
  return lambda;
}

std::vector<CollectionObject> lefschetz_collection(const Space& space) {
  std::vector<CollectionObject> out;
  const std::vector<int> lambda = support_partition(space);
  for (int j = 0; j < static_cast<int>(lambda.size()); ++j)
    for (int s = 0; s < lambda[j]; ++s) out.push_back({s, j, j});
  return out;
}

namespace {

BundleSum single(int sym, int twist) { return BundleSum({{sym, twist, 1, 0}}); }

}  // namespace

bool serre_consistent(const Space& space, const BundleSum& source, const BundleSum& target) {
  return ext_complexes(space, source, target).dims == serre_partner(space, source, target).dims;
}

CollectionReport verify_collection(const Space& space) {
  const std::vector<CollectionObject> objs = lefschetz_collection(space);
  CollectionReport r;
  r.objects = objs.size();
  for (std::size_t a = 0; a < objs.size(); ++a) {
    const ExtProfile self = ext_bundles(space, objs[a].sym, objs[a].twist, objs[a].sym, objs[a].twist);
    if (self.dims != std::map<int, std::int64_t>{{0, 1}}) r.non_exceptional.push_back(a);
    if (!serre_consistent(space, single(objs[a].sym, objs[a].twist), single(objs[a].sym, objs[a].twist)))
      ++r.serre_mismatches;
    for (std::size_t b = 0; b < a; ++b) {
      const BundleSum later = single(objs[a].sym, objs[a].twist);
      const BundleSum earlier = single(objs[b].sym, objs[b].twist);
      ExtProfile e = ext_complexes(space, later, earlier);
      ++r.pairs_checked;
      if (!e.is_zero()) r.violations.push_back({a, b, e});
      if (!serre_consistent(space, later, earlier)) ++r.serre_mismatches;
    }
  }
  return r;
}

bool OrthogonalityReport::ok() const {
  for (const OrthogonalityEntry& e : entries)
    if (!e.profile.is_zero() || !e.profile.conclusive) return false;
  return true;
}

OrthogonalityReport check_f_orthogonality(const Space& space, int i) {
  const int k = sequence_k(space);
  if (i < 1 || i > k) throw std::invalid_argument("F_i index out of range");
  OrthogonalityReport r;
  r.i = i;
  const BundleSum target = f_complex(i, k, Side::Left).twisted(k - i);
  for (int block = 0; block <= k - i; ++block)
    for (int s = 0; s <= k - 2; ++s) {
      CollectionObject g{s, block, block};
      r.entries.push_back({g, ext_complexes(space, single(s, block), target)});
    }
  return r;
}

std::vector<std::int64_t> sequence_euler_sums(const Space& space) {
  const int k = sequence_k(space);
  const BundleSum seq = long_exact_terms(k);
  std::vector<std::int64_t> sums;
  for (int j = 0; j < 2 * k; ++j) {
    std::int64_t s = 0;
    for (const BundleTerm& t : seq.terms()) {
      const std::int64_t chi = t.scalar_mult * bundle_cohomology(space, t.sym, t.twist + j).euler();
      s += t.hom_shift % 2 == 0 ? chi : -chi;
    }
    sums.push_back(s);
  }
  return sums;
}

}  // namespace igq::bbw
