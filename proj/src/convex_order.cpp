#include "klr/convex_order.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace klr {

namespace {

constexpr Int kUnbounded = std::numeric_limits<Int>::max();

// All indivisible roots of height at most bound: the interval roots of
// non-multiple-of-e length, plus delta itself.
std::vector<RootVector> indivisible_roots_up_to(Int e, Int bound) {
  std::vector<RootVector> out;
  for (Int L = 1; L <= bound; ++L) {
    if (L % e == 0) continue;
    for (Int t = 0; t < e; ++t) out.push_back(alpha_interval(e, t, L));
  }
  if (e <= bound) out.push_back(RootVector::delta(e));
  return out;
}

}  // namespace

ConvexPreorder::ConvexPreorder(Int e, std::vector<std::vector<Int>> H)
    : e_(e), H_(std::move(H)) {
  require(e_ >= 2, "e must be at least 2");
  require(!H_.empty(), "matrix must have at least one row");
  for (const auto& row : H_)
    require((Int)row.size() == e_, "matrix rows must have length e");
  certify(4 * e_);
  validated_.store(4 * e_);
}

ConvexPreorder ConvexPreorder::from_permutation(const ResiduePermutation& theta) {
  Int e = theta.e;
  // Row one is the potential c_i = v(i) - v(i - 1): positive exactly on the
  // interval roots the permutation puts above delta, and zero on delta. The
  // identity rows underneath recover the root from its image, so two
  // distinct indivisible roots can never tie at any height.
  std::vector<Int> v(e);
  for (Int a = 1; a <= e; ++a) v[theta.at(a)] = a;
  std::vector<std::vector<Int>> H(1, std::vector<Int>(e));
  for (Int i = 0; i < e; ++i) H[0][i] = v[i] - v[imod(i - 1, e)];
  for (Int i = 0; i < e; ++i) {
    std::vector<Int> row(e, 0);
    row[i] = 1;
    H.push_back(std::move(row));
  }
  ConvexPreorder P;
  P.e_ = e;
  P.H_ = std::move(H);
  P.constructed_ = true;
  P.validated_.store(kUnbounded);
  return P;
}

ConvexPreorder::ConvexPreorder(const ConvexPreorder& other)
    : e_(other.e_),
      H_(other.H_),
      constructed_(other.constructed_),
      validated_(other.validated_.load()) {}

ConvexPreorder& ConvexPreorder::operator=(const ConvexPreorder& other) {
  e_ = other.e_;
  H_ = other.H_;
  constructed_ = other.constructed_;
  validated_.store(other.validated_.load());
  return *this;
}

std::vector<Int> ConvexPreorder::apply(const RootVector& v) const {
  std::vector<Int> out(H_.size(), 0);
  for (size_t r = 0; r < H_.size(); ++r)
    for (Int i = 0; i < e_; ++i) out[r] += H_[r][i] * v.coeffs[i];
  return out;
}

void ConvexPreorder::certify(Int bound) const {
  auto roots = indivisible_roots_up_to(e_, bound);
  std::vector<std::vector<Int>> images;
  std::vector<Int> heights;
  images.reserve(roots.size());
  for (const auto& r : roots) {
    images.push_back(apply(r));
    heights.push_back(r.height());
  }
  for (size_t i = 0; i < roots.size(); ++i) {
    for (size_t j = i + 1; j < roots.size(); ++j) {
      bool tie = true;
      for (size_t r = 0; r < H_.size() && tie; ++r)
        if (heights[j] * images[i][r] != heights[i] * images[j][r]) tie = false;
      if (tie)
        throw validation_error(
            "matrix does not define a convex preorder: two indivisible roots of "
            "height at most " + std::to_string(bound) + " have proportional images");
    }
  }
}

Rel ConvexPreorder::compare(const RootVector& beta, const RootVector& gamma) const {
  require(beta.e == e_ && gamma.e == e_, "mismatched e");
  RootClass cb = classify(beta), cg = classify(gamma);
  require(cb.kind != RootKind::not_a_root && cg.kind != RootKind::not_a_root,
          "compare is only defined on positive roots");
  if (beta == gamma) return Rel::equivalent;
  if (!constructed_) {
    Int need = std::max(beta.height(), gamma.height());
    if (need > validated_.load()) {
      certify(need);
      Int seen = validated_.load();
      while (seen < need && !validated_.compare_exchange_weak(seen, need)) {
      }
    }
  }
  std::vector<Int> ib = apply(beta), ig = apply(gamma);
  Int hb = beta.height(), hg = gamma.height();
  for (size_t r = 0; r < H_.size(); ++r) {
    Int d = hg * ib[r] - hb * ig[r];
    if (d > 0) return Rel::above;
    if (d < 0) return Rel::below;
  }
  bool both_imaginary = cb.kind == RootKind::imaginary && cg.kind == RootKind::imaginary;
  require(both_imaginary,
          "matrix does not define a convex preorder: tie between non-proportional roots");
  return Rel::equivalent;
}

ResiduePermutation realized_permutation(const ConvexPreorder& order) {
  Int e = order.e();
  // Tournament on residues: i before j (for i < j as integers) exactly when
  // the interval from i + 1 to j lies above delta.
  std::vector<std::vector<bool>> before(e, std::vector<bool>(e, false));
  for (Int i = 0; i < e; ++i) {
    for (Int j = i + 1; j < e; ++j) {
      bool ij = is_above_delta(order, alpha_interval(e, imod(i + 1, e), j - i));
      before[i][j] = ij;
      before[j][i] = !ij;
    }
  }
  std::vector<Int> theta(e);
  std::iota(theta.begin(), theta.end(), 0);
  std::sort(theta.begin(), theta.end(),
            [&](Int i, Int j) { return before[i][j]; });
  for (Int a = 0; a < e; ++a)
    for (Int b = a + 1; b < e; ++b)
      require(before[theta[a]][theta[b]],
              "preorder comparisons are intransitive on residues");
  return ResiduePermutation(e, std::move(theta));
}

ConvexPreorder preorder_from_permutation(const ResiduePermutation& theta) {
  return ConvexPreorder::from_permutation(theta);
}

RootVector gamma(const ResiduePermutation& theta, Int a, Int b) {
  Int e = theta.e;
  require(1 <= a && a <= b && b <= e - 1, "gamma segment indices must satisfy 1 <= a <= b <= e-1");
  RootVector out = RootVector::zero(e);
  for (Int t = a; t <= b; ++t) {
    Int from = imod(theta.at(t) + 1, e);
    Int len = imod(theta.at(t + 1) - theta.at(t), e);
    out = out + alpha_interval(e, from, len);
  }
  return out;
}

bool is_above_delta(const ConvexPreorder& order, const RootVector& beta) {
  return order.compare(beta, RootVector::delta(beta.e)) == Rel::above;
}

bool side_holds(const ConvexPreorder& order, const RootVector& beta, Side side,
                const RootVector& base) {
  Rel r = order.compare(beta, base);
  switch (side) {
    case Side::weakly_above: return r != Rel::below;
    case Side::strictly_above: return r == Rel::above;
    case Side::weakly_below: return r != Rel::above;
    case Side::strictly_below: return r == Rel::below;
  }
  return false;
}

std::optional<std::vector<RootVector>> decompose_into_roots(
    const ConvexPreorder& order, const RootVector& omega, Side side,
    const RootVector& base, Int budget) {
  Int e = omega.e;
  if (omega.is_zero()) return std::vector<RootVector>{};

  Int cells = 1;
  for (Int c : omega.coeffs) {
    cells *= c + 1;
    if (cells > budget)
      throw budget_error("decomposition search space exceeds the budget");
  }

  // Candidate parts: every positive root inside the box on the right side.
  std::vector<RootVector> parts;
  Int h = omega.height();
  for (Int L = 1; L <= h; ++L) {
    if (L % e == 0) continue;
    for (Int t = 0; t < e; ++t) {
      RootVector r = alpha_interval(e, t, L);
      if (componentwise_leq(r, omega) && side_holds(order, r, side, base))
        parts.push_back(r);
    }
  }
  Int mind = *std::min_element(omega.coeffs.begin(), omega.coeffs.end());
  for (Int d = 1; d <= mind; ++d) {
    RootVector r = d * RootVector::delta(e);
    if (side_holds(order, r, side, base)) parts.push_back(r);
  }

  std::vector<Int> radix(e, 1);
  for (Int i = 1; i < e; ++i) radix[i] = radix[i - 1] * (omega.coeffs[i - 1] + 1);
  auto index_of = [&](const std::vector<Int>& v) {
    Int idx = 0;
    for (Int i = 0; i < e; ++i) idx += radix[i] * v[i];
    return idx;
  };

  // parent[idx] = index of the part last added to reach idx, or -1.
  std::vector<int> parent(cells, -1);
  std::vector<char> reach(cells, 0);
  reach[0] = 1;
  std::vector<Int> v(e, 0);
  for (Int idx = 0; idx < cells; ++idx) {
    if (reach[idx]) {
      for (size_t p = 0; p < parts.size(); ++p) {
        bool ok = true;
        for (Int i = 0; i < e && ok; ++i)
          if (v[i] + parts[p].coeffs[i] > omega.coeffs[i]) ok = false;
        if (!ok) continue;
        Int nidx = idx + index_of(parts[p].coeffs);
        if (!reach[nidx]) {
          reach[nidx] = 1;
          parent[nidx] = (int)p;
        }
      }
    }
    // increment the mixed-radix counter v alongside idx
    for (Int i = 0; i < e; ++i) {
      if (++v[i] <= omega.coeffs[i]) break;
      v[i] = 0;
    }
  }

  Int top = cells - 1;
  if (!reach[top]) return std::nullopt;
  std::vector<RootVector> witness;
  std::vector<Int> cur = omega.coeffs;
  while (index_of(cur) != 0) {
    const RootVector& p = parts[parent[index_of(cur)]];
    witness.push_back(p);
    for (Int i = 0; i < e; ++i) cur[i] -= p.coeffs[i];
  }
  return witness;
}

}  // namespace klr
