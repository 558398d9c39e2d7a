#include "klr/root_system.hpp"

#include <algorithm>
#include <map>

#include "klr/convex_order.hpp"

namespace klr {

RootVector::RootVector(Int e_, std::vector<Int> coeffs_)
    : e(e_), coeffs(std::move(coeffs_)) {
  require(e >= 2, "e must be at least 2");
  require((Int)coeffs.size() == e, "coefficient vector must have length e");
  for (Int c : coeffs) require(c >= 0, "root vector coefficients must be nonnegative");
}

RootVector RootVector::zero(Int e) { return RootVector(e, std::vector<Int>(e, 0)); }

RootVector RootVector::simple(Int e, Int i) {
  require(i >= 0 && i < e, "simple root index out of range");
  std::vector<Int> c(e, 0);
  c[i] = 1;
  return RootVector(e, std::move(c));
}

RootVector RootVector::delta(Int e) { return RootVector(e, std::vector<Int>(e, 1)); }

Int RootVector::height() const {
  Int h = 0;
  for (Int c : coeffs) h += c;
  return h;
}

bool RootVector::is_zero() const { return height() == 0; }

Int RootVector::at(Int i) const { return coeffs[imod(i, e)]; }

RootVector operator+(const RootVector& a, const RootVector& b) {
  require(a.e == b.e, "mismatched e");
  std::vector<Int> c(a.coeffs);
  for (Int i = 0; i < a.e; ++i) c[i] += b.coeffs[i];
  return RootVector(a.e, std::move(c));
}

RootVector operator*(Int k, const RootVector& v) {
  require(k >= 0, "scalar must be nonnegative");
  std::vector<Int> c(v.coeffs);
  for (Int& x : c) x *= k;
  return RootVector(v.e, std::move(c));
}

std::optional<RootVector> subtract(const RootVector& a, const RootVector& b) {
  require(a.e == b.e, "mismatched e");
  std::vector<Int> c(a.coeffs);
  for (Int i = 0; i < a.e; ++i) {
    c[i] -= b.coeffs[i];
    if (c[i] < 0) return std::nullopt;
  }
  return RootVector(a.e, std::move(c));
}

bool componentwise_leq(const RootVector& a, const RootVector& b) {
  require(a.e == b.e, "mismatched e");
  for (Int i = 0; i < a.e; ++i)
    if (a.coeffs[i] > b.coeffs[i]) return false;
  return true;
}

bool lex_less(const RootVector& a, const RootVector& b) {
  require(a.e == b.e, "mismatched e");
  return a.coeffs < b.coeffs;
}

RootVector alpha_interval(Int e, Int t, Int L) {
  require(e >= 2, "e must be at least 2");
  require(t >= 0 && t < e, "starting residue out of range");
  require(L >= 1, "interval length must be positive");
  std::vector<Int> c(e, 0);
  for (Int j = 0; j < L; ++j) c[imod(t + j, e)] += 1;
  return RootVector(e, std::move(c));
}

RootClass classify(const RootVector& v) {
  Int e = v.e;
  Int m = *std::min_element(v.coeffs.begin(), v.coeffs.end());
  RootClass out;
  std::vector<Int> high;  // residues carrying m + 1
  for (Int i = 0; i < e; ++i) {
    if (v.coeffs[i] > m + 1) return out;
    if (v.coeffs[i] == m + 1) high.push_back(i);
  }
  if (high.empty()) {
    if (m >= 1) out = {RootKind::imaginary, 0, 0, m};
    return out;
  }
  // The residues carrying m + 1 must form one cyclic arc; its start is the
  // unique member whose predecessor carries only m.
  Int starts = 0, start = -1;
  for (Int i : high) {
    if (v.coeffs[imod(i - 1, e)] == m) {
      ++starts;
      start = i;
    }
  }
  if (starts != 1) return out;
  out = {RootKind::real_root, start, m * e + (Int)high.size(), 0};
  return out;
}

bool is_positive_root(const RootVector& v) {
  return classify(v).kind != RootKind::not_a_root;
}

bool is_indivisible_root(const RootVector& v) {
  RootClass c = classify(v);
  return c.kind == RootKind::real_root || (c.kind == RootKind::imaginary && c.d == 1);
}

FiniteRootVector finite_projection(const RootVector& v) {
  std::vector<Int> c(v.e - 1);
  for (Int i = 1; i < v.e; ++i) c[i - 1] = v.coeffs[i] - v.coeffs[0];
  return FiniteRootVector{v.e, std::move(c)};
}

ResiduePermutation::ResiduePermutation(Int e_, std::vector<Int> theta_)
    : e(e_), theta(std::move(theta_)) {
  require(e >= 2, "e must be at least 2");
  require((Int)theta.size() == e, "permutation must list all e residues");
  std::vector<bool> seen(e, false);
  for (Int r : theta) {
    require(r >= 0 && r < e, "permutation entry out of range");
    require(!seen[r], "permutation entries must be distinct");
    seen[r] = true;
  }
}

Int ResiduePermutation::at(Int a) const {
  require(a >= 1 && a <= e, "permutation index is 1-based and at most e");
  return theta[a - 1];
}

Int ResiduePermutation::position(Int res) const {
  for (Int a = 1; a <= e; ++a)
    if (theta[a - 1] == res) return a;
  throw validation_error("residue out of range");
}

Word::Word(Int e_, std::vector<Int> letters_) : e(e_), letters(std::move(letters_)) {
  require(e >= 2, "e must be at least 2");
  for (Int l : letters) require(l >= 0 && l < e, "word letter out of range");
}

RootVector Word::content() const {
  std::vector<Int> c(e, 0);
  for (Int l : letters) c[l] += 1;
  return RootVector(e, std::move(c));
}

std::string Word::str() const {
  std::string s;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (e > 10 && i > 0) s += ' ';
    s += std::to_string(letters[i]);
  }
  return s;
}

Word concat(const Word& a, const Word& b) {
  require(a.e == b.e, "mismatched e");
  std::vector<Int> l(a.letters);
  l.insert(l.end(), b.letters.begin(), b.letters.end());
  return Word(a.e, std::move(l));
}

KostantPartition::KostantPartition(Int e_, std::vector<std::pair<RootVector, Int>> raw,
                                   const ConvexPreorder& order)
    : e(e_) {
  require(e >= 2, "e must be at least 2");
  require(order.e() == e, "preorder built for a different e");
  std::map<std::vector<Int>, Int> merged;
  for (auto& [root, mult] : raw) {
    require(root.e == e, "mismatched e");
    require(mult > 0, "multiplicities must be positive");
    require(is_indivisible_root(root), "Kostant partition keys must be indivisible roots");
    merged[root.coeffs] += mult;
  }
  for (auto& [coeffs, mult] : merged) entries.push_back({RootVector(e, coeffs), mult});
  std::sort(entries.begin(), entries.end(), [&](const auto& x, const auto& y) {
    Rel r = order.compare(x.first, y.first);
    internal_check(r != Rel::equivalent, "preorder failed to separate two distinct keys");
    return r == Rel::above;
  });
}

RootVector KostantPartition::total() const {
  RootVector t = RootVector::zero(e);
  for (const auto& [root, mult] : entries) t = t + mult * root;
  return t;
}

Int KostantPartition::delta_multiplicity() const {
  return multiplicity(RootVector::delta(e));
}

Int KostantPartition::multiplicity(const RootVector& beta) const {
  for (const auto& [root, mult] : entries)
    if (root == beta) return mult;
  return 0;
}

bool KostantPartition::same_entries(const KostantPartition& other) const {
  if (e != other.e) return false;
  auto key = [](const KostantPartition& k) {
    std::vector<std::pair<std::vector<Int>, Int>> v;
    for (const auto& [root, mult] : k.entries) v.push_back({root.coeffs, mult});
    std::sort(v.begin(), v.end());
    return v;
  };
  return key(*this) == key(other);
}

RootPartition::RootPartition(KostantPartition kostant_, PartitionTuple nu_)
    : kostant(std::move(kostant_)), nu(std::move(nu_)) {
  Int e = kostant.e;
  if (nu.empty()) nu.resize(e - 1);
  require((Int)nu.size() == e - 1, "imaginary part must have e - 1 components");
  for (const auto& p : nu) require_partition(p);
  require(size_of(nu) == kostant.delta_multiplicity(),
          "imaginary part size must equal the delta multiplicity");
}

namespace {

// The two lexicographic verdicts on the preorder-sorted coefficient
// sequences: one scanning upward from the smallest root, one downward from
// the largest. Returns +1 / -1 / 0 for each scan.
std::pair<int, int> lex_verdicts(const KostantPartition& k1, const KostantPartition& k2,
                                 const ConvexPreorder& order) {
  std::map<std::vector<Int>, std::pair<Int, Int>> mults;
  for (const auto& [root, mult] : k1.entries) mults[root.coeffs].first = mult;
  for (const auto& [root, mult] : k2.entries) mults[root.coeffs].second = mult;
  std::vector<std::pair<RootVector, std::pair<Int, Int>>> rows;
  for (auto& [coeffs, pair] : mults) rows.push_back({RootVector(k1.e, coeffs), pair});
  std::sort(rows.begin(), rows.end(), [&](const auto& x, const auto& y) {
    Rel r = order.compare(x.first, y.first);
    internal_check(r != Rel::equivalent, "preorder failed to separate two distinct keys");
    return r == Rel::above;
  });
  int from_bottom = 0, from_top = 0;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    if (it->second.first != it->second.second) {
      from_bottom = it->second.first > it->second.second ? 1 : -1;
      break;
    }
  }
  for (auto it = rows.begin(); it != rows.end(); ++it) {
    if (it->second.first != it->second.second) {
      from_top = it->second.first > it->second.second ? 1 : -1;
      break;
    }
  }
  return {from_bottom, from_top};
}

}  // namespace

Cmp compare_bilex(const KostantPartition& k1, const KostantPartition& k2,
                  const ConvexPreorder& order) {
  require(k1.e == k2.e, "mismatched e");
  require(k1.total() == k2.total(), "Kostant partitions must refine the same total");
  auto [from_bottom, from_top] = lex_verdicts(k1, k2, order);
  if (from_bottom == 0 && from_top == 0) return Cmp::equal;
  if (from_bottom > 0 && from_top > 0) return Cmp::greater;
  if (from_bottom < 0 && from_top < 0) return Cmp::less;
  return Cmp::incomparable;
}

Cmp compare_bd(const RootPartition& p1, const RootPartition& p2,
               const ConvexPreorder& order) {
  Cmp k = compare_bilex(p1.kostant, p2.kostant, order);
  if (k != Cmp::equal) return k;
  bool ab = dominates(p1.nu, p2.nu);
  bool ba = dominates(p2.nu, p1.nu);
  if (ab && ba) return Cmp::equal;
  if (ab) return Cmp::greater;
  if (ba) return Cmp::less;
  return Cmp::incomparable;
}

}  // namespace klr
