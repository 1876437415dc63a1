#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <utility>
#include <vector>

#include "cutsig/metric.hpp"
#include "cutsig/rational.hpp"

namespace cutsig {

/// Largest vertex count for which cuts are representable as 64-bit masks.
/// Cut enumeration is exponential, so practical bounds sit far below this.
inline constexpr Index kMaxCutVertices = 63;

/// Number of canonical nontrivial cuts of {0,...,n-1}: 2^(n-1) - 1.
inline std::uint64_t cut_count(Index n) {
  if (n < 2 || n > kMaxCutVertices) {
    throw std::invalid_argument("cut ground set must have 2..63 vertices");
  }
  return (std::uint64_t{1} << (n - 1)) - 1;
}

/// One side of a 2-partition of {0,...,n-1}, kept in canonical form: the
/// side containing vertex 0, never the full set. Each unordered partition
/// {C, complement} therefore has exactly one representative, which removes
/// the ambiguity of a cut and its complement inducing the same cut metric.
///
/// Cuts are ordered by ordinal(): the bitmask of members among {1,...,n-1}
/// in ascending value. Ordinal 0 is {0}; ordinal 2^(n-1) - 2 is
/// {0,...,n-2}. Enumeration, decompositions and certificate checks all use
/// this order, which makes every output of the library reproducible.
class Cut {
 public:
  /// Requires canonical input: 0 a member, proper nonempty subset,
  /// members sorted, distinct and in range. Throws otherwise.
  Cut(Index n, const std::vector<Index>& members) : n_(n), mask_(0) {
    if (n < 2 || n > kMaxCutVertices) {
      throw std::invalid_argument("cut ground set must have 2..63 vertices");
    }
    if (members.empty() || members.front() != 0) {
      throw std::invalid_argument("canonical cut must contain vertex 0");
    }
    Index prev = -1;
    for (Index v : members) {
      if (v < 0 || v >= n) throw std::invalid_argument("cut member out of range");
      if (v <= prev) throw std::invalid_argument("cut members must be sorted and distinct");
      prev = v;
      mask_ |= std::uint64_t{1} << v;
    }
    if (static_cast<Index>(members.size()) == n) {
      throw std::invalid_argument("cut must be a proper subset");
    }
  }

  /// Canonical representative of the partition separating `side` from the
  /// rest: `side` itself when it contains vertex 0, its complement
  /// otherwise. Accepts either side of any nontrivial partition.
  static Cut canonical(Index n, const std::vector<Index>& side) {
    if (n < 2 || n > kMaxCutVertices) {
      throw std::invalid_argument("cut ground set must have 2..63 vertices");
    }
    std::uint64_t mask = 0;
    for (Index v : side) {
      if (v < 0 || v >= n) throw std::invalid_argument("cut member out of range");
      mask |= std::uint64_t{1} << v;
    }
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    if (mask == 0 || mask == full) {
      throw std::invalid_argument("cut must split the vertex set in two nonempty parts");
    }
    if (!(mask & 1)) mask = full & ~mask;
    return Cut(n, mask, 0);
  }

  static Cut from_ordinal(Index n, std::uint64_t ordinal) {
    if (ordinal >= cut_count(n)) throw std::invalid_argument("cut ordinal out of range");
    return Cut(n, (ordinal << 1) | 1, 0);
  }

  Index n() const { return n_; }
  std::uint64_t ordinal() const { return mask_ >> 1; }

  bool contains(Index v) const { return (mask_ >> v) & 1; }
  bool separates(Index i, Index j) const { return contains(i) != contains(j); }

  std::vector<Index> members() const {
    std::vector<Index> out;
    for (Index v = 0; v < n_; ++v) {
      if (contains(v)) out.push_back(v);
    }
    return out;
  }

  bool operator==(const Cut& other) const { return n_ == other.n_ && mask_ == other.mask_; }

 private:
  Cut(Index n, std::uint64_t mask, int) : n_(n), mask_(mask) {}

  Index n_;
  std::uint64_t mask_;  // bit v set iff vertex v is a member
};

/// All canonical nontrivial cuts in ordinal order.
inline std::vector<Cut> enumerate_cuts(Index n) {
  const std::uint64_t count = cut_count(n);
  std::vector<Cut> cuts;
  cuts.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    cuts.push_back(Cut::from_ordinal(n, k));
  }
  return cuts;
}

/// The cut semimetric: distance 1 across the partition, 0 within a side.
inline FiniteMetric cut_metric(const Cut& cut) {
  FiniteMetric d(cut.n());
  for (Index i = 0; i < cut.n(); ++i) {
    for (Index j = i + 1; j < cut.n(); ++j) {
      if (cut.separates(i, j)) d.set(i, j, Rational(1));
    }
  }
  return d;
}

/// A point of the cut cone: a finite sum of positively weighted canonical
/// cuts, kept sorted by cut ordinal with pairwise distinct cuts.
class CutDecomposition {
 public:
  using Term = std::pair<Cut, Rational>;

  explicit CutDecomposition(Index n) : n_(n) {
    if (n < 2) throw std::invalid_argument("decomposition needs n >= 2");
  }

  CutDecomposition(Index n, std::vector<Term> terms) : n_(n), terms_(std::move(terms)) {
    if (n < 2) throw std::invalid_argument("decomposition needs n >= 2");
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first.ordinal() < b.first.ordinal(); });
    for (std::size_t t = 0; t < terms_.size(); ++t) {
      if (terms_[t].first.n() != n_) {
        throw std::invalid_argument("decomposition term has mismatched vertex count");
      }
      if (sgn(terms_[t].second) <= 0) {
        throw std::invalid_argument("decomposition weights must be positive");
      }
      if (t > 0 && terms_[t].first.ordinal() == terms_[t - 1].first.ordinal()) {
        throw std::invalid_argument("decomposition cuts must be pairwise distinct");
      }
    }
  }

  Index n() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  Index size() const { return static_cast<Index>(terms_.size()); }

  bool operator==(const CutDecomposition& other) const {
    return n_ == other.n_ && terms_ == other.terms_;
  }

 private:
  Index n_;
  std::vector<Term> terms_;
};

/// Merges two decompositions of the same ground set, adding weights of
/// shared cuts. Represents the sum of the two cone points.
inline CutDecomposition merge(const CutDecomposition& a, const CutDecomposition& b) {
  if (a.n() != b.n()) throw std::invalid_argument("decomposition size mismatch");
  std::vector<CutDecomposition::Term> terms;
  auto ita = a.terms().begin();
  auto itb = b.terms().begin();
  while (ita != a.terms().end() || itb != b.terms().end()) {
    if (itb == b.terms().end() ||
        (ita != a.terms().end() && ita->first.ordinal() < itb->first.ordinal())) {
      terms.push_back(*ita++);
    } else if (ita == a.terms().end() || itb->first.ordinal() < ita->first.ordinal()) {
      terms.push_back(*itb++);
    } else {
      terms.emplace_back(ita->first, ita->second + itb->second);
      ++ita;
      ++itb;
    }
  }
  return CutDecomposition(a.n(), std::move(terms));
}

inline CutDecomposition scale(const Rational& lambda, const CutDecomposition& dec) {
  if (sgn(lambda) <= 0) throw std::invalid_argument("scale factor must be positive");
  std::vector<CutDecomposition::Term> terms;
  terms.reserve(dec.terms().size());
  for (const auto& [cut, weight] : dec.terms()) {
    terms.emplace_back(cut, lambda * weight);
  }
  return CutDecomposition(dec.n(), std::move(terms));
}

/// The semimetric represented by a decomposition: sum of w_C * delta_C.
inline FiniteMetric decomposition_metric(const CutDecomposition& dec) {
  FiniteMetric d(dec.n());
  for (const auto& [cut, weight] : dec.terms()) {
    for (Index i = 0; i < dec.n(); ++i) {
      for (Index j = i + 1; j < dec.n(); ++j) {
        if (cut.separates(i, j)) {
          d.upper_triangle()[pair_index(i, j, dec.n())] += weight;
        }
      }
    }
  }
  return d;
}

/// Exact check that the decomposition reproduces d on every pair.
inline bool verify_decomposition(const FiniteMetric& d, const CutDecomposition& dec) {
  if (d.n() != dec.n()) throw std::invalid_argument("vertex count mismatch");
  return decomposition_metric(dec) == d;
}

/// A pair-indexed linear functional witnessing that a semimetric lies
/// outside the cut cone: nonpositive on every cut metric, strictly
/// positive on the refuted semimetric. Existence of a verifying functional
/// and of a verifying decomposition are mutually exclusive, since the
/// functional would be both <= 0 and > 0 on the same point.
struct FarkasCertificate {
  Index n;
  RationalVector y;  // pair order, see pair_index

  /// Rescales to the unique positive multiple with integral entries of
  /// gcd 1, so certificates are diffable across runs.
  void normalize() {
    mpz_class den_lcm(1);
    for (Index p = 0; p < y.size(); ++p) {
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), y[p].get_den().get_mpz_t());
    }
    mpz_class num_gcd(0);
    for (Index p = 0; p < y.size(); ++p) {
      mpz_class scaled = y[p].get_num() * (den_lcm / y[p].get_den());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    if (num_gcd == 0) return;  // zero vector stays zero
    Rational factor(den_lcm, num_gcd);
    factor.canonicalize();
    for (Index p = 0; p < y.size(); ++p) {
      y[p] *= factor;
    }
  }
};

/// Inner product of a pair-indexed functional with the cut metric of the
/// canonical cut of the given ordinal, without materializing the cut.
inline Rational cut_metric_dot(const RationalVector& y, Index n, std::uint64_t ordinal) {
  const std::uint64_t member_mask = (ordinal << 1) | 1;
  Rational sum(0);
  Index p = 0;
  for (Index i = 0; i < n; ++i) {
    const bool side_i = (member_mask >> i) & 1;
    for (Index j = i + 1; j < n; ++j, ++p) {
      if (side_i != (((member_mask >> j) & 1) != 0)) sum += y[p];
    }
  }
  return sum;
}

/// Full-enumeration check of a non-membership witness: <y, delta_C> <= 0
/// for all 2^(n-1) - 1 canonical cuts and <y, d> > 0.
inline bool verify_farkas(const FiniteMetric& d, const FarkasCertificate& certificate) {
  if (d.n() != certificate.n) throw std::invalid_argument("vertex count mismatch");
  if (certificate.y.size() != d.pairs()) {
    throw std::invalid_argument("certificate has wrong number of entries");
  }
  if (certificate.y.dot(d.upper_triangle()) <= 0) return false;
  const std::uint64_t count = cut_count(d.n());
  for (std::uint64_t k = 0; k < count; ++k) {
    if (sgn(cut_metric_dot(certificate.y, d.n(), k)) > 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// File formats.
//
// Decomposition file: line 1 "n k"; then k lines "w : i1 i2 ...", one per
// term, members 1-based. Farkas file: line 1 n; line 2 the pair-ordered
// integer entries. Certificates are written normalized, so both formats
// round-trip bit-exactly.
// ---------------------------------------------------------------------------

inline CutDecomposition read_decomposition(std::istream& in) {
  const long n = read_count(in, "vertex count");
  const long k = read_count(in, "term count");
  std::vector<CutDecomposition::Term> terms;
  terms.reserve(k);
  for (long t = 0; t < k; ++t) {
    Rational weight = read_rational(in, "weight");
    std::string colon;
    if (!(in >> colon) || colon != ":") {
      throw std::invalid_argument("expected ':' after decomposition weight");
    }
    std::string line;
    std::getline(in, line);
    std::vector<Index> members;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
      if (pos >= line.size()) break;
      std::size_t start = pos;
      while (pos < line.size() && line[pos] >= '0' && line[pos] <= '9') ++pos;
      if (pos == start) throw std::invalid_argument("malformed cut member list");
      members.push_back(std::stol(line.substr(start, pos - start)) - 1);
    }
    terms.emplace_back(Cut(n, members), std::move(weight));
  }
  return CutDecomposition(n, std::move(terms));
}

inline void write_decomposition(std::ostream& out, const CutDecomposition& dec) {
  out << dec.n() << ' ' << dec.size() << '\n';
  for (const auto& [cut, weight] : dec.terms()) {
    out << to_string(weight) << " :";
    for (Index v : cut.members()) {
      out << ' ' << v + 1;
    }
    out << '\n';
  }
}

inline FarkasCertificate read_farkas(std::istream& in) {
  const long n = read_count(in, "vertex count");
  if (n < 2) throw std::invalid_argument("certificate file needs n >= 2");
  FarkasCertificate certificate{n, RationalVector(pair_count(n))};
  for (Index p = 0; p < certificate.y.size(); ++p) {
    certificate.y[p] = read_rational(in, "certificate entry");
  }
  return certificate;
}

inline void write_farkas(std::ostream& out, const FarkasCertificate& certificate) {
  out << certificate.n << '\n';
  for (Index p = 0; p < certificate.y.size(); ++p) {
    if (p > 0) out << ' ';
    out << to_string(certificate.y[p]);
  }
  out << '\n';
}

}  // namespace cutsig
