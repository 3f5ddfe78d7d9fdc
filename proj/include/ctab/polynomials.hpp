#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ctab/filling.hpp"
#include "ctab/validate.hpp"

namespace ctab {

using Exponents = std::vector<int>;

/// Graded lexicographic: higher total degree first, then lexicographically
/// larger exponent vectors first (x1^2 x2 before x1 x2^2).
struct GradedLexOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Integer polynomial in a fixed number of variables. Zero coefficients are
/// never stored.
class Polynomial {
 public:
  using Terms = std::map<Exponents, long long, GradedLexOrder>;

  explicit Polynomial(int nvars);

  int nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Throws ArgumentError if the exponent vector has the wrong length or a
  /// negative entry.
  void add_term(const Exponents& exponents, long long coefficient);
  long long coefficient(const Exponents& exponents) const;

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(long long scalar, Polynomial p);

  bool operator==(const Polynomial&) const = default;

 private:
  int nvars_;
  Terms terms_;
};

/// One term per line, "coeff: e1,e2,...,en", in graded lexicographic order.
std::string render_polynomial(const Polynomial& p);
/// Inverse of render_polynomial; repeated exponent vectors are summed. The
/// variable count is taken from the first term, or `nvars` when given.
Polynomial parse_polynomial(std::string_view text, int nvars = 0);

/// x^weight of a tableau in n variables. Throws ArgumentError if an entry
/// exceeds n.
Exponents monomial_of(const Filling& f, int nvars);

/// Partitions of `size` in lexicographic order of their parts.
std::vector<PartitionShape> partitions_of(int size);
/// Compositions of `size` in lexicographic order of their parts.
std::vector<CompositionShape> compositions_of(int size);
/// Distinct rearrangements of a partition, in lexicographic order.
std::vector<CompositionShape> rearrangements(const PartitionShape& shape);

/// All tableaux of the given shape with entries in 1..max_entry, in
/// lexicographic order of the row reading word (rows top to bottom, each
/// left to right).
std::vector<SSYT> enumerate_ssyt(const PartitionShape& shape, int max_entry);
std::vector<ReverseSSYT> enumerate_rssyt(const PartitionShape& shape, int max_entry);
std::vector<CompositionTableau> enumerate_ct(const CompositionShape& shape, int max_entry);

/// Sum of x^T over SSYT T of shape lambda with entries <= nvars.
Polynomial schur_expand(const PartitionShape& lambda, int nvars);
/// Sum of x^beta over the distinct rearrangements beta of alpha padded to
/// nvars variables.
Polynomial monomial_sym_expand(const PartitionShape& alpha, int nvars);
/// Sum of x_{i1}^{a1} ... x_{ik}^{ak} over i1 < ... < ik <= nvars.
Polynomial monomial_qsym_expand(const CompositionShape& alpha, int nvars);

/// Sum of x^T over every composition tableau whose shape rearranges lambda.
Polynomial ct_generating_sum(const PartitionShape& lambda, int nvars);
/// Sum of x^T over reverse SSYT of shape lambda.
Polynomial rssyt_generating_sum(const PartitionShape& lambda, int nvars);

bool is_quasisymmetric(const Polynomial& p);
bool is_symmetric(const Polynomial& p);

}  // namespace ctab
