#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nagsb/coeff.hpp"
#include "nagsb/gsbasis.hpp"
#include "nagsb/poly.hpp"
#include "nagsb/relation_set.hpp"

namespace nagsb {

/// Bilinear multiplication b_i b_j = sum_m gamma(i, j, m) b_m on a finite
/// basis.
class MultiplicationTable {
 public:
  MultiplicationTable(std::size_t dim, Field field = {});

  std::size_t dim() const { return dim_; }
  Field field() const { return field_; }
  const Coeff& operator()(std::size_t i, std::size_t j, std::size_t m) const {
    return gamma_.at((i * dim_ + j) * dim_ + m);
  }
  void set(std::size_t i, std::size_t j, std::size_t m, Coeff value);

 private:
  std::size_t dim_;
  Field field_;
  std::vector<Coeff> gamma_;
};

/// Akivis algebra by structure constants on a linearly ordered basis
/// e_0 < e_1 < ...:
///   [e_i, e_j]      = sum_m alpha(i, j, m) e_m
///   (e_i, e_j, e_k) = sum_n beta(i, j, k, n) e_n
/// The bracket is skew by construction: only i > j entries are set.
class AkivisAlgebra {
 public:
  AkivisAlgebra(std::size_t dim, Field field = {});

  std::size_t dim() const { return dim_; }
  Field field() const { return field_; }

  const Coeff& alpha(std::size_t i, std::size_t j, std::size_t m) const {
    return alpha_.at((i * dim_ + j) * dim_ + m);
  }
  const Coeff& beta(std::size_t i, std::size_t j, std::size_t k, std::size_t n) const {
    return beta_.at(((i * dim_ + j) * dim_ + k) * dim_ + n);
  }

  /// Sets alpha(i, j, m) = value and alpha(j, i, m) = -value. Requires
  /// i > j; throws PreconditionViolated otherwise.
  void set_bracket(std::size_t i, std::size_t j, std::size_t m, Coeff value);
  void set_ternary(std::size_t i, std::size_t j, std::size_t k, std::size_t n, Coeff value);

  /// {e_i e_j} and {e_i e_j e_k} as degree-one polynomials over `alphabet`.
  Poly bracket(std::size_t i, std::size_t j) const;
  Poly ternary(std::size_t i, std::size_t j, std::size_t k) const;

  Alphabet alphabet() const { return Alphabet::indexed(dim_, "e"); }

 private:
  void check_index(std::size_t i) const;

  std::size_t dim_;
  Field field_;
  std::vector<Coeff> alpha_;
  std::vector<Coeff> beta_;
};

struct IdentityViolation {
  std::size_t i = 0, j = 0, k = 0;
  /// Jacobiator minus the alternating sum of ternary products, by e_n.
  std::vector<Coeff> defect;
};

/// nullopt when the Akivis identity
///   [[x,y],z] + [[y,z],x] + [[z,x],y]
///     = (x,y,z) + (z,x,y) + (y,z,x) - (x,z,y) - (y,x,z) - (z,y,x)
/// holds on every basis triple.
std::optional<IdentityViolation> check_akivis_identity(const AkivisAlgebra& a);

/// Ak(B): commutator and associator of an arbitrary algebra.
AkivisAlgebra akivis_from_algebra(const MultiplicationTable& gamma);

/// Relations of U(A) that form a Gröbner–Shirshov basis:
///   f_ij  = e_i e_j - e_j e_i - {e_i e_j}                       (i > j)
///   g_ijk = (e_i e_j) e_k - e_i (e_j e_k) - {e_i e_j e_k}        (all i, j, k)
///   h_ijk = e_i (e_j e_k) - e_j (e_i e_k) - {e_i e_j} e_k
///           - {e_j e_i e_k} + {e_i e_j e_k}                      (i > j, k >= j)
struct EnvelopingPresentation {
  struct Indexed {
    std::size_t i = 0, j = 0, k = 0;
    Poly relation;
  };

  Alphabet alphabet;
  Field field;
  std::vector<Indexed> f;
  std::vector<Indexed> g;
  std::vector<Indexed> h;

  /// f relations first, then g, then h, each in index order.
  RelationSet relations() const;
  std::size_t size() const { return f.size() + g.size() + h.size(); }
};

EnvelopingPresentation build_presentation(const AkivisAlgebra& a);

struct TheoremReport {
  bool identity_holds = false;
  GsVerdict verdict;
  std::size_t relations = 0;
  std::size_t compositions = 0;
  std::vector<std::size_t> certificate_sizes;
  /// Every e_i is a reduced word.
  bool letters_reduced = false;
  /// The normal forms of e_0..e_{n-1} are pairwise distinct.
  bool letters_distinct = false;

  bool is_gs() const { return std::holds_alternative<IsGS>(verdict); }
  bool embedding_holds() const { return is_gs() && letters_reduced && letters_distinct; }
};

/// Runs check_gs on build_presentation(a) and the embedding checks. An
/// algebra violating the identity is still checked, so the report shows
/// where the basis property breaks.
TheoremReport verify_theorem(const AkivisAlgebra& a, const GsOptions& options = {});

/// Reduced words of the enveloping presentation up to `max_degree` leaves.
std::vector<Word> pbw_basis(const AkivisAlgebra& a, std::size_t max_degree,
                            EnumerationLimits limits = {});

}  // namespace nagsb
