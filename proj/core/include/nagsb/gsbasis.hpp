#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "nagsb/relation_set.hpp"
#include "nagsb/rewrite.hpp"

namespace nagsb {

/// Composition of inclusion (f, g)_w = f - (a g b), where ḡ sits in
/// w = f̄ at `pos`.
struct Composition {
  std::size_t f_index = 0;
  std::size_t g_index = 0;
  Position pos;
  Word ambient;
  Poly value;

  Context context() const { return Context::at(ambient, pos); }
};

/// All compositions of S, ordered by (f, pre-order position, g). The pair
/// (f, f) at the root is skipped; distinct relations with a common leading
/// word compose at the root.
std::vector<Composition> all_compositions(const RelationSet& s);

struct Trivial {
  /// Each step's plugged leading word lies strictly below the ambient.
  Certificate certificate;
};

struct NonTrivial {
  /// Nonzero normal form of the composition, reduced modulo S. This reports
  /// a failure of the default strategy; confirming a true negative needs
  /// oracle::quotient_dimensions.
  Poly residue;
};

using Triviality = std::variant<Trivial, NonTrivial>;

Triviality is_trivial(const Composition& c, const RelationSet& s,
                      const ReductionOptions& options = {});

struct GsOptions {
  ReductionOptions reduction;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct IsGS {
  std::size_t compositions = 0;
  /// Certificate length per composition, in all_compositions order.
  std::vector<std::size_t> certificate_sizes;
};

struct CounterExample {
  Composition composition;
  Poly residue;
};

using GsVerdict = std::variant<IsGS, CounterExample>;

/// IsGS iff every composition is trivial; otherwise the first failing
/// composition in all_compositions order.
GsVerdict check_gs(const RelationSet& s, const GsOptions& options = {});

/// Runs check_gs and returns `s` flagged as verified; throws
/// PreconditionViolated when a composition fails.
RelationSet verified(RelationSet s, const GsOptions& options = {});

struct Completed {
  RelationSet basis;
  std::size_t added = 0;
};

struct CapReached {
  RelationSet basis;
  /// Nontrivial residues of compositions whose ambient exceeds max_degree.
  std::vector<Poly> pending;
};

using CompletionResult = std::variant<Completed, CapReached>;

/// Shirshov completion, smallest ambient first. Nontrivial residues are
/// fully reduced, made monic and adjoined. A Completed basis is flagged as
/// verified.
CompletionResult complete(const RelationSet& s, std::size_t max_degree,
                          const ReductionOptions& options = {});

/// normal_form(f) == 0. Throws PreconditionViolated unless s.verified_gs().
bool ideal_membership(const Poly& f, const RelationSet& s, const ReductionOptions& options = {});
bool equal_in_quotient(const Poly& f, const Poly& g, const RelationSet& s,
                       const ReductionOptions& options = {});

}  // namespace nagsb
