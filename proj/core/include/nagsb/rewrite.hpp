#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nagsb/poly.hpp"
#include "nagsb/relation_set.hpp"

namespace nagsb {

/// A word with exactly one hole, stored as the path of frames from the
/// root down to the hole. Plugging a word w gives (a w b).
class Context {
 public:
  /// The bare hole.
  Context() = default;
  /// The context obtained by cutting `host` at `pos`; throws
  /// MalformedContext when `pos` is not a node of `host`.
  static Context at(const Word& host, const Position& pos);

  /// (this)(right): hole stays on the left of a new root.
  Context then_right(Word right) const;
  /// (left)(this)
  Context then_left(Word left) const;

  Word plug(const Word& filler) const;
  Poly plug(const Poly& f) const;

  Position hole() const;
  /// Leaves other than the hole.
  std::size_t leaves() const;
  bool is_hole() const { return frames_.empty(); }

  /// Renders with "_" at the hole, e.g. "(_ x3)".
  std::string render(const Alphabet& alphabet) const;

  friend bool operator==(const Context&, const Context&) = default;

 private:
  struct Frame {
    Side side;  // side of the parent on which the hole lies
    Word sibling;
    friend bool operator==(const Frame&, const Frame&) = default;
  };
  std::vector<Frame> frames_;  // root first
};

Poly plug(const Context& context, const Poly& f);

/// An S-word (a s b): relation `relation` of some RelationSet plugged into
/// `context`.
struct SWord {
  Context context;
  std::size_t relation = 0;

  /// (a s̄ b)
  Word leading_word(const RelationSet& s) const;
  Poly value(const RelationSet& s) const;
  /// 1 + number of context leaves.
  std::size_t s_length() const { return 1 + context.leaves(); }

  friend bool operator==(const SWord&, const SWord&) = default;
};

struct Occurrence {
  Word host;
  Position pos;
  Word pattern;
};

/// Positions of `pattern` as a subtree of `host`, in pre-order.
std::vector<Position> find_occurrences(const Word& host, const Word& pattern);

/// A place where some s̄ sits inside a word.
struct Match {
  Position pos;
  std::size_t relation;
};

/// First match in pre-order, lowest relation index on ties.
std::optional<Match> find_match(const Word& u, const RelationSet& s);
std::vector<Match> all_matches(const Word& u, const RelationSet& s);

bool is_reduced_word(const Word& u, const RelationSet& s);

/// One step of a reduction: `coeff` times the S-word was subtracted.
struct CertificateStep {
  Coeff coeff;
  SWord sword;
  Word leading;  // sword.leading_word(S), cached
};

/// f - r = sum coeff_i * (a_i s_i b_i) for the residue r it came with.
using Certificate = std::vector<CertificateStep>;

Poly evaluate(const Certificate& certificate, const RelationSet& s);

enum class Selection {
  /// Greatest reducible word, pre-order-first occurrence, lowest relation.
  Greatest,
  /// Uniformly random reducible word, occurrence and relation.
  Random,
};

struct ReductionOptions {
  std::size_t step_cap = 1'000'000;
  Selection selection = Selection::Greatest;
  std::uint64_t seed = 0;
  bool record_certificate = true;
};

struct Reduced {
  Poly result;
  SWord used;
  Coeff coeff;
};

/// Rewrites the greatest reducible support word of f once, or returns
/// nullopt when every support word is reduced.
std::optional<Reduced> reduce_once(const Poly& f, const RelationSet& s);

struct NormalForm {
  Poly residue;
  Certificate certificate;
  std::size_t steps = 0;
};

/// Reduces to a fixpoint. Throws StepCapExceeded.
NormalForm reduce(const Poly& f, const RelationSet& s, const ReductionOptions& options = {});
Poly normal_form(const Poly& f, const RelationSet& s, const ReductionOptions& options = {});

/// Reduced words of length <= max_degree in deg-lex order. Throws
/// ResourceCapExceeded past `limits.max_words`.
std::vector<Word> enumerate_red(const RelationSet& s, std::size_t alphabet_size,
                                std::size_t max_degree, EnumerationLimits limits = {});
std::vector<Word> enumerate_red(const RelationSet& s, std::size_t max_degree,
                                EnumerationLimits limits = {});

}  // namespace nagsb
