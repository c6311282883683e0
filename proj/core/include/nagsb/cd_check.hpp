#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "nagsb/ideal_span.hpp"
#include "nagsb/relation_set.hpp"
#include "nagsb/rewrite.hpp"

namespace nagsb {

struct CdOptions {
  std::uint64_t seed = 1;
  /// Random ideal elements drawn for the leading-word checks.
  std::size_t samples = 50;
  /// S-words per random ideal element.
  std::size_t max_swords = 4;
  ReductionOptions reduction;
  oracle::SpanLimits limits;
};

struct DegreeDimension {
  std::size_t degree = 0;
  /// Reduced words with at most `degree` leaves.
  std::size_t reduced_words = 0;
  /// Quotient dimension of the same filtered piece, from linear algebra.
  std::size_t oracle_dimension = 0;
};

struct CdReport {
  /// Nonzero ideal elements have a reducible leading word.
  bool leading_word_in_ideal = true;
  /// Reducing an ideal element to zero uses S-words with strictly
  /// decreasing leading words.
  bool decreasing_decomposition = true;
  /// Reduced-word counts agree with the oracle at every degree.
  bool reduced_words_form_basis = true;
  std::optional<std::size_t> first_failing_degree;
  std::vector<DegreeDimension> dimensions;
  std::size_t samples_checked = 0;

  bool passed() const {
    return leading_word_in_ideal && decreasing_decomposition && reduced_words_form_basis;
  }
};

/// Desk-scale check of the Composition-Diamond equivalences for `s` up to
/// words of `max_degree` leaves.
CdReport verify_cd_equivalences(const RelationSet& s, std::size_t alphabet_size,
                                std::size_t max_degree, const CdOptions& options = {});

/// Uniform-ish random word: random split points, random letters.
Word random_word(std::size_t alphabet_size, std::size_t length, std::mt19937_64& rng);

/// Random context whose plugged length with a filler of `filler_length`
/// leaves is exactly `total_length`.
Context random_context(std::size_t alphabet_size, std::size_t filler_length,
                       std::size_t total_length, std::mt19937_64& rng);

}  // namespace nagsb
