#pragma once

#include <cstddef>
#include <vector>

#include "nagsb/poly.hpp"

/// Linear-algebra cross-check for reduction-based answers. Nothing here
/// touches the rewriting engine: S-words are built by direct tree
/// substitution and ranks come from Gaussian elimination.
namespace nagsb::oracle {

struct SpanLimits {
  std::size_t max_columns = 20'000;
  std::size_t max_rows = 200'000;
};

/// For d = 0..max_degree, entry d is the dimension of
/// M_{<=d} / (Id(S) ∩ M_{<=d}), where M_{<=d} is spanned by words of at
/// most d leaves and the ideal part by S-words (a s b) with |a s̄ b| <= d.
/// Throws ResourceCapExceeded past `limits`.
std::vector<std::size_t> quotient_dimensions(const std::vector<Poly>& relations,
                                             std::size_t alphabet_size,
                                             std::size_t max_degree, SpanLimits limits = {});

/// Whether `f` lies in the span of S-words (a s b) with |a s̄ b| <= degree.
bool in_ideal_span(const Poly& f, const std::vector<Poly>& relations,
                   std::size_t alphabet_size, std::size_t degree, SpanLimits limits = {});

}  // namespace nagsb::oracle
