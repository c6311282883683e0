#include "nagsb/ideal_span.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "nagsb/error.hpp"

namespace nagsb::oracle {

namespace {

// Substitutes `filler` for the unique leaf labelled `hole`.
Word substitute(const Word& frame, Generator hole, const Word& filler) {
  if (frame.is_leaf()) return frame.generator() == hole ? filler : frame;
  return Word::node(substitute(frame.left(), hole, filler),
                    substitute(frame.right(), hole, filler));
}

std::size_t count_letter(const Word& w, Generator g) {
  std::size_t n = 0;
  for (Generator x : w.flatten()) n += x == g ? 1 : 0;
  return n;
}

class Echelon {
 public:
  Echelon(std::size_t columns, Field field) : columns_(columns), field_(field) {}

  // Returns true when `row` was independent of the rows so far.
  bool insert(std::vector<Coeff> row) {
    for (const auto& [col, pivot] : pivots_) {
      if (row[col].is_zero()) continue;
      Coeff factor = row[col];
      for (std::size_t j = col; j < columns_; ++j) {
        if (!pivot[j].is_zero()) row[j] -= factor * pivot[j];
      }
    }
    std::size_t lead = 0;
    while (lead < columns_ && row[lead].is_zero()) ++lead;
    if (lead == columns_) return false;
    Coeff inv = row[lead].inverse();
    for (std::size_t j = lead; j < columns_; ++j) {
      if (!row[j].is_zero()) row[j] *= inv;
    }
    pivots_.emplace(lead, std::move(row));
    return true;
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  std::size_t columns_;
  Field field_;
  std::map<std::size_t, std::vector<Coeff>> pivots_;
};

struct Space {
  std::vector<Word> words;
  std::unordered_map<Word, std::size_t, WordHash> column;
};

Space word_space(std::size_t alphabet_size, std::size_t max_degree, const SpanLimits& limits) {
  Space sp;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    if (sp.words.size() + word_count(alphabet_size, d) > limits.max_columns) {
      throw ResourceCapExceeded("ideal-span matrix exceeds " +
                                std::to_string(limits.max_columns) + " columns");
    }
    for (auto& w : enumerate_words(alphabet_size, d)) sp.words.push_back(std::move(w));
  }
  for (std::size_t i = 0; i < sp.words.size(); ++i) sp.column.emplace(sp.words[i], i);
  return sp;
}

std::vector<Coeff> to_row(const Poly& p, const Space& sp, Field field) {
  std::vector<Coeff> row(sp.words.size(), Coeff::zero(field));
  for (const auto& t : p) row.at(sp.column.at(t.word)) = t.coeff;
  return row;
}

Field field_of(const std::vector<Poly>& relations) {
  for (const auto& r : relations) {
    if (!r.is_zero()) return r.leading_coeff().field();
  }
  return {};
}

// Calls `emit` with every S-word whose plugged leading word has exactly
// `degree` leaves.
template <class Emit>
void sword_rows(const std::vector<Poly>& relations, std::size_t alphabet_size,
                std::size_t degree, Emit&& emit) {
  const Generator hole{static_cast<std::uint32_t>(alphabet_size)};
  for (const auto& s : relations) {
    if (s.is_zero()) continue;
    std::size_t e = 0;
    for (const auto& t : s) e = std::max(e, t.word.length());
    if (e > degree) continue;
    std::size_t frame_leaves = degree - e + 1;
    for (const auto& frame : enumerate_words(alphabet_size + 1, frame_leaves)) {
      if (count_letter(frame, hole) != 1) continue;
      std::vector<Term> terms;
      for (const auto& t : s) terms.push_back({substitute(frame, hole, t.word), t.coeff});
      emit(Poly::from_terms(std::move(terms)));
    }
  }
}

}  // namespace

std::vector<std::size_t> quotient_dimensions(const std::vector<Poly>& relations,
                                             std::size_t alphabet_size,
                                             std::size_t max_degree, SpanLimits limits) {
  Field field = field_of(relations);
  Space sp = word_space(alphabet_size, max_degree, limits);
  Echelon echelon(sp.words.size(), field);
  std::vector<std::size_t> dims(max_degree + 1, 0);
  std::size_t words_so_far = 0, rows = 0;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    words_so_far += word_count(alphabet_size, d);
    sword_rows(relations, alphabet_size, d, [&](const Poly& p) {
      if (++rows > limits.max_rows) {
        throw ResourceCapExceeded("ideal-span matrix exceeds " + std::to_string(limits.max_rows) +
                                  " rows");
      }
      echelon.insert(to_row(p, sp, field));
    });
    dims[d] = words_so_far - echelon.rank();
  }
  return dims;
}

bool in_ideal_span(const Poly& f, const std::vector<Poly>& relations, std::size_t alphabet_size,
                   std::size_t degree, SpanLimits limits) {
  Field field = field_of(relations);
  if (!f.is_zero()) field = f.leading_coeff().field();
  Space sp = word_space(alphabet_size, degree, limits);
  for (const auto& t : f) {
    if (!sp.column.contains(t.word)) return false;
  }
  Echelon echelon(sp.words.size(), field);
  std::size_t rows = 0;
  for (std::size_t d = 1; d <= degree; ++d) {
    sword_rows(relations, alphabet_size, d, [&](const Poly& p) {
      if (++rows > limits.max_rows) {
        throw ResourceCapExceeded("ideal-span matrix exceeds " + std::to_string(limits.max_rows) +
                                  " rows");
      }
      echelon.insert(to_row(p, sp, field));
    });
  }
  return f.is_zero() || !echelon.insert(to_row(f, sp, field));
}

}  // namespace nagsb::oracle
