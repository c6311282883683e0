#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "nagsb/poly.hpp"

namespace nagsb {

/// An immutable set S of monic relations over a fixed alphabet and field,
/// indexed by leading word.
class RelationSet {
 public:
  RelationSet(Alphabet alphabet, Field field = {});
  /// Nonzero relations are scaled to monic; zero relations and letters
  /// outside the alphabet are rejected with InvalidRelation.
  RelationSet(Alphabet alphabet, Field field, std::vector<Poly> relations);

  const Alphabet& alphabet() const { return alphabet_; }
  Field field() const { return field_; }
  std::size_t size() const { return relations_.size(); }
  bool empty() const { return relations_.empty(); }
  const Poly& operator[](std::size_t i) const { return relations_.at(i); }
  const std::vector<Poly>& relations() const { return relations_; }

  /// Indices of relations whose leading word is `w`, ascending.
  std::span<const std::size_t> with_leading(const Word& w) const;
  bool is_leading_word(const Word& w) const { return index_.contains(w); }

  /// Copy with one more relation; the verified flag is dropped.
  RelationSet with(Poly relation) const;

  /// Set only by the Gröbner–Shirshov checks in gsbasis.hpp.
  bool verified_gs() const { return verified_gs_; }

  std::size_t max_leading_length() const;

 private:
  friend RelationSet mark_verified(RelationSet s);

  void insert(Poly relation);

  Alphabet alphabet_;
  Field field_;
  std::vector<Poly> relations_;
  std::unordered_map<Word, std::vector<std::size_t>, WordHash> index_;
  bool verified_gs_ = false;
};

}  // namespace nagsb
