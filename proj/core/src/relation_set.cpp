#include "nagsb/relation_set.hpp"

#include <algorithm>

#include "nagsb/error.hpp"

namespace nagsb {

RelationSet::RelationSet(Alphabet alphabet, Field field)
    : alphabet_(std::move(alphabet)), field_(field) {}

RelationSet::RelationSet(Alphabet alphabet, Field field, std::vector<Poly> relations)
    : RelationSet(std::move(alphabet), field) {
  for (auto& r : relations) insert(std::move(r));
}

void RelationSet::insert(Poly relation) {
  if (relation.is_zero()) throw InvalidRelation("relation is the zero polynomial");
  for (const auto& t : relation) {
    if (t.coeff.field() != field_) {
      throw InvalidRelation("relation coefficient lies outside " + field_.name());
    }
    for (Generator g : t.word.flatten()) {
      if (g.id >= alphabet_.size()) {
        throw InvalidRelation("relation uses generator index " + std::to_string(g.id) +
                              " outside an alphabet of size " +
                              std::to_string(alphabet_.size()));
      }
    }
  }
  Poly monic = make_monic(relation);
  const Word& lead = monic.leading_word();
  for (std::size_t i = 1; i < monic.size(); ++i) {
    if (compare(monic.terms()[i].word, lead) >= 0) {
      throw InvalidRelation("relation has a lower term not below its leading word");
    }
  }
  index_[lead].push_back(relations_.size());
  relations_.push_back(std::move(monic));
}

std::span<const std::size_t> RelationSet::with_leading(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return {};
  return it->second;
}

RelationSet RelationSet::with(Poly relation) const {
  RelationSet copy = *this;
  copy.verified_gs_ = false;
  copy.insert(std::move(relation));
  return copy;
}

std::size_t RelationSet::max_leading_length() const {
  std::size_t m = 0;
  for (const auto& r : relations_) m = std::max(m, r.leading_word().length());
  return m;
}

}  // namespace nagsb
