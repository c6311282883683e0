#include "nagsb/rewrite.hpp"

#include <map>
#include <random>
#include <unordered_map>

#include "nagsb/error.hpp"

namespace nagsb {

Context Context::at(const Word& host, const Position& pos) {
  Context c;
  const Word* w = &host;
  for (Side s : pos) {
    if (w->is_leaf()) {
      throw MalformedContext("position " + render_position(pos) + " is not a node of the host");
    }
    if (s == Side::Left) {
      c.frames_.push_back({Side::Left, w->right()});
      w = &w->left();
    } else {
      c.frames_.push_back({Side::Right, w->left()});
      w = &w->right();
    }
  }
  return c;
}

Context Context::then_right(Word right) const {
  Context c;
  c.frames_.reserve(frames_.size() + 1);
  c.frames_.push_back({Side::Left, std::move(right)});
  c.frames_.insert(c.frames_.end(), frames_.begin(), frames_.end());
  return c;
}

Context Context::then_left(Word left) const {
  Context c;
  c.frames_.reserve(frames_.size() + 1);
  c.frames_.push_back({Side::Right, std::move(left)});
  c.frames_.insert(c.frames_.end(), frames_.begin(), frames_.end());
  return c;
}

Word Context::plug(const Word& filler) const {
  Word w = filler;
  for (auto it = frames_.rbegin(); it != frames_.rend(); ++it) {
    w = it->side == Side::Left ? Word::node(std::move(w), it->sibling)
                               : Word::node(it->sibling, std::move(w));
  }
  return w;
}

Poly Context::plug(const Poly& f) const {
  // The monomial property keeps plugged terms in the same relative order.
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f) terms.push_back({plug(t.word), t.coeff});
  return Poly::from_terms(std::move(terms));
}

Position Context::hole() const {
  Position p;
  p.reserve(frames_.size());
  for (const auto& f : frames_) p.push_back(f.side);
  return p;
}

std::size_t Context::leaves() const {
  std::size_t n = 0;
  for (const auto& f : frames_) n += f.sibling.length();
  return n;
}

std::string Context::render(const Alphabet& alphabet) const {
  std::string out = "_";
  for (auto it = frames_.rbegin(); it != frames_.rend(); ++it) {
    auto sib = render_word(it->sibling, alphabet);
    out = it->side == Side::Left ? "(" + out + " " + sib + ")" : "(" + sib + " " + out + ")";
  }
  return out;
}

Poly plug(const Context& context, const Poly& f) { return context.plug(f); }

Word SWord::leading_word(const RelationSet& s) const {
  return context.plug(s[relation].leading_word());
}

Poly SWord::value(const RelationSet& s) const { return context.plug(s[relation]); }

std::vector<Position> find_occurrences(const Word& host, const Word& pattern) {
  std::vector<Position> out;
  if (pattern.length() > host.length()) return out;
  host.for_each_subtree([&](const Position& pos, const Word& sub) {
    if (sub.length() == pattern.length() && sub == pattern) out.push_back(pos);
  });
  return out;
}

std::optional<Match> find_match(const Word& u, const RelationSet& s) {
  // Pre-order walk with early exit.
  Position pos;
  std::optional<Match> found;
  auto walk = [&](auto&& self, const Word& w) -> bool {
    if (auto idx = s.with_leading(w); !idx.empty()) {
      found = Match{pos, idx.front()};
      return true;
    }
    if (w.is_leaf()) return false;
    pos.push_back(Side::Left);
    if (self(self, w.left())) return true;
    pos.back() = Side::Right;
    if (self(self, w.right())) return true;
    pos.pop_back();
    return false;
  };
  walk(walk, u);
  return found;
}

std::vector<Match> all_matches(const Word& u, const RelationSet& s) {
  std::vector<Match> out;
  u.for_each_subtree([&](const Position& pos, const Word& sub) {
    for (std::size_t i : s.with_leading(sub)) out.push_back({pos, i});
  });
  return out;
}

bool is_reduced_word(const Word& u, const RelationSet& s) {
  return s.empty() || !find_match(u, s).has_value();
}

Poly evaluate(const Certificate& certificate, const RelationSet& s) {
  Poly total;
  for (const auto& step : certificate) total += step.sword.value(s) * step.coeff;
  return total;
}

namespace {

struct Descending {
  bool operator()(const Word& a, const Word& b) const { return compare(a, b) > 0; }
};

using WorkingPoly = std::map<Word, Coeff, Descending>;

// Replaces coeff * (a s̄ b) by coeff * (a (s̄ - s) b).
void rewrite_at(WorkingPoly& work, WorkingPoly::iterator it, const Context& ctx,
                const Poly& relation) {
  Coeff alpha = it->second;
  work.erase(it);
  for (std::size_t i = 1; i < relation.size(); ++i) {
    const auto& t = relation.terms()[i];
    Coeff delta = -(alpha * t.coeff);
    auto [slot, inserted] = work.try_emplace(ctx.plug(t.word), delta);
    if (!inserted) {
      slot->second += delta;
      if (slot->second.is_zero()) work.erase(slot);
    }
  }
}

Poly to_poly(const WorkingPoly& work) {
  std::vector<Term> terms;
  terms.reserve(work.size());
  for (const auto& [w, c] : work) terms.push_back({w, c});
  return Poly::from_terms(std::move(terms));
}

}  // namespace

std::optional<Reduced> reduce_once(const Poly& f, const RelationSet& s) {
  for (const auto& t : f) {
    auto m = find_match(t.word, s);
    if (!m) continue;
    SWord used{Context::at(t.word, m->pos), m->relation};
    Poly result = f - used.value(s) * t.coeff;
    return Reduced{std::move(result), std::move(used), t.coeff};
  }
  return std::nullopt;
}

NormalForm reduce(const Poly& f, const RelationSet& s, const ReductionOptions& options) {
  NormalForm out;
  if (s.empty()) {
    out.residue = f;
    return out;
  }
  WorkingPoly work;
  for (const auto& t : f) work.emplace(t.word, t.coeff);

  auto record = [&](const Coeff& alpha, Context ctx, std::size_t rel, const Word& word) {
    if (++out.steps > options.step_cap) throw StepCapExceeded(options.step_cap);
    if (options.record_certificate) {
      out.certificate.push_back({alpha, SWord{std::move(ctx), rel}, word});
    }
  };

  if (options.selection == Selection::Greatest) {
    // Words above the cursor are reduced and rewriting only creates
    // smaller words, so one descending sweep suffices.
    auto it = work.begin();
    while (it != work.end()) {
      auto m = find_match(it->first, s);
      if (!m) {
        ++it;
        continue;
      }
      Word word = it->first;
      Context ctx = Context::at(word, m->pos);
      record(it->second, ctx, m->relation, word);
      rewrite_at(work, it, ctx, s[m->relation]);
      it = work.upper_bound(word);
    }
  } else {
    std::mt19937_64 rng(options.seed);
    std::unordered_map<Word, std::vector<Match>, WordHash> matches;
    auto matches_of = [&](const Word& w) -> const std::vector<Match>& {
      auto found = matches.find(w);
      if (found == matches.end()) found = matches.emplace(w, all_matches(w, s)).first;
      return found->second;
    };
    std::vector<WorkingPoly::iterator> reducible;
    while (true) {
      reducible.clear();
      for (auto it = work.begin(); it != work.end(); ++it) {
        if (!matches_of(it->first).empty()) reducible.push_back(it);
      }
      if (reducible.empty()) break;
      auto pick = reducible[std::uniform_int_distribution<std::size_t>(0, reducible.size() - 1)(rng)];
      const auto& ms = matches_of(pick->first);
      const Match& m = ms[std::uniform_int_distribution<std::size_t>(0, ms.size() - 1)(rng)];
      Context ctx = Context::at(pick->first, m.pos);
      record(pick->second, ctx, m.relation, pick->first);
      rewrite_at(work, pick, ctx, s[m.relation]);
    }
  }
  out.residue = to_poly(work);
  return out;
}

Poly normal_form(const Poly& f, const RelationSet& s, const ReductionOptions& options) {
  ReductionOptions quiet = options;
  quiet.record_certificate = false;
  return reduce(f, s, quiet).residue;
}

std::vector<Word> enumerate_red(const RelationSet& s, std::size_t alphabet_size,
                                std::size_t max_degree, EnumerationLimits limits) {
  // A word is reduced iff both factors are reduced and it is not itself a
  // leading word, so reduced words are built from reduced factors only.
  std::vector<std::vector<Word>> by_degree(max_degree + 1);
  std::size_t total = 0;
  auto push = [&](std::vector<Word>& bucket, Word w) {
    if (s.is_leading_word(w)) return;
    if (++total > limits.max_words) {
      throw ResourceCapExceeded("reduced-word enumeration exceeds the cap of " +
                                std::to_string(limits.max_words));
    }
    bucket.push_back(std::move(w));
  };
  if (max_degree >= 1) {
    for (std::uint32_t g = 0; g < alphabet_size; ++g) push(by_degree[1], Word::leaf({g}));
  }
  for (std::size_t d = 2; d <= max_degree; ++d) {
    for (std::size_t a = 1; a < d; ++a) {
      for (const auto& l : by_degree[a]) {
        for (const auto& r : by_degree[d - a]) push(by_degree[d], Word::node(l, r));
      }
    }
  }
  std::vector<Word> out;
  out.reserve(total);
  for (auto& bucket : by_degree) {
    for (auto& w : bucket) out.push_back(std::move(w));
  }
  return out;
}

std::vector<Word> enumerate_red(const RelationSet& s, std::size_t max_degree,
                                EnumerationLimits limits) {
  return enumerate_red(s, s.alphabet().size(), max_degree, limits);
}

}  // namespace nagsb
