#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace nagsb {

/// Index of a letter in a declared alphabet; the order on letters is the
/// order on indices.
struct Generator {
  std::uint32_t id = 0;

  friend constexpr auto operator<=>(Generator, Generator) = default;
};

/// Finite, linearly ordered alphabet. Declaration order fixes the letter
/// order, independently of how the names sort as strings.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  /// x0, x1, ..., x{n-1}
  static Alphabet indexed(std::size_t size, std::string_view prefix = "x");

  std::size_t size() const { return names_.size(); }
  const std::string& name(Generator g) const { return names_.at(g.id); }
  const std::vector<std::string>& names() const { return names_; }
  /// Throws ParseError for undeclared names.
  Generator lookup(std::string_view name) const;
  bool contains(std::string_view name) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> ids_;
};

enum class Side : std::uint8_t { Left, Right };

/// Root-to-node path; empty means the root.
using Position = std::vector<Side>;

std::string render_position(const Position& pos);

/// A non-associative word: an immutable binary tree with letters at the
/// leaves. Copies share structure.
class Word {
 public:
  static Word leaf(Generator g);
  static Word node(Word left, Word right);

  bool is_leaf() const { return node_->left == nullptr; }
  Generator generator() const { return node_->letter; }
  /// Precondition: !is_leaf().
  const Word& left() const { return *node_->left; }
  const Word& right() const { return *node_->right; }

  /// Number of leaves.
  std::size_t length() const { return node_->length; }
  std::size_t hash() const { return node_->hash; }

  /// The subtree reached by following `pos`, or nullptr if the path leaves
  /// the tree.
  const Word* subtree(std::span<const Side> pos) const;
  /// Copy of this word with the subtree at `pos` replaced; throws
  /// MalformedContext on an invalid path.
  Word replace(std::span<const Side> pos, const Word& filler) const;

  /// Leaf sequence (the associative word underneath).
  std::vector<Generator> flatten() const;

  /// Calls `visit(position, subtree)` on every node in pre-order.
  void for_each_subtree(const std::function<void(const Position&, const Word&)>& visit) const;

  friend bool operator==(const Word& a, const Word& b);
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  struct Node {
    std::shared_ptr<const Word> left;
    std::shared_ptr<const Word> right;
    Generator letter;
    std::size_t length;
    std::size_t hash;
  };
  explicit Word(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Deg-lex order: longer words are greater; words of equal length compare
/// their left factors, then their right factors; letters compare by index.
std::strong_ordering compare(const Word& u, const Word& v);

inline std::size_t length(const Word& u) { return u.length(); }

/// word := NAME | "(" word " " word ")"
Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string render_word(const Word& u, const Alphabet& alphabet);

/// Recursive-descent helper shared with the polynomial grammar: parses one
/// word starting at `pos` and advances it.
Word parse_word_at(std::string_view text, std::size_t& pos, const Alphabet& alphabet);

struct EnumerationLimits {
  std::size_t max_words = 2'000'000;
};

/// Number of words of exactly `degree` leaves over `alphabet_size` letters:
/// Catalan(degree-1) * alphabet_size^degree. Saturates at SIZE_MAX.
std::size_t word_count(std::size_t alphabet_size, std::size_t degree);

/// All words of exactly `degree` leaves, strictly increasing in deg-lex.
std::vector<Word> enumerate_words(std::size_t alphabet_size, std::size_t degree,
                                  EnumerationLimits limits = {});

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept { return w.hash(); }
};

}  // namespace nagsb
