#pragma once

#include <filesystem>
#include <istream>
#include <string>

#include "nagsb/akivis.hpp"
#include "nagsb/error.hpp"
#include "nagsb/relation_set.hpp"

namespace nagsb::io {

/// Unreadable or malformed input file; the message carries "name:line:".
class InputError : public Error {
 public:
  using Error::Error;
};

/// Presentation file:
///   generators: x1 x2 x3
///   <one relation per line in the polynomial grammar>
/// "#" starts a comment. Relations are scaled to monic.
RelationSet read_presentation(std::istream& in, Field field, const std::string& source = "<input>");
RelationSet load_presentation(const std::filesystem::path& path, Field field = {});

/// Inverse of read_presentation, up to comments.
std::string render_presentation(const RelationSet& s);

struct AkivisLoadOptions {
  Field field;
  bool check_identity = true;
};

/// Akivis file:
///   dim: n
///   alpha i j m value     (i > j only)
///   beta i j k n value
/// or "gamma i j m value" lines for a multiplication table, whose
/// commutator and associator define the algebra. Indices are 0-based and
/// missing entries are 0.
AkivisAlgebra read_akivis(std::istream& in, const AkivisLoadOptions& options,
                          const std::string& source = "<input>");
AkivisAlgebra load_akivis(const std::filesystem::path& path, const AkivisLoadOptions& options = {});

}  // namespace nagsb::io
