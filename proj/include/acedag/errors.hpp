#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace acedag {

/// Malformed input in one of the text formats. `offset` is the byte offset of
/// the offending token (or line) from the start of the stream.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class UnsupportedVersionError : public FormatError {
 public:
  UnsupportedVersionError(const std::string& version, std::size_t offset)
      : FormatError("unsupported graph format version '" + version + "'", offset) {}
};

/// A graph seed has no pooled value.
class MissingSeedError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A coefficient refers to a tuple that is not a node of the graph.
class UnknownTupleError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace acedag
