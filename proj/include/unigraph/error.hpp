#pragma once

#include <stdexcept>
#include <string>

namespace unigraph {

/// Input exceeds a hard vertex or enumeration bound.
class CapacityError : public std::length_error {
public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

/// Malformed text input (graph6, degree sequences, pairs, class tokens).
class ParseError : public std::invalid_argument {
public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// A degree sequence that no simple graph realizes.
class NotGraphicError : public std::invalid_argument {
public:
  explicit NotGraphicError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace unigraph
