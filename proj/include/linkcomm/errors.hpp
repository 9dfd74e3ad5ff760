#pragma once

#include <stdexcept>
#include <string>

namespace linkcomm {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Graph construction / input.
class EmptyInput : public Error {
 public:
  using Error::Error;
};
class SelfLoop : public Error {
 public:
  using Error::Error;
};
class DuplicateEdge : public Error {
 public:
  using Error::Error;
};
class DisconnectedGraph : public Error {
 public:
  using Error::Error;
};

// Link-set arithmetic.
class SizeMismatch : public Error {
 public:
  using Error::Error;
};
class EmptySet : public Error {
 public:
  using Error::Error;
};

// Landscape enumeration guard.
class TooLarge : public Error {
 public:
  using Error::Error;
};

// Subgraph mutation.
class IllegalToggle : public Error {
 public:
  using Error::Error;
};

// Search.
class EmptySeed : public Error {
 public:
  using Error::Error;
};
class DegenerateParents : public Error {
 public:
  using Error::Error;
};
class AlreadyCrossed : public Error {
 public:
  using Error::Error;
};
class InvalidConfig : public Error {
 public:
  using Error::Error;
};

}  // namespace linkcomm
