#ifndef VDG_COMMON_HPP
#define VDG_COMMON_HPP

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace vdg {

/// Exact unbounded integer used for group orders and subspace counts.
using Bigint = boost::multiprecision::cpp_int;

/// A family/graph string could not be parsed (CLI exit code 2).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Parameters violate a documented invariant (CLI exit code 3).
struct InvariantError : std::runtime_error {
  explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation's precondition does not hold for the given input (CLI exit code 4).
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// Cooperative deadline exceeded inside a long-running search.
struct TimeoutError : std::runtime_error {
  explicit TimeoutError(const std::string& what) : std::runtime_error(what) {}
};

/// A checked implication failed on real data; verification must stop loudly.
struct RefutationError : std::runtime_error {
  explicit RefutationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vdg

#endif  // VDG_COMMON_HPP
