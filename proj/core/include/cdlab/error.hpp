// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cdlab {

enum class ErrorKind {
  InvalidInput,
  RankDeficient,
  BadSupport,
  SingularTransform,
  TooLarge,
  TrivialKernel,
  FullRankKernel,
  PreconditionViolated,
  BudgetExceeded,
  ModulusMismatch,
  EmptySet,
  NotInDomain,
  NoSolution,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so front ends can map
// it to an exit code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace cdlab
