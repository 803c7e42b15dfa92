#ifndef COMMGROUP_ERROR_HPP
#define COMMGROUP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace commgroup {

enum class ErrorCode {
  Alphabet,
  Parse,
  NotInCommutatorSubgroup,
  NotInNormalClosure,
  NonzeroExponentSum,
  InvalidSymbol,
  NotInKernel,
  InvalidArgument,
  Overflow,
  IndexOutOfRange,
};

/// Machine-readable name, e.g. "not-in-commutator-subgroup".
std::string_view error_code_name(ErrorCode code);

/// Domain error raised by every module. The CLI prints these as
/// `error: <code>: <detail>` and exits with status 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Internal invariant violation; always checked, independent of NDEBUG.
[[noreturn]] void invariant_failure(const char* what, const char* file, int line);

}  // namespace commgroup

#define COMMGROUP_CHECK(cond, what)                                  \
  do {                                                               \
    if (!(cond)) ::commgroup::invariant_failure(what, __FILE__, __LINE__); \
  } while (0)

#endif
