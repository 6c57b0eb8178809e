#pragma once

#include <stdexcept>
#include <string>

namespace skeinalt {

enum class ErrorCode {
  Parse,        // malformed input file or string
  Invalid,      // precondition violated / inconsistent value
  Unsupported,  // representable but outside the supported domain
  Limit,        // resource cap exceeded (e.g. crossing count)
  Internal,     // invariant broken inside the library
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace skeinalt
