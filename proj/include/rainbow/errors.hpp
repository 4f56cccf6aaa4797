#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

enum class Errc {
  out_of_range,
  self_loop,
  duplicate_edge,
  bad_color,
  no_such_edge,
  invalid_params,
  degree_too_low,
  not_in_v0,
  invalid_packing,
  budget_exceeded,
  parse_error,
};

inline const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::out_of_range: return "OutOfRange";
    case Errc::self_loop: return "SelfLoop";
    case Errc::duplicate_edge: return "DuplicateEdge";
    case Errc::bad_color: return "BadColor";
    case Errc::no_such_edge: return "NoSuchEdge";
    case Errc::invalid_params: return "InvalidParams";
    case Errc::degree_too_low: return "DegreeTooLow";
    case Errc::not_in_v0: return "NotInV0";
    case Errc::invalid_packing: return "InvalidPacking";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace rainbow
