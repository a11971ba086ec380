#pragma once

#include <stdexcept>
#include <string>

namespace jordan {

enum class ErrorKind {
  DegenerateInput,
  SingularLocalInverse,
  NotNilpotent,
  NotUnipotent,
  ShapeError,
  ExactModeUnavailable,
  ClusterAmbiguity,
  NotInvertible,
  SizeLimit,
  NotSemisimple,
  NotMember,
  InconsistentInput,
  ParseError,
  Internal,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::SingularLocalInverse: return "SingularLocalInverse";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::NotUnipotent: return "NotUnipotent";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::ExactModeUnavailable: return "ExactModeUnavailable";
    case ErrorKind::ClusterAmbiguity: return "ClusterAmbiguity";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::InconsistentInput: return "InconsistentInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace jordan
