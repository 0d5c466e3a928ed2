#pragma once
// Error categories and the exception type shared by the whole library.
// The CLI prints errc_name() as part of its one-line diagnostics, so the
// names are part of the external interface.

#include <stdexcept>
#include <string>

namespace gk1 {

enum class Errc {
  InvalidAlphabet,
  InvalidWord,
  NotAPrefixCode,
  NotAMember,
  NotMaximalBinaryCode,
  AlphabetMismatch,
  ImpossibleCodeSize,
  NotInDomainCode,
  InvalidQuery,
  InvalidTable,
  InvalidEncoding,
  ParseError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidAlphabet:      return "InvalidAlphabet";
    case Errc::InvalidWord:          return "InvalidWord";
    case Errc::NotAPrefixCode:       return "NotAPrefixCode";
    case Errc::NotAMember:           return "NotAMember";
    case Errc::NotMaximalBinaryCode: return "NotMaximalBinaryCode";
    case Errc::AlphabetMismatch:     return "AlphabetMismatch";
    case Errc::ImpossibleCodeSize:   return "ImpossibleCodeSize";
    case Errc::NotInDomainCode:      return "NotInDomainCode";
    case Errc::InvalidQuery:         return "InvalidQuery";
    case Errc::InvalidTable:         return "InvalidTable";
    case Errc::InvalidEncoding:      return "InvalidEncoding";
    case Errc::ParseError:           return "ParseError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace gk1
