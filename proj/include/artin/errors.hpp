#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace artin {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed textual input; carries the 1-based position of the problem.
  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column "
                + std::to_string(column) + ": " + what),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept { return _line; }
    std::size_t column() const noexcept { return _column; }

   private:
    std::size_t _line;
    std::size_t _column;
  };

  //! A precondition on the arguments of an operation was violated.
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  //! Group enumeration ran past its element bound.
  class NotFiniteError : public Error {
   public:
    using Error::Error;
  };

}  // namespace artin
