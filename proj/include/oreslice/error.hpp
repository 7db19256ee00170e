#ifndef ORESLICE_ERROR_HPP_
#define ORESLICE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oreslice {

  // Base for every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)),
          _position(position) {}

    std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

  // An internal cross-check failed. Signals a bug, not bad input.
  class VerificationError : public Error {
   public:
    using Error::Error;
  };

}  // namespace oreslice

#endif  // ORESLICE_ERROR_HPP_
