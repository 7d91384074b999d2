#ifndef IFG_ERROR_HPP
#define IFG_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ifg {

// Bad input: malformed text, out-of-range indices, unknown symbols.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A size or search-space guard refused the request.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace ifg

#endif
