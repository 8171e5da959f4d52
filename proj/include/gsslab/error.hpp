#pragma once

#include <stdexcept>
#include <string>

namespace gsslab {

enum class Errc {
  parse,          // malformed polynomial / bit string / format name
  invalid_input,  // well-formed but violates a precondition
  out_of_range,   // degree or range outside the supported window
  not_primitive,  // polynomial cannot drive an m-sequence
  invariant,      // internal invariant violated; results must not be trusted
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gsslab
