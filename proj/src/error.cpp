#include "gsslab/error.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

#include "gsslab/config.hpp"

namespace gsslab {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::parse: return "parse error";
    case Errc::invalid_input: return "invalid input";
    case Errc::out_of_range: return "out of range";
    case Errc::not_primitive: return "not primitive";
    case Errc::invariant: return "invariant violation";
  }
  return "error";
}

int max_supported_degree() {
  const char* env = std::getenv("GSSLAB_MAX_DEGREE");
  if (env == nullptr || *env == '\0') return kHardMaxDegree;
  std::string_view text{env};
  int value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || value < kMinDegree ||
      value > kHardMaxDegree) {
    throw Error(Errc::out_of_range, "GSSLAB_MAX_DEGREE must be an integer in [" +
                                        std::to_string(kMinDegree) + ", " +
                                        std::to_string(kHardMaxDegree) + "], got '" +
                                        std::string(text) + "'");
  }
  return value;
}

}  // namespace gsslab
