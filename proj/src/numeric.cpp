#include "tautcert/numeric.hpp"

#include <sstream>

#include "tautcert/error.hpp"

namespace tautcert {

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << rat_num(r);
  if (rat_den(r) != 1) os << "/" << rat_den(r);
  return os.str();
}

Rat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) fail(ErrorCode::bad_argument, "zero denominator in '" + text + "'");
    return Rat(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorCode::bad_argument, "malformed rational '" + text + "'");
  }
}

}  // namespace tautcert
