#include "musurf/rat.hpp"

#include "musurf/errors.hpp"

namespace musurf {

Rat rat_parse(const std::string& text) {
  if (text.empty()) throw AlgebraError(Errc::invalid_input, "empty rational literal");
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
    if (!ok) throw AlgebraError(Errc::invalid_input, "bad rational literal: " + text);
  }
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw AlgebraError(Errc::invalid_input, "bad rational literal: " + text);
  if (q.get_den() == 0)
    throw AlgebraError(Errc::invalid_input, "zero denominator: " + text);
  q.canonicalize();
  return q;
}

}  // namespace musurf
