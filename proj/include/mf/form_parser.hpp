#ifndef MF_FORM_PARSER_HPP
#define MF_FORM_PARSER_HPP

#include <string>

#include "mf/qseries.hpp"

namespace mf {

/// Builds a q-expansion from a product expression.
///
///   expr  := term ('*' term)*
///   term  := atom ('^' integer)?
///   atom  := identifier | '(' expr ')'
///
/// Identifiers: E0, E<even k >= 4>, delta, j, eigenform<k>.  Exponents may
/// be negative ("delta^-1").  The result carries the declared weight summed
/// from its factors.  Throws ParseError with the offending position.
QSeries parse_form(const std::string& text, long prec);

}  // namespace mf

#endif
