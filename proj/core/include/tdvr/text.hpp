#pragma once

// Text syntax for scalars, elements and term orders.
//
//   scalar   EquiChar:  c0 + c1*pi + c2*pi^2 ...   MixedChar: plain integers
//   element  terms joined by + / -, each  SCALAR * MONO * e<l>  with '*'
//            optional; coefficients with several pi-terms are parenthesized,
//            e.g. "(1+pi)*x^2 + pi*y". The component marker is mandatory when
//            the module rank exceeds 1.
//   order    "<lex|deglex|degrevlex> <pot|top> [l_1 ... l_r]"

#include <string>
#include <string_view>

#include "tdvr/freemod.hpp"

namespace tdvr {

/// Throws ParseError; columns are 1-based offsets into `text` shifted by
/// `column_offset`, and `line` is echoed into the diagnostic.
Scalar parse_scalar(const RingSpec& ring, std::string_view text, std::size_t line = 0,
                    std::size_t column_offset = 0);
Element parse_element(const ModulePtr& module, std::string_view text, std::size_t line = 0,
                      std::size_t column_offset = 0);
TermOrder parse_term_order(std::string_view text, std::uint32_t rank);

std::string to_string(const Monomial& x, const std::vector<std::string>& var_names);
std::string to_string(const ModuleMonomial& x, const FreeModule& module);
/// Canonical form: terms in descending order, joined by " + ".
std::string to_string(const Element& f);

}  // namespace tdvr
