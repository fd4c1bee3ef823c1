#pragma once

// Instance files.
//
//   # comment
//   ring p=<prime> a=<length> flavor=pi|p
//   vars x y ...
//   rank <r>                       (default 1)
//   order <lex|deglex|degrevlex> [pot|top] [priority] [l_1 ... l_r]
//   gens: [first generator]
//   <generator>
//   ...
//
// Header lines may come in any order before `gens:`; every non-blank line
// after it is one generator in element syntax.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tdvr/freemod.hpp"

namespace tdvr::cli {

struct Instance {
  ModulePtr module;
  std::vector<Element> generators;
};

/// Throws ParseError with line and column.
Instance parse_instance(std::string_view text);
/// Reads the file; a missing file is a ParseError at line 0.
Instance load_instance(const std::string& path);

/// Canonical text; parse_instance(format_instance(x)) reproduces x.
std::string format_instance(const Instance& inst);

std::uint64_t fnv1a64(std::string_view bytes);
/// FNV-1a 64 of the canonical text, as 16 lowercase hex digits.
std::string fingerprint(const Instance& inst);

/// Same generators under a different term order.
Instance reorder(const Instance& inst, const TermOrder& order);

}  // namespace tdvr::cli
