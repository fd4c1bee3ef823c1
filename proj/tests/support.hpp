#pragma once

#include <random>
#include <string>
#include <vector>

#include "tdvr/freemod.hpp"
#include "tdvr/text.hpp"

namespace tdvr::testing {

inline RingSpec pi_ring(std::uint32_t p, std::uint32_t a) { return RingSpec(p, a, Flavor::EquiChar); }
inline RingSpec zp_ring(std::uint32_t p, std::uint32_t a) { return RingSpec(p, a, Flavor::MixedChar); }

inline ModulePtr module(const RingSpec& r, std::vector<std::string> vars, std::uint32_t rank = 1,
                        const std::string& order = "") {
  if (order.empty()) return make_module(r, std::move(vars), rank);
  return make_module(r, std::move(vars), rank, parse_term_order(order, rank));
}

inline Element el(const ModulePtr& m, const std::string& text) { return parse_element(m, text); }

inline std::vector<Element> els(const ModulePtr& m, std::initializer_list<const char*> texts) {
  std::vector<Element> out;
  for (const char* t : texts) out.push_back(parse_element(m, t));
  return out;
}

inline Scalar sc(const RingSpec& r, const std::string& text) { return parse_scalar(r, text); }

}  // namespace tdvr::testing
