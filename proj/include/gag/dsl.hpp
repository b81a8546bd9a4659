#pragma once

// Text syntax for diagram terms and ZH circuits.
//
//   term  := atom { (";" | "*") atom }          (one precedence level, left)
//   atom  := "id" | "id0" | "swap" | gen ["'"] | "(" term ")" ["'"] | sugar ["'"]
//   gen   := "copy" | "del" | "add" | "zero" | "mul" | "one" | "sc(" elem ")"
//            | "z1" | "sdown"
//   sugar := "poly[" polys "]" | "ideal[" polys "]" | "state(" elem ")"
//
// Polynomials use variables x1, x2, ...; the wire count is the highest index
// mentioned, or an explicit "poly[n; ...]" / "ideal[n; ...]" override.  ZH
// circuits use the same shape with generators Z(n,m), H(n,m), xstate(elem).

#include <string>

#include "gag/term.hpp"
#include "gag/zh.hpp"

namespace gag {

// Throws parse_error (with offset) on bad syntax, arity mismatch in ";", a
// generator outside `lang`, or Fourier generators over the rationals.
TermPtr parse_term(const std::string& text, const Ring& ring,
                   Language lang = Language::GAG_FOURIER);

ZhTermPtr parse_zh_term(const std::string& text, const FieldSpec* f);

}  // namespace gag
