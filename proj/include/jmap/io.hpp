#pragma once

#include "jmap/complexmat.hpp"
#include "jmap/goodpair.hpp"
#include "jmap/matrix.hpp"
#include "jmap/mpoly.hpp"
#include "jmap/universal.hpp"

#include <string>

namespace jmap {

// Matrix text format: a header line "n <size>" followed by n rows of n
// whitespace-separated rationals ("p" or "p/q"). Round-trips exactly.
std::string format_matrix(const RMatrix& a);
RMatrix parse_matrix(const std::string& text);

// Complex matrix format for the floating fixtures: header "cn <size>",
// entries "re" or "re,im".
std::string format_cmatrix(const CMatrix& a);
CMatrix parse_cmatrix(const std::string& text);

// Universal spec format: "partition p1 ... pm", "perm a1 ... am", then one
// line of p_k rationals per block (j,k) in row-major order.
std::string format_universal_spec(const UniversalSpec& spec);
UniversalSpec parse_universal_spec(const std::string& text);

// Machine polynomial format: per term "c e1 e2 ... en". A single line holds
// a whole polynomial as concatenated terms; the zero polynomial is an empty
// line.
std::string format_mpoly_machine(const MPoly& p);
MPoly parse_mpoly_machine(const std::string& line, int nvars);

// Map format: header "polymap <n>", then one line per component.
std::string format_polymap_machine(const PolyMap& f);
PolyMap parse_polymap_machine(const std::string& text);

// Equation system format: header "<n> <d> <count>", then one polynomial per
// line in the machine format with variables a11,a12,...,ann.
std::string format_equation_system(const JacEquationSystem& sys);
JacEquationSystem parse_equation_system(const std::string& text);

}  // namespace jmap
