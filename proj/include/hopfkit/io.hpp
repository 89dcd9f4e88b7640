#pragma once
// Structure-constant files: a line-oriented JSON interchange format for
// finite-dimensional presentations. Every line is one self-contained JSON
// object tagged by "record"; tables are explicit sparse entries (no implicit
// zero-filling) and scalars travel as canonical strings ("3/2", "zeta3^1 - 1",
// "(q^2+1)/(q)"). Export emits records in a fixed canonical order, so
// export(load(f)) is byte-identical for canonical files.
//
// Record grammar, one object per line:
//   {"record":"hopf","name":...,"field":...,"dim":N}       header, first line
//   {"record":"basis","names":[...]}                       exactly dim names
//   {"record":"unit","i":I,"c":C}                          unit coordinate
//   {"record":"counit","i":I,"c":C}                        counit value
//   {"record":"mult","i":I,"j":J,"k":K,"c":C}              e_i e_j gets C e_k
//   {"record":"comult","i":I,"l":L,"r":R,"c":C}            Delta e_i gets C e_l (x) e_r
//   {"record":"antipode","i":I,"j":J,"c":C}                S(e_i) gets C e_j
//
// load parses, range-checks every index (errc::parse_error with a line
// diagnostic), requires every table to be present (a file with the antipode
// table deleted is a parse error naming the table), and then runs the axiom
// battery via the checked builder (errc::axiom_failure with a witness).

#include <string>

#include "hopfkit/hopf.hpp"

namespace hopfkit {

// "Q" | "Fp:<p>" | "cyclotomic:<n>" (alias "zeta:<n>") | "Qq".
// Inverse of FieldSpec::str(); errc::parse_error on anything else.
FieldSpec parse_field_spec(const std::string& spec);

// Canonical serialization of a presentation (ends with a newline).
std::string export_algebra(const HopfPresentation& h);
void export_algebra_file(const HopfPresentation& h, const std::string& path);

// Parse + verify. `origin` names the source in diagnostics.
HopfPtr parse_algebra(const std::string& text, const std::string& origin);
HopfPtr load_algebra(const std::string& path);

}  // namespace hopfkit
