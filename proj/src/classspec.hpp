#pragma once

#include <string>

#include "classes.hpp"

namespace ptx {

// Parses the text grammar for classes, e.g.
//   P3(k=6): d=3; a=1,1,1,1,1,1
//   CUBE(k=4): d=1,1,1; a=1,0,1,1
//   PERM-P3(k=4): d=0; a=0,0,0,0; b=1,0,0,0,0,0
// Group 'b=0' (a single zero) abbreviates an all-zero block, and the b group
// is only legal on PERM models (an all-zero b is tolerated on side models).
// Parse failures throw Error(ParseError) with a 1-based column.
CurveClass parse_class_spec(const std::string& text);

}  // namespace ptx
