#pragma once

#include <string>

#include "grasslines/pencil.hpp"

namespace grasslines {

// JSON pencil file:
//   { "n": 3, "parity": "even", "A": [["0","-1",...], ...], "B": [[...], ...] }
// entries are rational strings "p/q" or integers. Serialization is canonical
// (reduced fractions, no "/1"), so write(read(x)) is a fixpoint.
AntisymPencil pencil_from_json_text(const std::string& text);
AntisymPencil pencil_from_file(const std::string& path);
std::string pencil_to_json_text(const AntisymPencil& p);

} // namespace grasslines
