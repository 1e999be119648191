#pragma once

#include "agc/affine_code.hpp"
#include "agc/matrix.hpp"
#include "agc/qcomb.hpp"

#include <iosfwd>
#include <string>

namespace agc {

/// Header line "q l lp n k", then k lines of n element indices.
void write_generator_text(std::ostream& os, const CodeParams& params, const LinearCode& code);

struct GeneratorFile {
  CodeParams params;
  Matrix generator;
};
/// Parses the text format; throws std::runtime_error on malformed input.
GeneratorFile read_generator_text(std::istream& is);

/// JSON object with a "header" describing the field, the minor basis order
/// and the point encoding, and "rows" holding the generator.
std::string generator_json(const CodeParams& params, const LinearCode& code);

/// Plain text table of the parameters "n k d A_d |G| |stab|".
std::string param_table_text(const CodeParams& params);
std::string param_table_json(const CodeParams& params);

}  // namespace agc
