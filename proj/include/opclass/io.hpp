#pragma once

#include <string>

#include "opclass/classify.hpp"
#include "opclass/decompose.hpp"
#include "opclass/hardy.hpp"
#include "opclass/spectra.hpp"
#include "opclass/testkit.hpp"

namespace opclass {

// Matrix files: {"rows": r, "cols": c, "data": [[re, im], ...]} with data
// row-major and every entry a finite [re, im] pair.  Malformed input throws
// input_error with a message naming the offending field.
ComplexMatrix parse_matrix_json(const std::string& text);
ComplexMatrix read_matrix_json(const std::string& path);
std::string matrix_to_json(const ComplexMatrix& m);
void write_matrix_json(const std::string& path, const ComplexMatrix& m);

// Symbol files: {"coeffs": [{"n": k, "re": x, "im": y}, ...]}; repeated
// exponents are rejected.
SymbolSpec parse_symbol_json(const std::string& text);
SymbolSpec read_symbol_json(const std::string& path);
std::string symbol_to_json(const SymbolSpec& s);
void write_symbol_json(const std::string& path, const SymbolSpec& s);

// Report emitters.  All JSON output is deterministic: object keys are
// sorted and numbers use shortest round-trip formatting, so equal inputs
// produce byte-identical text.
std::string to_json_text(const PencilCertificate& c);
std::string to_json_text(const ClassReport& r);
std::string to_json_text(const BlockDecomposition& d, const BlockCheckReport& r);
std::string to_json_text(const HypoBlockReport& r);
std::string to_json_text(const SpectrumDiagram& d);
std::string to_json_text(const EssentialCandidate& e);
std::string to_json_text(const ToeplitzReport& r);
std::string to_json_text(const HankelReport& r);
std::string to_json_text(const OracleResult& r, const std::string& slack_name);

// Inverse of the SpectrumDiagram emitter; re-emitting the parsed value
// reproduces the input byte for byte.
SpectrumDiagram diagram_from_json(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace opclass
