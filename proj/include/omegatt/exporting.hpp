#ifndef OMEGATT_EXPORTING_HPP
#define OMEGATT_EXPORTING_HPP

#include <string>

#include "omegatt/synthesis.hpp"

namespace omegatt {

enum class ExportFlavor { Native, Surface };

// Instantiates the generic base type at `type_name` and renders the law.
// The native flavor is the law-file syntax with the base type renamed; it
// re-parses (with the base name supplied) to an alpha-equal law. The surface
// flavor is a best-effort rendering in a generic dependently-typed notation,
// parameterized over the named type; it is for reading, not round-tripping.
std::string export_law(const CompositionLaw& law, const std::string& type_name,
                       ExportFlavor flavor);

}  // namespace omegatt

#endif
