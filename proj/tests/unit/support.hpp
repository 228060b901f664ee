#pragma once

#include <string>

#include "lsl/json_io.hpp"
#include "lsl/templates.hpp"

namespace lsl::testing {

inline const char* template_dir() { return LSL_TEMPLATE_DIR; }

inline PeriodicTemplate stored(const std::string& label) { return load_template(template_dir(), label); }

}  // namespace lsl::testing
