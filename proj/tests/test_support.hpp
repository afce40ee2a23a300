#pragma once

#include "hyperint/sampling.hpp"

namespace hyperint::fixtures {

using Generator = CaseGenerator;

}  // namespace hyperint::fixtures
