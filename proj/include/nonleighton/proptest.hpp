#pragma once

// Randomised consistency checks over words, normal forms and Smith normal
// form, reproducible from a seed.

#include <cstddef>
#include <cstdint>

#include "nonleighton/report.hpp"

namespace nonleighton {

  Report property_suite(std::uint64_t seed, std::size_t cases);

}  // namespace nonleighton
